#include "gapless/hecke.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gapless {

HeckeModule::HeckeModule(int rank, std::size_t dim, std::vector<std::vector<ActionResult>> table)
    : rank_(rank), dim_(dim), table_(std::move(table)) {
    if (rank < 1)
        throw Error("module rank must be positive");
    if (static_cast<int>(table_.size()) != rank - 1)
        throw Error("action table needs one row per generator");
    for (auto& row : table_) {
        if (row.size() != dim)
            throw Error("action table row has the wrong size");
        for (std::size_t b = 0; b < dim; ++b)
            if (row[b].kind == ActionResult::SendTo && (row[b].target >= dim || row[b].target == b))
                throw Error("SendTo target out of range or equal to its source");
    }
}

Image pi_apply(const HeckeModule& M, int i, Image b) {
    if (!b)
        return b;
    const ActionResult& a = M.act(i, *b);
    switch (a.kind) {
    case ActionResult::Fix:
        return b;
    case ActionResult::Zero:
        return std::nullopt;
    case ActionResult::SendTo:
        return a.target;
    }
    return std::nullopt;
}

Image pi_word_apply(const HeckeModule& M, const std::vector<int>& word, std::size_t b) {
    Image cur = b;
    for (int i : word)
        cur = pi_apply(M, i, cur);
    return cur;
}

namespace {

using FormalSum = std::map<std::size_t, long long>;

FormalSum apply_sum(const HeckeModule& M, int i, const FormalSum& v) {
    FormalSum out;
    for (auto& [b, c] : v) {
        Image r = pi_apply(M, i, b);
        if (r)
            out[*r] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

FormalSum apply_word(const HeckeModule& M, std::initializer_list<int> ops, FormalSum v) {
    // ops are written as an operator product, so the rightmost acts first
    std::vector<int> w(ops);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        v = apply_sum(M, *it, v);
    return v;
}

std::string describe(std::initializer_list<int> lhs, std::initializer_list<int> rhs, std::size_t b) {
    std::ostringstream os;
    for (int i : lhs)
        os << "pi" << i << ' ';
    os << "!= ";
    for (int i : rhs)
        os << "pi" << i << ' ';
    os << "on basis element " << b;
    return os.str();
}

}  // namespace

RelationReport verify_relations(const HeckeModule& M) {
    int m = M.rank();
    for (std::size_t b = 0; b < M.dim(); ++b) {
        FormalSum v{{b, 1}};
        for (int i = 1; i < m; ++i) {
            if (apply_word(M, {i, i}, v) != apply_word(M, {i}, v))
                return {false, describe({i, i}, {i}, b)};
            if (i + 1 < m && apply_word(M, {i, i + 1, i}, v) != apply_word(M, {i + 1, i, i + 1}, v))
                return {false, describe({i, i + 1, i}, {i + 1, i, i + 1}, b)};
            for (int j = i + 2; j < m; ++j)
                if (apply_word(M, {i, j}, v) != apply_word(M, {j, i}, v))
                    return {false, describe({i, j}, {j, i}, b)};
        }
    }
    return {};
}

bool is_triangular(const HeckeModule& M) {
    std::vector<int> indeg(M.dim(), 0);
    for (auto& row : M.table())
        for (auto& a : row)
            if (a.kind == ActionResult::SendTo)
                ++indeg[a.target];
    std::deque<std::size_t> ready;
    for (std::size_t b = 0; b < M.dim(); ++b)
        if (!indeg[b])
            ready.push_back(b);
    std::size_t done = 0;
    while (!ready.empty()) {
        std::size_t b = ready.front();
        ready.pop_front();
        ++done;
        for (auto& row : M.table())
            if (row[b].kind == ActionResult::SendTo && --indeg[row[b].target] == 0)
                ready.push_back(row[b].target);
    }
    return done == M.dim();
}

QSymExpr characteristic(const HeckeModule& M) {
    if (!is_triangular(M))
        throw Error("characteristic: action is not triangular");
    QSymExpr e;
    for (std::size_t b = 0; b < M.dim(); ++b) {
        std::set<int> s;
        for (int i = 1; i < M.rank(); ++i)
            if (M.act(i, b).kind != ActionResult::Fix)
                s.insert(i);
        e.add_term(comp_of_set(s, M.rank()), 1);
    }
    return e;
}

bool verify_module_map(const HeckeModule& M1, const HeckeModule& M2, const std::vector<Image>& f) {
    if (M1.rank() != M2.rank() || f.size() != M1.dim())
        return false;
    for (auto& x : f)
        if (x && *x >= M2.dim())
            return false;
    for (int i = 1; i < M1.rank(); ++i) {
        for (std::size_t b = 0; b < M1.dim(); ++b) {
            Image moved = pi_apply(M1, i, b);
            Image lhs = moved ? f[*moved] : std::nullopt;
            Image rhs = pi_apply(M2, i, f[b]);
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

std::vector<std::vector<bool>> reachability(const HeckeModule& M) {
    std::size_t n = M.dim();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<std::size_t> queue{s};
        reach[s][s] = true;
        while (!queue.empty()) {
            std::size_t b = queue.front();
            queue.pop_front();
            for (auto& row : M.table()) {
                if (row[b].kind != ActionResult::SendTo)
                    continue;
                std::size_t t = row[b].target;
                if (!reach[s][t]) {
                    reach[s][t] = true;
                    queue.push_back(t);
                }
            }
        }
    }
    return reach;
}

std::string to_dot(const HeckeModule& M, const std::function<std::string(std::size_t)>& label) {
    std::ostringstream os;
    os << "digraph hecke {\n";
    os << "  zero [label=\"0\", shape=plaintext];\n";
    for (std::size_t b = 0; b < M.dim(); ++b) {
        std::string l = label(b);
        std::string esc;
        for (char ch : l) {
            if (ch == '"' || ch == '\\')
                esc += '\\';
            if (ch == '\n') {
                esc += "\\n";
                continue;
            }
            esc += ch;
        }
        os << "  n" << b << " [label=\"" << esc << "\"];\n";
    }
    for (int i = 1; i < M.rank(); ++i) {
        for (std::size_t b = 0; b < M.dim(); ++b) {
            const ActionResult& a = M.act(i, b);
            if (a.kind == ActionResult::Fix)
                os << "  n" << b << " -> n" << b << " [label=\"" << i << "\"];\n";
            else if (a.kind == ActionResult::Zero)
                os << "  n" << b << " -> zero [label=\"" << i << "\", style=dashed];\n";
            else
                os << "  n" << b << " -> n" << a.target << " [label=\"" << i << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::optional<HeckeModule> g_module_on(const std::vector<IGLT>& basis, int m) {
    std::map<std::vector<std::vector<int>>, std::size_t> index;
    for (std::size_t b = 0; b < basis.size(); ++b)
        index[basis[b].rows] = b;
    std::vector<std::vector<ActionResult>> table(m > 0 ? m - 1 : 0, std::vector<ActionResult>(basis.size()));
    for (int i = 1; i < m; ++i) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            PiResult r = pi_act(basis[b], i);
            if (r.kind == PiResult::Fix) {
                table[i - 1][b] = ActionResult::fix();
            } else if (r.kind == PiResult::Zero) {
                table[i - 1][b] = ActionResult::zero();
            } else {
                auto it = index.find(r.image.rows);
                if (it == index.end())
                    return std::nullopt;
                table[i - 1][b] = ActionResult::send(it->second);
            }
        }
    }
    return HeckeModule(m, basis.size(), std::move(table));
}

GModule g_module(const Partition& lambda, int m) {
    GModule g;
    g.basis = enumerate_iglt(lambda, m);
    if (g.basis.empty())
        throw Error("g_module: IGLT(" + to_string(lambda) + "; " + std::to_string(m) + ") is empty");
    auto M = g_module_on(g.basis, m);
    if (!M)
        throw Error("g_module: the action left the basis");
    g.module = std::move(*M);
    return g;
}

BModule b_module(const Permutation& sigma, const Permutation& rho) {
    if (!weak_leq(sigma, rho))
        throw Error("b_module: " + to_string(sigma) + " is not below " + to_string(rho) + " in the left weak order");
    BModule B;
    B.basis = weak_interval(sigma, rho);
    std::map<Permutation, std::size_t> index;
    for (std::size_t b = 0; b < B.basis.size(); ++b)
        index[B.basis[b]] = b;
    int m = sigma.rank();
    std::vector<std::vector<ActionResult>> table(m - 1, std::vector<ActionResult>(B.basis.size()));
    for (int i = 1; i < m; ++i) {
        for (std::size_t b = 0; b < B.basis.size(); ++b) {
            const Permutation& g = B.basis[b];
            if (left_descents(g).count(i)) {
                table[i - 1][b] = ActionResult::fix();
                continue;
            }
            auto it = index.find(left_mult_s(i, g));
            table[i - 1][b] = it == index.end() ? ActionResult::zero() : ActionResult::send(it->second);
        }
    }
    B.module = HeckeModule(m, B.basis.size(), std::move(table));
    return B;
}

int SRT::at(Cell b) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), b);
    if (it == cells.end() || *it != b)
        throw Error("SRT: cell outside the ribbon");
    return entries[it - cells.begin()];
}

Cell SRT::cell_of(int v) const {
    for (std::size_t k = 0; k < entries.size(); ++k)
        if (entries[k] == v)
            return cells[k];
    throw Error("SRT: value " + std::to_string(v) + " is absent");
}

namespace {

std::ptrdiff_t find_cell(const std::vector<Cell>& cells, Cell b) {
    auto it = std::lower_bound(cells.begin(), cells.end(), b);
    if (it == cells.end() || *it != b)
        return -1;
    return it - cells.begin();
}

struct SrtFiller {
    std::vector<Cell> cells;
    std::vector<std::ptrdiff_t> left, up;
    std::vector<int> entries;
    std::vector<std::vector<int>> out;

    explicit SrtFiller(std::vector<Cell> c) : cells(std::move(c)), entries(cells.size(), 0) {
        for (Cell b : cells) {
            left.push_back(find_cell(cells, {b.row, b.col - 1}));
            up.push_back(find_cell(cells, {b.row - 1, b.col}));
        }
    }

    void run(int v) {
        if (v > static_cast<int>(cells.size())) {
            out.push_back(entries);
            return;
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (entries[k])
                continue;
            if (left[k] >= 0 && !entries[left[k]])
                continue;
            if (up[k] >= 0 && !entries[up[k]])
                continue;
            entries[k] = v;
            run(v + 1);
            entries[k] = 0;
        }
    }
};

}  // namespace

std::vector<SRT> enumerate_srt(const GeneralizedComposition& g) {
    SrtFiller f(ribbon_cells(g));
    f.run(1);
    std::sort(f.out.begin(), f.out.end());
    std::vector<SRT> res;
    for (auto& e : f.out)
        res.push_back(SRT{g, f.cells, e});
    return res;
}

SRT canonical_srt(const GeneralizedComposition& g) {
    SRT t{g, ribbon_cells(g), {}};
    t.entries.assign(t.cells.size(), 0);
    int v = 1;
    for (auto& col : ribbon_columns(g))
        for (Cell b : col)
            t.entries[find_cell(t.cells, b)] = v++;
    return t;
}

bool is_srt(const SRT& t) {
    int n = static_cast<int>(t.cells.size());
    if (t.entries.size() != t.cells.size() || t.cells != ribbon_cells(t.shape))
        return false;
    std::vector<bool> seen(n + 1, false);
    for (int v : t.entries) {
        if (v < 1 || v > n || seen[v])
            return false;
        seen[v] = true;
    }
    for (std::size_t k = 0; k < t.cells.size(); ++k) {
        Cell b = t.cells[k];
        auto l = find_cell(t.cells, {b.row, b.col - 1});
        auto u = find_cell(t.cells, {b.row - 1, b.col});
        if (l >= 0 && t.entries[l] > t.entries[k])
            return false;
        if (u >= 0 && t.entries[u] > t.entries[k])
            return false;
    }
    return true;
}

Permutation lread(const SRT& t) {
    std::vector<std::size_t> order(t.cells.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (t.cells[a].row != t.cells[b].row)
            return t.cells[a].row > t.cells[b].row;
        return t.cells[a].col < t.cells[b].col;
    });
    std::vector<int> w;
    for (std::size_t k : order)
        w.push_back(t.entries[k]);
    return Permutation(w);
}

std::pair<Permutation, Permutation> lread_interval(const GeneralizedComposition& g) {
    Permutation lo = parabolic_longest(gc_bullet(g));
    Permutation hi = compose(longest(g.size()), parabolic_longest(complement(gc_odot(g))));
    return {lo, hi};
}

std::string render(const SRT& t) {
    int rows = 0, cols = 0;
    for (Cell b : t.cells) {
        rows = std::max(rows, b.row);
        cols = std::max(cols, b.col);
    }
    int width = static_cast<int>(std::to_string(t.cells.size()).size());
    std::ostringstream os;
    for (int r = 1; r <= rows; ++r) {
        std::string line;
        for (int c = 1; c <= cols; ++c) {
            auto k = find_cell(t.cells, {r, c});
            std::string s = k >= 0 ? std::to_string(t.entries[k]) : ".";
            if (c > 1)
                line += ' ';
            line += std::string(width - s.size(), ' ') + s;
        }
        while (!line.empty() && (line.back() == '.' || line.back() == ' '))
            line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

PModule p_module(const GeneralizedComposition& g) {
    PModule P;
    P.shape = g;
    P.basis = enumerate_srt(g);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t b = 0; b < P.basis.size(); ++b)
        index[P.basis[b].entries] = b;
    int n = g.size();
    std::vector<std::vector<ActionResult>> table(n - 1, std::vector<ActionResult>(P.basis.size()));
    for (int i = 1; i < n; ++i) {
        for (std::size_t b = 0; b < P.basis.size(); ++b) {
            const SRT& t = P.basis[b];
            int ri = t.cell_of(i).row, rj = t.cell_of(i + 1).row;
            if (ri < rj) {
                table[i - 1][b] = ActionResult::fix();
            } else if (ri == rj) {
                table[i - 1][b] = ActionResult::zero();
            } else {
                std::vector<int> e = t.entries;
                for (int& v : e)
                    v = v == i ? i + 1 : (v == i + 1 ? i : v);
                table[i - 1][b] = ActionResult::send(index.at(e));
            }
        }
    }
    P.module = HeckeModule(n, P.basis.size(), std::move(table));
    return P;
}

}  // namespace gapless
