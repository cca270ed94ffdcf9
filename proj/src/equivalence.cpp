#include "gapless/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gapless {

using PointSet = std::set<LatticePoint>;

LatticePath path_from_set(const PointSet& v) {
    LatticePath p{{v.begin(), v.end()}};
    std::sort(p.vertices.begin(), p.vertices.end(), [](LatticePoint a, LatticePoint b) {
        if (a.row != b.row)
            return a.row > b.row;
        return a.col < b.col;
    });
    if (!is_staircase(p))
        throw Error("vertex set is not an up/right lattice path");
    return p;
}

bool is_staircase(const LatticePath& p) {
    if (p.vertices.empty())
        return false;
    for (std::size_t k = 1; k < p.vertices.size(); ++k) {
        LatticePoint a = p.vertices[k - 1], b = p.vertices[k];
        bool up = b.row == a.row - 1 && b.col == a.col;
        bool right = b.row == a.row && b.col == a.col + 1;
        if (!up && !right)
            return false;
    }
    return true;
}

namespace {

// i lies between the entries on either side of the unit segment
bool up_step_ok(const IGLT& t, int i, LatticePoint p) {
    return t.lookup(p.row, p.col).lt(i) && t.lookup(p.row, p.col + 1).ge(i);
}

bool right_step_ok(const IGLT& t, int i, LatticePoint p) {
    return t.lookup(p.row, p.col + 1).lt(i) && t.lookup(p.row + 1, p.col + 1).ge(i);
}

struct Ends {
    Cell top, bot;
};

Ends ends(const IGLT& t, int i) { return {top_box(t, i), bot_box(t, i)}; }

}  // namespace

LatticePath gamma(const IGLT& t, int i) {
    auto cs = t.cells_of(i);
    if (cs.size() < 2)
        throw Error("gamma: value " + std::to_string(i) + " does not repeat");
    Cell top = cs.front(), bot = cs.back();
    LatticePoint cur{bot.row, bot.col - 1}, end{top.row - 1, top.col};
    LatticePath path{{cur}};
    while (cur != end) {
        bool up = cur.row > end.row && up_step_ok(t, i, cur);
        bool right = cur.col < end.col && right_step_ok(t, i, cur);
        if (up == right)
            throw Error("gamma: no unique step for value " + std::to_string(i));
        cur = up ? LatticePoint{cur.row - 1, cur.col} : LatticePoint{cur.row, cur.col + 1};
        path.vertices.push_back(cur);
    }
    return path;
}

ClassSignature signature(const IGLT& t) {
    ClassSignature s;
    for (int i : multi_support(t)) {
        auto v = gamma(t, i).vertex_set();
        s.emplace_back(std::vector<LatticePoint>(v.begin(), v.end()), t.cells_of(i));
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<EquivClass> classes(const Partition& lambda, int m) {
    std::map<ClassSignature, std::vector<IGLT>> groups;
    for (auto& t : enumerate_iglt(lambda, m))
        groups[signature(t)].push_back(t);
    std::vector<EquivClass> out;
    for (auto& [sig, members] : groups) {
        EquivClass e;
        e.lambda = lambda;
        e.m = m;
        e.members = members;
        e.signature = sig;
        e.source = source_of(members.front());
        e.sink = sink_of(members.front());
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const EquivClass& a, const EquivClass& b) { return a.source < b.source; });
    return out;
}

EquivClass class_of(const IGLT& t) {
    EquivClass e;
    e.lambda = t.shape;
    e.m = t.max_entry;
    e.signature = signature(t);
    e.source = source_of(t);
    e.sink = sink_of(t);
    std::set<IGLT> seen{e.source};
    std::deque<IGLT> queue{e.source};
    while (!queue.empty()) {
        IGLT cur = queue.front();
        queue.pop_front();
        for (int i = 1; i < cur.max_entry; ++i) {
            PiResult r = pi_act(cur, i);
            if (r.kind == PiResult::Move && seen.insert(r.image).second)
                queue.push_back(r.image);
        }
    }
    e.members.assign(seen.begin(), seen.end());
    return e;
}

namespace {

void add_hline(PointSet& v, int row, int c0, int c1) {
    for (int c = c0; c <= c1; ++c)
        v.insert({row, c});
}

void add_vline(PointSet& v, int col, int r0, int r1) {
    for (int r = r0; r <= r1; ++r)
        v.insert({r, col});
}

constexpr int kSpliceLimit = 10000;

}  // namespace

std::map<int, LatticePath> tilde_gammas(const IGLT& t) {
    std::set<int> I = multi_support(t);
    std::map<int, PointSet> prime;
    for (int j : I) {
        Ends e = ends(t, j);
        PointSet v = gamma(t, j).vertex_set();
        add_hline(v, e.bot.row, 0, e.bot.col - 1);
        int r = e.top.row - 1;
        int len = r == 0 ? t.shape.row(1) : t.shape.row(r);
        add_hline(v, r, e.top.col, len);
        prime[j] = std::move(v);
    }
    std::map<int, LatticePath> out;
    for (int i : I) {
        PointSet v = prime[i];
        for (int guard = 0;; ++guard) {
            if (guard > kSpliceLimit)
                throw Error("tilde_gamma: splice loop did not terminate");
            int rt = v.begin()->row;
            int ct = v.begin()->col;
            int j0 = -1;
            for (int j : I) {
                bool above = false, below = false;
                for (LatticePoint p : prime[j]) {
                    if (p.col <= ct)
                        continue;
                    above |= p.row < rt;
                    below |= p.row > rt;
                }
                if (above && below) {
                    j0 = j;
                    break;
                }
            }
            if (j0 < 0)
                break;
            int c0 = -1;
            for (LatticePoint p : prime[j0])
                if (p.row == rt && (c0 < 0 || p.col < c0))
                    c0 = p.col;
            PointSet nv;
            for (LatticePoint p : v)
                if (!(p.row == rt && p.col >= c0))
                    nv.insert(p);
            for (LatticePoint p : prime[j0])
                if (p.row <= rt && p.col >= c0)
                    nv.insert(p);
            v = std::move(nv);
        }
        out[i] = path_from_set(v);
    }
    return out;
}

LatticePath tilde_gamma(const IGLT& t, int i) {
    if (!multi_support(t).count(i))
        throw Error("tilde_gamma: value " + std::to_string(i) + " does not repeat");
    return tilde_gammas(t).at(i);
}

namespace {

// Labels 1..k from a pairwise "comes first" relation; throws unless the
// relation is a strict total order.
template <class Before>
std::map<int, int> rank_by(const std::set<int>& I, Before before) {
    std::map<int, int> label;
    for (int i : I) {
        int k = 1;
        for (int j : I)
            if (j != i && before(j, i))
                ++k;
        label[i] = k;
    }
    std::set<int> used;
    for (auto& [i, k] : label)
        used.insert(k);
    if (used.size() != I.size())
        throw Error("initial labels are not a bijection");
    return label;
}

// Swap neighbouring labels whose paths cross, restarting from k = 1.
template <class Crosses>
std::map<int, int> relabel(std::map<int, int> p, Crosses crosses) {
    int n = static_cast<int>(p.size());
    std::map<int, int> inv;
    for (auto& [i, k] : p)
        inv[k] = i;
    int swaps = 0;
    int k = 1;
    while (k < n) {
        int a = inv[k], b = inv[k + 1];
        if (crosses(b, a)) {
            p[a] = k + 1;
            p[b] = k;
            inv[k] = b;
            inv[k + 1] = a;
            if (++swaps > 100000)
                throw Error("relabel: too many swaps");
            k = 1;
        } else {
            ++k;
        }
    }
    return p;
}

bool is_below(const PointSet& v, Cell b) {
    for (LatticePoint p : v)
        if (p.row < b.row && p.col == b.col - 1 && v.count({p.row, b.col}))
            return true;
    return false;
}

bool is_right_of(const PointSet& v, Cell b) {
    for (LatticePoint p : v)
        if (p.row == b.row - 1 && p.col < b.col && v.count({b.row, p.col}))
            return true;
    return false;
}

std::map<int, PointSet> as_sets(const std::map<int, LatticePath>& paths) {
    std::map<int, PointSet> s;
    for (auto& [i, p] : paths)
        s[i] = p.vertex_set();
    return s;
}

std::map<int, int> source_initial(const IGLT& t, const std::map<int, PointSet>& V) {
    std::set<int> I = multi_support(t);
    return rank_by(I, [&](int i, int j) {
        int ri = bot_box(t, i).row, rj = bot_box(t, j).row;
        if (ri != rj)
            return ri < rj;
        const PointSet &vi = V.at(i), &vj = V.at(j);
        PointSet x;
        for (LatticePoint p : vi)
            if (vj.count(p))
                x.insert(p);
        // lowest divergence point, leftmost in its row
        const LatticePoint* best = nullptr;
        for (const LatticePoint& p : x) {
            if (x.count({p.row - 1, p.col}) || x.count({p.row, p.col + 1}))
                continue;
            if (!best || p.row > best->row || (p.row == best->row && p.col < best->col))
                best = &p;
        }
        if (!best)
            return i < j;
        bool i_up = vi.count({best->row - 1, best->col}) > 0;
        bool j_up = vj.count({best->row - 1, best->col}) > 0;
        if (i_up == j_up)
            return i < j;
        return i_up;
    });
}

std::map<int, int> sink_initial(const IGLT& t, const std::map<int, PointSet>& V) {
    std::set<int> I = multi_support(t);
    return rank_by(I, [&](int i, int j) {
        int ci = top_box(t, i).col, cj = top_box(t, j).col;
        if (ci != cj)
            return ci < cj;
        const PointSet &vi = V.at(i), &vj = V.at(j);
        PointSet x;
        for (LatticePoint p : vi)
            if (vj.count(p))
                x.insert(p);
        // highest divergence point, rightmost in its row
        const LatticePoint* best = nullptr;
        for (const LatticePoint& p : x) {
            if (x.count({p.row, p.col - 1}) || x.count({p.row + 1, p.col}))
                continue;
            if (!best || p.row < best->row || (p.row == best->row && p.col > best->col))
                best = &p;
        }
        if (!best)
            return i < j;
        bool i_left = vi.count({best->row, best->col - 1}) > 0;
        bool j_left = vj.count({best->row, best->col - 1}) > 0;
        if (i_left == j_left)
            return i < j;
        return i_left;
    });
}

// Gamma-tilde of j crosses the bottom path of Gamma-tilde of i.
bool crosses_bottom(const IGLT& t, const PointSet& vj, int i) {
    Cell b = bot_box(t, i);
    bool above = false, below = false;
    for (LatticePoint p : vj) {
        if (p.col >= b.col)
            continue;
        above |= p.row < b.row;
        below |= p.row > b.row;
    }
    return above && below;
}

// Gamma-hat of j crosses the rightmost path of Gamma-hat of i.
bool crosses_rightmost(const IGLT& t, const PointSet& vj, int i) {
    Cell top = top_box(t, i);
    bool left = false, right = false;
    for (LatticePoint p : vj) {
        if (p.row >= top.row)
            continue;
        left |= p.col < top.col;
        right |= p.col > top.col;
    }
    return left && right;
}

std::map<int, int> inverse_labels(const std::map<int, int>& lab) {
    std::map<int, int> inv;
    for (auto& [i, k] : lab)
        inv[k] = i;
    return inv;
}

template <class Inside>
Regions regions(const IGLT& t, const std::map<int, PointSet>& V, const std::map<int, int>& labels, Inside in_region) {
    auto inv = inverse_labels(labels);
    Regions R;
    std::set<Cell> covered;
    auto all = t.cells();
    for (int u = 1; u <= static_cast<int>(labels.size()); ++u) {
        int i = inv.at(u);
        const PointSet& v = V.at(i);
        std::vector<Cell> d1;
        for (Cell b : all)
            if (in_region(v, b) && !covered.count(b))
                d1.push_back(b);
        for (Cell b : all)
            if (in_region(v, b))
                covered.insert(b);
        auto d2 = t.cells_of(i);
        covered.insert(d2.begin(), d2.end());
        R.first.push_back(d1);
        R.second.push_back(d2);
    }
    return R;
}

template <class Less>
IGLT fill_regions(const IGLT& t, const Regions& R, Less order) {
    std::vector<std::vector<int>> rows;
    for (auto& r : t.rows)
        rows.emplace_back(r.size(), 0);
    int next = 1;
    for (std::size_t u = 0; u < R.first.size(); ++u) {
        auto d1 = R.first[u];
        std::sort(d1.begin(), d1.end(), order);
        for (Cell b : d1)
            rows[b.row - 1][b.col - 1] = next++;
        for (Cell b : R.second[u])
            rows[b.row - 1][b.col - 1] = next;
        ++next;
    }
    auto rest = t.cells();
    std::sort(rest.begin(), rest.end(), order);
    for (Cell b : rest)
        if (!rows[b.row - 1][b.col - 1])
            rows[b.row - 1][b.col - 1] = next++;
    IGLT out = validate(t.shape, rows);
    if (out.max_entry != t.max_entry)
        throw Error("filling produced the wrong maximal entry");
    return out;
}

bool row_major(Cell a, Cell b) { return a < b; }

bool column_major(Cell a, Cell b) {
    if (a.col != b.col)
        return a.col < b.col;
    return a.row < b.row;
}

}  // namespace

std::map<int, int> sfp_initial_labels(const IGLT& t) { return source_initial(t, as_sets(tilde_gammas(t))); }

std::map<int, int> sfp_labels(const IGLT& t) {
    auto V = as_sets(tilde_gammas(t));
    return relabel(source_initial(t, V), [&](int j, int i) { return crosses_bottom(t, V.at(j), i); });
}

Regions source_regions(const IGLT& t) {
    auto V = as_sets(tilde_gammas(t));
    auto labels = relabel(source_initial(t, V), [&](int j, int i) { return crosses_bottom(t, V.at(j), i); });
    return regions(t, V, labels, [](const PointSet& v, Cell b) { return !is_below(v, b); });
}

IGLT source_of(const IGLT& t) {
    try {
        return fill_regions(t, source_regions(t), row_major);
    } catch (const TableauError& e) {
        throw Error(std::string("source_of: ") + e.what());
    }
}

std::map<int, LatticePath> hat_gammas(const IGLT& t) {
    std::set<int> I = multi_support(t);
    std::map<int, PointSet> prime;
    for (int j : I) {
        Ends e = ends(t, j);
        PointSet v = gamma(t, j).vertex_set();
        add_vline(v, e.top.col, 0, e.top.row - 1);
        int c = e.bot.col - 1;
        int depth = c == 0 ? t.shape.length() : t.shape.col(c);
        add_vline(v, c, e.bot.row, depth);
        prime[j] = std::move(v);
    }
    std::map<int, LatticePath> out;
    for (int i : I) {
        PointSet v = prime[i];
        for (int guard = 0;; ++guard) {
            if (guard > kSpliceLimit)
                throw Error("hat_gamma: splice loop did not terminate");
            int cb = v.begin()->col, rb = -1;
            for (LatticePoint p : v) {
                if (p.col < cb)
                    cb = p.col;
            }
            for (LatticePoint p : v)
                if (p.col == cb && (rb < 0 || p.row < rb))
                    rb = p.row;
            int j0 = -1;
            for (int j : I) {
                bool left = false, right = false;
                for (LatticePoint p : prime[j]) {
                    if (p.row <= rb)
                        continue;
                    left |= p.col < cb;
                    right |= p.col > cb;
                }
                if (left && right) {
                    j0 = j;
                    break;
                }
            }
            if (j0 < 0)
                break;
            int r0 = -1;
            for (LatticePoint p : prime[j0])
                if (p.col == cb && (r0 < 0 || p.row < r0))
                    r0 = p.row;
            PointSet nv;
            for (LatticePoint p : v)
                if (!(p.col == cb && p.row >= r0))
                    nv.insert(p);
            for (LatticePoint p : prime[j0])
                if (p.row >= r0 && p.col <= cb)
                    nv.insert(p);
            v = std::move(nv);
        }
        out[i] = path_from_set(v);
    }
    return out;
}

LatticePath hat_gamma(const IGLT& t, int i) {
    if (!multi_support(t).count(i))
        throw Error("hat_gamma: value " + std::to_string(i) + " does not repeat");
    return hat_gammas(t).at(i);
}

std::map<int, int> sfq_initial_labels(const IGLT& t) { return sink_initial(t, as_sets(hat_gammas(t))); }

std::map<int, int> sfq_labels(const IGLT& t) {
    auto V = as_sets(hat_gammas(t));
    return relabel(sink_initial(t, V), [&](int j, int i) { return crosses_rightmost(t, V.at(j), i); });
}

Regions sink_regions(const IGLT& t) {
    auto V = as_sets(hat_gammas(t));
    auto labels = relabel(sink_initial(t, V), [&](int j, int i) { return crosses_rightmost(t, V.at(j), i); });
    return regions(t, V, labels, [](const PointSet& v, Cell b) { return !is_right_of(v, b); });
}

IGLT sink_of(const IGLT& t) {
    try {
        return fill_regions(t, sink_regions(t), column_major);
    } catch (const TableauError& e) {
        throw Error(std::string("sink_of: ") + e.what());
    }
}

PredicatePair is_source(const IGLT& t) {
    PredicatePair r{true, true};
    // some T' != T with pi_i T' = T
    for (int i = 1; i < t.max_entry; ++i) {
        IGLT s = swap_values(t, i);
        if (!is_iglt(s.shape, s.rows))
            continue;
        PiResult p = pi_act(s, i);
        if (p.kind == PiResult::Move && p.image == t) {
            r.by_definition = false;
            break;
        }
    }
    auto des = descents(t);
    for (int i = 1; i < t.max_entry; ++i) {
        if (des.count(i))
            continue;
        Cell top = top_box(t, i);
        if (!t.shape.contains(top.row, top.col + 1) || t.at(top.row, top.col + 1) != i + 1) {
            r.by_characterization = false;
            break;
        }
    }
    return r;
}

PredicatePair is_sink(const IGLT& t) {
    PredicatePair r{true, true};
    for (int i = 1; i < t.max_entry; ++i) {
        PiResult p = pi_act(t, i);
        if (p.kind == PiResult::Move && p.image != t) {
            r.by_definition = false;
            break;
        }
    }
    for (int i : descents(t)) {
        if (!is_attacking_descent(t, i)) {
            r.by_characterization = false;
            break;
        }
    }
    return r;
}

std::vector<std::vector<Cell>> strips(const EquivClass& e) {
    const IGLT& src = e.source;
    std::vector<int> d{0};
    for (int x : descents(src))
        d.push_back(x);
    d.push_back(src.max_entry);
    std::vector<std::vector<Cell>> out;
    for (std::size_t j = 1; j < d.size(); ++j) {
        std::vector<Cell> h;
        for (Cell b : src.cells())
            if (src.at(b) > d[j - 1] && src.at(b) <= d[j])
                h.push_back(b);
        std::sort(h.begin(), h.end(), column_major);
        out.push_back(h);
    }
    return out;
}

Permutation sfread(const EquivClass& e, const IGLT& t) {
    if (t.shape != e.lambda || t.max_entry != e.m || signature(t) != e.signature)
        throw Error("sfread: tableau is not in the class");
    std::vector<int> w;
    for (auto& h : strips(e)) {
        std::vector<int> part;
        for (auto it = h.rbegin(); it != h.rend(); ++it) {
            int v = t.at(*it);
            if (part.empty() || part.back() != v)
                part.push_back(v);
        }
        w.insert(w.end(), part.begin(), part.end());
    }
    return Permutation(w);
}

PosetIsoReport class_poset_iso(const EquivClass& e) {
    PosetIsoReport rep;
    auto G = g_module_on(e.members, e.m);
    if (!G)
        return {false, "class is not closed under the action", {}};
    for (auto& t : e.members)
        rep.image.push_back(sfread(e, t));
    Permutation lo = sfread(e, e.source), hi = sfread(e, e.sink);
    auto interval = weak_interval(lo, hi);
    std::vector<Permutation> sorted = rep.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return {false, "sfread is not injective", rep.image};
    if (sorted != interval)
        return {false, "sfread image differs from [" + to_string(lo) + ", " + to_string(hi) + "]", rep.image};
    auto reach = reachability(*G);
    for (std::size_t a = 0; a < e.members.size(); ++a)
        for (std::size_t b = 0; b < e.members.size(); ++b)
            if (reach[a][b] != weak_leq(rep.image[a], rep.image[b])) {
                std::ostringstream os;
                os << "order mismatch between members " << a << " and " << b;
                return {false, os.str(), rep.image};
            }
    return rep;
}

}  // namespace gapless
