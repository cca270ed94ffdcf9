#include "gapless/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace gapless {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw Error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::row(int r) const {
    if (r < 1 || r > length())
        return 0;
    return parts[r - 1];
}

int Partition::col(int c) const {
    int k = 0;
    while (k < length() && parts[k] >= c)
        ++k;
    return c >= 1 ? k : 0;
}

bool Partition::contains(int r, int c) const { return r >= 1 && c >= 1 && c <= row(r); }

static void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

// reverse lexicographic, (n) first
std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n < 0)
        return out;
    partitions_rec(n, n, cur, out);
    return out;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1)
            throw Error("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool canonical_less(const Composition& a, const Composition& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    if (a.length() != b.length())
        return a.length() < b.length();
    return a.parts < b.parts;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n < 0)
        return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1)))
                s.insert(i);
        out.push_back(comp_of_set(s, n));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::set<int> set_of(const Composition& a) {
    std::set<int> s;
    int acc = 0;
    for (int i = 0; i + 1 < a.length(); ++i) {
        acc += a.parts[i];
        s.insert(acc);
    }
    return s;
}

Composition comp_of_set(const std::set<int>& s, int n) {
    if (n == 0) {
        if (!s.empty())
            throw Error("comp_of_set: nonempty set for n = 0");
        return Composition();
    }
    std::vector<int> parts;
    int prev = 0;
    for (int x : s) {
        if (x < 1 || x >= n)
            throw Error("comp_of_set: element " + std::to_string(x) + " outside [1, n-1]");
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(parts);
}

Composition complement(const Composition& a) {
    int n = a.size();
    std::set<int> s = set_of(a), c;
    for (int i = 1; i < n; ++i)
        if (!s.count(i))
            c.insert(i);
    return comp_of_set(c, n);
}

GeneralizedComposition::GeneralizedComposition(std::vector<Composition> b) : blocks(std::move(b)) {
    if (blocks.empty())
        throw Error("generalized composition needs at least one block");
    for (auto& c : blocks)
        if (c.length() == 0)
            throw Error("generalized composition blocks must be nonempty");
}

int GeneralizedComposition::size() const {
    int s = 0;
    for (auto& c : blocks)
        s += c.size();
    return s;
}

Composition gc_bullet(const GeneralizedComposition& g) {
    std::vector<int> parts;
    for (auto& b : g.blocks)
        parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    return Composition(parts);
}

Composition gc_odot(const GeneralizedComposition& g) {
    std::vector<int> parts;
    for (std::size_t k = 0; k < g.blocks.size(); ++k) {
        auto& b = g.blocks[k].parts;
        if (k == 0) {
            parts = b;
            continue;
        }
        parts.back() += b.front();
        parts.insert(parts.end(), b.begin() + 1, b.end());
    }
    return Composition(parts);
}

std::vector<Composition> gc_bracket(const GeneralizedComposition& g) {
    int k = g.num_blocks();
    std::vector<Composition> out;
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> parts = g.blocks[0].parts;
        for (int j = 1; j < k; ++j) {
            auto& b = g.blocks[j].parts;
            if (mask & (1u << (j - 1))) {
                parts.back() += b.front();
                parts.insert(parts.end(), b.begin() + 1, b.end());
            } else {
                parts.insert(parts.end(), b.begin(), b.end());
            }
        }
        out.emplace_back(parts);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GeneralizedComposition gc_append(const GeneralizedComposition& g, const Composition& b) {
    GeneralizedComposition r = g;
    auto& last = r.blocks.back().parts;
    last.insert(last.end(), b.parts.begin(), b.parts.end());
    return r;
}

std::vector<std::vector<Cell>> ribbon_columns(const GeneralizedComposition& g) {
    // Work with a bottom row of 0 for the first column and go upward, then
    // shift so that the top row becomes 1.
    std::vector<int> bottom, height;
    int bot = 0;
    for (std::size_t k = 0; k < g.blocks.size(); ++k) {
        for (std::size_t i = 0; i < g.blocks[k].parts.size(); ++i) {
            int h = g.blocks[k].parts[i];
            if (!bottom.empty()) {
                int prev_top = bottom.back() - height.back() + 1;
                bot = (i == 0) ? prev_top - 1 : prev_top;
            }
            bottom.push_back(bot);
            height.push_back(h);
        }
    }
    int top = 0;
    for (std::size_t j = 0; j < bottom.size(); ++j)
        top = std::min(top, bottom[j] - height[j] + 1);
    std::vector<std::vector<Cell>> cols;
    for (std::size_t j = 0; j < bottom.size(); ++j) {
        std::vector<Cell> col;
        for (int r = bottom[j] - height[j] + 1; r <= bottom[j]; ++r)
            col.push_back({r - top + 1, static_cast<int>(j) + 1});
        cols.push_back(col);
    }
    return cols;
}

std::vector<Cell> ribbon_cells(const GeneralizedComposition& g) {
    std::vector<Cell> cells;
    for (auto& col : ribbon_columns(g))
        cells.insert(cells.end(), col.begin(), col.end());
    std::sort(cells.begin(), cells.end());
    return cells;
}

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
    std::vector<bool> seen(word.size() + 1, false);
    for (int x : word) {
        if (x < 1 || x > static_cast<int>(word.size()) || seen[x])
            throw Error("not a permutation word");
        seen[x] = true;
    }
}

Permutation identity(int m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(w);
}

Permutation longest(int m) {
    std::vector<int> w(m);
    for (int k = 0; k < m; ++k)
        w[k] = m - k;
    return Permutation(w);
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.rank() != b.rank())
        throw Error("compose: rank mismatch");
    std::vector<int> w(b.rank());
    for (int k = 1; k <= b.rank(); ++k)
        w[k - 1] = a(b(k));
    return Permutation(w);
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(p.rank());
    for (int k = 1; k <= p.rank(); ++k)
        w[p(k) - 1] = k;
    return Permutation(w);
}

Permutation left_mult_s(int i, const Permutation& p) {
    Permutation r = p;
    for (int& x : r.word) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return r;
}

int length(const Permutation& p) {
    int inv = 0;
    for (int a = 0; a < p.rank(); ++a)
        for (int b = a + 1; b < p.rank(); ++b)
            if (p.word[a] > p.word[b])
                ++inv;
    return inv;
}

std::set<int> left_descents(const Permutation& p) {
    std::vector<int> pos(p.rank() + 1);
    for (int k = 0; k < p.rank(); ++k)
        pos[p.word[k]] = k;
    std::set<int> d;
    for (int i = 1; i < p.rank(); ++i)
        if (pos[i] > pos[i + 1])
            d.insert(i);
    return d;
}

bool weak_leq(const Permutation& s, const Permutation& r) {
    if (s.rank() != r.rank())
        throw Error("weak_leq: rank mismatch");
    return length(r) == length(s) + length(compose(r, inverse(s)));
}

std::vector<Permutation> weak_interval(const Permutation& s, const Permutation& r) {
    if (!weak_leq(s, r))
        return {};
    std::set<Permutation> seen{s};
    std::deque<Permutation> queue{s};
    while (!queue.empty()) {
        Permutation g = queue.front();
        queue.pop_front();
        std::set<int> d = left_descents(g);
        for (int i = 1; i < g.rank(); ++i) {
            if (d.count(i))
                continue;
            Permutation h = left_mult_s(i, g);
            if (seen.count(h) || !weak_leq(h, r))
                continue;
            seen.insert(h);
            queue.push_back(h);
        }
    }
    return {seen.begin(), seen.end()};
}

Permutation parabolic_longest(const Composition& a) {
    std::vector<int> w;
    int start = 0;
    for (int part : a.parts) {
        for (int k = part; k >= 1; --k)
            w.push_back(start + k);
        start += part;
    }
    return Permutation(w);
}

std::vector<int> reduced_word(const Permutation& p) {
    std::vector<int> word;
    Permutation cur = p;
    for (;;) {
        int k = 0;
        while (k + 1 < cur.rank() && cur.word[k] < cur.word[k + 1])
            ++k;
        if (k + 1 >= cur.rank())
            break;
        std::swap(cur.word[k], cur.word[k + 1]);
        word.push_back(k + 1);
    }
    return word;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<Permutation> out;
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

static std::string join(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            os << sep;
        os << v[k];
    }
    return os.str();
}

std::string to_string(const Composition& a) { return "(" + join(a.parts, ",") + ")"; }

std::string to_string(const Partition& p) { return "(" + join(p.parts, ",") + ")"; }

std::string to_string(const GeneralizedComposition& g) {
    std::string s;
    for (std::size_t k = 0; k < g.blocks.size(); ++k) {
        if (k)
            s += "⊕";
        s += to_string(g.blocks[k]);
    }
    return s;
}

std::string to_string(const Permutation& p) {
    bool wide = p.rank() >= 10;
    return join(p.word, wide ? " " : "");
}

}  // namespace gapless
