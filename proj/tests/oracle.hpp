// Slow reference implementation of the class decomposition.  Paths come from
// searching every up/right lattice path between the end points and keeping
// the ones whose steps all separate smaller entries from larger ones;
// tableaux are then grouped by comparing signatures pairwise.
#pragma once

#include "gapless/equivalence.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using gapless::Cell;
using gapless::IGLT;
using gapless::LatticePoint;

inline long long value(const IGLT& t, int r, int c) {
    if (r < 1 || c < 1)
        return LLONG_MIN;
    if (!t.shape.contains(r, c))
        return LLONG_MAX;
    return t.at(r, c);
}

inline bool separates(long long a, long long b, int i) { return a < i && i <= b; }

inline void search(const IGLT& t, int i, LatticePoint p, LatticePoint goal, std::vector<LatticePoint>& cur,
                   std::vector<std::vector<LatticePoint>>& found) {
    if (p == goal) {
        found.push_back(cur);
        return;
    }
    if (p.row > goal.row && separates(value(t, p.row, p.col), value(t, p.row, p.col + 1), i)) {
        cur.push_back({p.row - 1, p.col});
        search(t, i, cur.back(), goal, cur, found);
        cur.pop_back();
    }
    if (p.col < goal.col && separates(value(t, p.row, p.col + 1), value(t, p.row + 1, p.col + 1), i)) {
        cur.push_back({p.row, p.col + 1});
        search(t, i, cur.back(), goal, cur, found);
        cur.pop_back();
    }
}

// nullopt when the number of admissible paths is not exactly one
inline std::optional<std::set<LatticePoint>> naive_path(const IGLT& t, int i) {
    std::vector<Cell> cells;
    for (int r = 1; r <= t.shape.length(); ++r)
        for (int c = 1; c <= t.shape.row(r); ++c)
            if (t.at(r, c) == i)
                cells.push_back({r, c});
    Cell top = *std::min_element(cells.begin(), cells.end());
    Cell bot = *std::max_element(cells.begin(), cells.end());
    LatticePoint start{bot.row, bot.col - 1}, goal{top.row - 1, top.col};
    std::vector<LatticePoint> cur{start};
    std::vector<std::vector<LatticePoint>> found;
    search(t, i, start, goal, cur, found);
    if (found.size() != 1)
        return std::nullopt;
    return std::set<LatticePoint>(found[0].begin(), found[0].end());
}

using Signature = std::set<std::pair<std::set<LatticePoint>, std::set<Cell>>>;

inline std::optional<Signature> naive_signature(const IGLT& t) {
    Signature s;
    for (int i = 1; i <= t.max_entry; ++i) {
        std::set<Cell> cells;
        for (int r = 1; r <= t.shape.length(); ++r)
            for (int c = 1; c <= t.shape.row(r); ++c)
                if (t.at(r, c) == i)
                    cells.insert({r, c});
        if (cells.size() < 2)
            continue;
        auto path = naive_path(t, i);
        if (!path)
            return std::nullopt;
        s.insert({*path, cells});
    }
    return s;
}

// Group tableaux whose signatures agree; each group is sorted.  Returns
// nullopt if some path is not uniquely determined.
inline std::optional<std::set<std::vector<IGLT>>> naive_classes(const std::vector<IGLT>& all) {
    std::vector<Signature> sig;
    for (auto& t : all) {
        auto s = naive_signature(t);
        if (!s)
            return std::nullopt;
        sig.push_back(*s);
    }
    std::vector<int> group(all.size(), -1);
    int next = 0;
    for (std::size_t a = 0; a < all.size(); ++a) {
        if (group[a] >= 0)
            continue;
        group[a] = next;
        for (std::size_t b = a + 1; b < all.size(); ++b)
            if (group[b] < 0 && sig[a] == sig[b])
                group[b] = next;
        ++next;
    }
    std::vector<std::vector<IGLT>> out(next);
    for (std::size_t a = 0; a < all.size(); ++a)
        out[group[a]].push_back(all[a]);
    std::set<std::vector<IGLT>> result;
    for (auto& g : out) {
        std::sort(g.begin(), g.end());
        result.insert(g);
    }
    return result;
}

struct Agreement {
    bool ok = true;
    long long shapes = 0;
    std::string failure;
};

inline Agreement compare_with_classes(int n) {
    Agreement a;
    for (auto& lambda : gapless::partitions_of(n))
        for (int m = 1; m <= n; ++m) {
            auto all = gapless::enumerate_iglt(lambda, m);
            if (all.empty())
                continue;
            ++a.shapes;
            auto naive = naive_classes(all);
            std::set<std::vector<IGLT>> fast;
            for (auto& e : gapless::classes(lambda, m)) {
                auto members = e.members;
                std::sort(members.begin(), members.end());
                fast.insert(members);
            }
            if (!naive || *naive != fast) {
                a.ok = false;
                if (a.failure.empty())
                    a.failure = "lambda=" + gapless::to_string(lambda) + " m=" + std::to_string(m);
            }
        }
    return a;
}

}  // namespace oracle
