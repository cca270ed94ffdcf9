#include "gapless/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace gapless {

Entry IGLT::lookup(int r, int c) const {
    if (r < 1 || c < 1)
        return {Entry::NegInf, 0};
    if (!shape.contains(r, c))
        return {Entry::PosInf, 0};
    return {Entry::Val, at(r, c)};
}

std::vector<Cell> IGLT::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.row(r); ++c)
            out.push_back({r, c});
    return out;
}

std::vector<Cell> IGLT::cells_of(int v) const {
    std::vector<Cell> out;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.row(r); ++c)
            if (at(r, c) == v)
                out.push_back({r, c});
    return out;
}

static void check_shape(const Partition& shape, const std::vector<std::vector<int>>& rows) {
    if (static_cast<int>(rows.size()) != shape.length())
        throw TableauError(TableauError::ShapeMismatch, "row count does not match the shape");
    for (int r = 1; r <= shape.length(); ++r)
        if (static_cast<int>(rows[r - 1].size()) != shape.row(r))
            throw TableauError(TableauError::ShapeMismatch,
                               "row " + std::to_string(r) + " has the wrong length", {r, 0});
}

IGLT validate(const Partition& shape, const std::vector<std::vector<int>>& rows) {
    check_shape(shape, rows);
    int m = 0;
    for (int r = 1; r <= shape.length(); ++r) {
        for (int c = 1; c <= shape.row(r); ++c) {
            int v = rows[r - 1][c - 1];
            bool bad = v < 1 || (c > 1 && rows[r - 1][c - 2] >= v) || (r > 1 && rows[r - 2][c - 1] >= v);
            if (bad)
                throw TableauError(TableauError::NotIncreasing,
                                   "not increasing at (" + std::to_string(r) + "," + std::to_string(c) + ")",
                                   {r, c}, v);
            m = std::max(m, v);
        }
    }
    std::vector<bool> seen(m + 1, false);
    for (auto& row : rows)
        for (int v : row)
            seen[v] = true;
    for (int v = 1; v <= m; ++v)
        if (!seen[v])
            throw TableauError(TableauError::GapAt, "value " + std::to_string(v) + " is missing", {}, v);
    return IGLT{shape, rows, m};
}

bool is_iglt(const Partition& shape, const std::vector<std::vector<int>>& rows) {
    try {
        validate(shape, rows);
        return true;
    } catch (const TableauError&) {
        return false;
    }
}

namespace {

struct Filler {
    const Partition& shape;
    int m;
    std::vector<Cell> order;
    std::vector<std::vector<int>> rows;
    std::vector<int> count;
    std::vector<IGLT> out;

    Filler(const Partition& s, int m_) : shape(s), m(m_), count(m_ + 2, 0) {
        for (int r = 1; r <= shape.length(); ++r) {
            rows.emplace_back(shape.row(r), 0);
            for (int c = 1; c <= shape.row(r); ++c)
                order.push_back({r, c});
        }
    }

    int missing() const {
        int k = 0;
        for (int v = 1; v <= m; ++v)
            if (!count[v])
                ++k;
        return k;
    }

    void run(std::size_t k) {
        if (k == order.size()) {
            if (missing() == 0)
                out.push_back(IGLT{shape, rows, m});
            return;
        }
        // not enough cells left to cover the missing values
        if (static_cast<int>(order.size() - k) < missing())
            return;
        auto [r, c] = order[k];
        int lo = 1;
        if (c > 1)
            lo = std::max(lo, rows[r - 1][c - 2] + 1);
        if (r > 1)
            lo = std::max(lo, rows[r - 2][c - 1] + 1);
        for (int v = lo; v <= m; ++v) {
            rows[r - 1][c - 1] = v;
            ++count[v];
            run(k + 1);
            --count[v];
        }
        rows[r - 1][c - 1] = 0;
    }
};

}  // namespace

std::vector<IGLT> enumerate_iglt(const Partition& shape, int m) {
    if (m < 1 || m > shape.size())
        return {};
    Filler f(shape, m);
    f.run(0);
    return std::move(f.out);
}

Cell top_box(const IGLT& t, int i) {
    auto cs = t.cells_of(i);
    if (cs.empty())
        throw Error("value " + std::to_string(i) + " does not occur");
    return cs.front();
}

Cell bot_box(const IGLT& t, int i) {
    auto cs = t.cells_of(i);
    if (cs.empty())
        throw Error("value " + std::to_string(i) + " does not occur");
    return cs.back();
}

std::set<int> descents(const IGLT& t) {
    std::set<int> d;
    for (int i = 1; i < t.max_entry; ++i)
        if (top_box(t, i).row < bot_box(t, i + 1).row)
            d.insert(i);
    return d;
}

Composition descent_composition(const IGLT& t) { return comp_of_set(descents(t), t.max_entry); }

bool is_attacking_descent(const IGLT& t, int i) {
    if (i < 1 || i >= t.max_entry)
        return false;
    if (top_box(t, i).row >= bot_box(t, i + 1).row)
        return false;
    for (Cell b : t.cells_of(i))
        if (t.shape.contains(b.row + 1, b.col) && t.at(b.row + 1, b.col) == i + 1)
            return true;
    int rb = bot_box(t, i).row;
    for (Cell b : t.cells_of(i + 1))
        if (b.row <= rb)
            return true;
    return false;
}

std::set<int> multi_support(const IGLT& t) {
    std::vector<int> count(t.max_entry + 1, 0);
    for (auto& row : t.rows)
        for (int v : row)
            ++count[v];
    std::set<int> s;
    for (int v = 1; v <= t.max_entry; ++v)
        if (count[v] > 1)
            s.insert(v);
    return s;
}

IGLT swap_values(const IGLT& t, int i) {
    IGLT s = t;
    for (auto& row : s.rows)
        for (int& v : row) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
    return s;
}

PiResult pi_act(const IGLT& t, int i) {
    if (top_box(t, i).row >= bot_box(t, i + 1).row)
        return {PiResult::Fix, {}};
    if (is_attacking_descent(t, i))
        return {PiResult::Zero, {}};
    return {PiResult::Move, swap_values(t, i)};
}

std::string render(const IGLT& t) {
    int width = static_cast<int>(std::to_string(t.max_entry).size());
    std::ostringstream os;
    for (auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string s = std::to_string(row[c]);
            if (c)
                os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

long long hook_length_count(const Partition& shape) {
    long long num = 1, den = 1;
    int n = shape.size();
    for (int k = 2; k <= n; ++k)
        num *= k;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.row(r); ++c)
            den *= (shape.row(r) - c) + (shape.col(c) - r) + 1;
    return num / den;
}

}  // namespace gapless
