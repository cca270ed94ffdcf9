// Increasing gapless tableaux.
#pragma once

#include "gapless/combinatorics.hpp"

#include <set>
#include <string>
#include <vector>

namespace gapless {

// Value of a cell lookup.  Off-diagram cells with r, c >= 1 read as +inf,
// anything with r < 1 or c < 1 reads as -inf.
struct Entry {
    enum Kind { NegInf, Val, PosInf };
    Kind kind = Val;
    int value = 0;

    bool lt(int x) const { return kind == NegInf || (kind == Val && value < x); }
    bool ge(int x) const { return !lt(x); }
};

struct IGLT {
    Partition shape;
    std::vector<std::vector<int>> rows;
    int max_entry = 0;

    int at(int r, int c) const { return rows[r - 1][c - 1]; }
    int at(Cell b) const { return at(b.row, b.col); }
    Entry lookup(int r, int c) const;
    std::vector<Cell> cells() const;
    std::vector<Cell> cells_of(int v) const;  // sorted row-major

    auto operator<=>(const IGLT&) const = default;
};

struct TableauError : Error {
    enum Kind { ShapeMismatch, NotIncreasing, GapAt };
    Kind kind;
    Cell cell{};
    int value = 0;
    TableauError(Kind k, const std::string& msg, Cell c = {}, int v = 0) : Error(msg), kind(k), cell(c), value(v) {}
};

IGLT validate(const Partition& shape, const std::vector<std::vector<int>>& rows);

// Checks the increasing and gapless conditions without throwing.
bool is_iglt(const Partition& shape, const std::vector<std::vector<int>>& rows);

std::vector<IGLT> enumerate_iglt(const Partition& shape, int m);

Cell top_box(const IGLT& t, int i);
Cell bot_box(const IGLT& t, int i);

std::set<int> descents(const IGLT& t);
Composition descent_composition(const IGLT& t);
bool is_attacking_descent(const IGLT& t, int i);
std::set<int> multi_support(const IGLT& t);

// every i becomes i+1 and vice versa
IGLT swap_values(const IGLT& t, int i);

struct PiResult {
    enum Kind { Fix, Zero, Move };
    Kind kind;
    IGLT image;  // set for Move
};

PiResult pi_act(const IGLT& t, int i);

std::string render(const IGLT& t);

// standard Young tableaux count from the hook length formula
long long hook_length_count(const Partition& shape);

}  // namespace gapless
