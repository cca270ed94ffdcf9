// Shapes, permutations and the left weak order.
//
// Coordinates: a cell (r, c) has r = 1 for the top row and c = 1 for the
// leftmost column.  A lattice point <r, c> sits on horizontal grid line r
// (line 0 is the top edge of the diagram) and vertical grid line c.  The cell
// (r, c) therefore has corners <r-1, c-1> and <r, c>.
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapless {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    // row length, 0 outside [1, length()]
    int row(int r) const;
    // column length
    int col(int c) const;
    bool contains(int r, int c) const;

    auto operator<=>(const Partition&) const = default;
};

std::vector<Partition> partitions_of(int n);

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }

    bool operator==(const Composition&) const = default;
};

// degree first, then length, then lexicographic
bool canonical_less(const Composition& a, const Composition& b);

struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const { return canonical_less(a, b); }
};

std::vector<Composition> compositions_of(int n);
std::set<int> set_of(const Composition& a);
Composition comp_of_set(const std::set<int>& s, int n);
Composition complement(const Composition& a);

struct GeneralizedComposition {
    std::vector<Composition> blocks;

    GeneralizedComposition() = default;
    explicit GeneralizedComposition(std::vector<Composition> b);

    int size() const;
    int num_blocks() const { return static_cast<int>(blocks.size()); }

    bool operator==(const GeneralizedComposition&) const = default;
};

Composition gc_bullet(const GeneralizedComposition& g);
Composition gc_odot(const GeneralizedComposition& g);
std::vector<Composition> gc_bracket(const GeneralizedComposition& g);
GeneralizedComposition gc_append(const GeneralizedComposition& g, const Composition& b);

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

struct LatticePoint {
    int row = 0;
    int col = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// Cells of the (possibly disconnected) ribbon diagram, sorted row-major.
std::vector<Cell> ribbon_cells(const GeneralizedComposition& g);

// Ribbon columns left to right; each column lists its cells top to bottom.
std::vector<std::vector<Cell>> ribbon_columns(const GeneralizedComposition& g);

struct Permutation {
    std::vector<int> word;  // one-line notation, values 1..m

    Permutation() = default;
    explicit Permutation(std::vector<int> w);

    int rank() const { return static_cast<int>(word.size()); }
    int operator()(int k) const { return word[k - 1]; }

    auto operator<=>(const Permutation&) const = default;
};

Permutation identity(int m);
Permutation longest(int m);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
Permutation left_mult_s(int i, const Permutation& p);  // swaps the values i, i+1
int length(const Permutation& p);
std::set<int> left_descents(const Permutation& p);
bool weak_leq(const Permutation& s, const Permutation& r);
std::vector<Permutation> weak_interval(const Permutation& s, const Permutation& r);
Permutation parabolic_longest(const Composition& a);
std::vector<int> reduced_word(const Permutation& p);
std::vector<Permutation> all_permutations(int m);

std::string to_string(const Composition& a);
std::string to_string(const GeneralizedComposition& g);
std::string to_string(const Permutation& p);
std::string to_string(const Partition& p);

}  // namespace gapless
