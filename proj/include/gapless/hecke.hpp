// Finite 0-Hecke modules given by an action table on a basis.
//
// Every generator pi_i sends a basis vector to itself, to zero, or to another
// basis vector.  The three families in this library (IGLT modules, weak
// Bruhat interval modules, ribbon tableau modules) all have this shape.
#pragma once

#include "gapless/combinatorics.hpp"
#include "gapless/qsym.hpp"
#include "gapless/tableau.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gapless {

struct ActionResult {
    enum Kind { Fix, Zero, SendTo };
    Kind kind = Fix;
    std::size_t target = 0;

    static ActionResult fix() { return {Fix, 0}; }
    static ActionResult zero() { return {Zero, 0}; }
    static ActionResult send(std::size_t b) { return {SendTo, b}; }

    bool operator==(const ActionResult&) const = default;
};

class HeckeModule {
public:
    HeckeModule() = default;
    // table[i - 1][b] is the action of pi_i on basis element b
    HeckeModule(int rank, std::size_t dim, std::vector<std::vector<ActionResult>> table);

    int rank() const { return rank_; }
    std::size_t dim() const { return dim_; }
    const ActionResult& act(int i, std::size_t b) const { return table_[i - 1][b]; }
    std::vector<std::vector<ActionResult>>& table() { return table_; }
    const std::vector<std::vector<ActionResult>>& table() const { return table_; }

private:
    int rank_ = 0;
    std::size_t dim_ = 0;
    std::vector<std::vector<ActionResult>> table_;
};

using Image = std::optional<std::size_t>;  // nullopt is zero

Image pi_apply(const HeckeModule& M, int i, Image b);
// letters are applied left to right
Image pi_word_apply(const HeckeModule& M, const std::vector<int>& word, std::size_t b);

struct RelationReport {
    bool ok = true;
    std::string witness;
};

RelationReport verify_relations(const HeckeModule& M);

// Checks that the SendTo graph has no cycle.
bool is_triangular(const HeckeModule& M);
QSymExpr characteristic(const HeckeModule& M);

// f[b] is the image of basis element b of M1 in M2, nullopt for zero.
bool verify_module_map(const HeckeModule& M1, const HeckeModule& M2, const std::vector<Image>& f);

// Reachability along SendTo edges, reflexive.
std::vector<std::vector<bool>> reachability(const HeckeModule& M);

std::string to_dot(const HeckeModule& M, const std::function<std::string(std::size_t)>& label);

// G on IGLT(lambda; m)
struct GModule {
    std::vector<IGLT> basis;
    HeckeModule module;
};

GModule g_module(const Partition& lambda, int m);

// The same action restricted to a list of tableaux of max entry m.  Returns
// nullopt if some pi_i leaves the list.
std::optional<HeckeModule> g_module_on(const std::vector<IGLT>& basis, int m);

struct BModule {
    std::vector<Permutation> basis;
    HeckeModule module;
};

BModule b_module(const Permutation& sigma, const Permutation& rho);

struct SRT {
    GeneralizedComposition shape;
    std::vector<Cell> cells;  // ribbon_cells(shape)
    std::vector<int> entries;  // entries[k] fills cells[k]

    int at(Cell b) const;
    Cell cell_of(int v) const;

    auto operator<=>(const SRT& o) const { return entries <=> o.entries; }
    bool operator==(const SRT& o) const { return entries == o.entries && shape == o.shape; }
};

std::vector<SRT> enumerate_srt(const GeneralizedComposition& g);
SRT canonical_srt(const GeneralizedComposition& g);
bool is_srt(const SRT& t);
Permutation lread(const SRT& t);
// Ends of the weak interval that lread maps SRT(g) onto.
std::pair<Permutation, Permutation> lread_interval(const GeneralizedComposition& g);
std::string render(const SRT& t);

struct PModule {
    GeneralizedComposition shape;
    std::vector<SRT> basis;
    HeckeModule module;
};

PModule p_module(const GeneralizedComposition& g);

}  // namespace gapless
