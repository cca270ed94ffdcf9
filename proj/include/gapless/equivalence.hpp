// Lattice paths of repeated entries, the equivalence classes they cut out,
// source and sink tableaux, and standardized reading words.
#pragma once

#include "gapless/combinatorics.hpp"
#include "gapless/hecke.hpp"
#include "gapless/tableau.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gapless {

struct LatticePath {
    // ordered from the lower left end to the upper right end
    std::vector<LatticePoint> vertices;

    std::set<LatticePoint> vertex_set() const { return {vertices.begin(), vertices.end()}; }
    // paths are compared by their vertex sets
    bool operator==(const LatticePath& o) const { return vertex_set() == o.vertex_set(); }
};

// Orders a vertex set into an up/right path; throws if the set is not one.
LatticePath path_from_set(const std::set<LatticePoint>& v);

// True if consecutive vertices differ by one step up or one step right.
bool is_staircase(const LatticePath& p);

LatticePath gamma(const IGLT& t, int i);

using SignatureEntry = std::pair<std::vector<LatticePoint>, std::vector<Cell>>;
using ClassSignature = std::vector<SignatureEntry>;

ClassSignature signature(const IGLT& t);

struct EquivClass {
    Partition lambda;
    int m = 0;
    std::vector<IGLT> members;
    ClassSignature signature;
    IGLT source;
    IGLT sink;
};

std::vector<EquivClass> classes(const Partition& lambda, int m);

// The class of t, built as the pi-closure of source_of(t).
EquivClass class_of(const IGLT& t);

std::map<int, LatticePath> tilde_gammas(const IGLT& t);
LatticePath tilde_gamma(const IGLT& t, int i);
std::map<int, int> sfp_initial_labels(const IGLT& t);
std::map<int, int> sfp_labels(const IGLT& t);

struct Regions {
    std::vector<std::vector<Cell>> first;   // D^(1)_u, u = 1..|I(T)|
    std::vector<std::vector<Cell>> second;  // D^(2)_u
};

Regions source_regions(const IGLT& t);
IGLT source_of(const IGLT& t);

std::map<int, LatticePath> hat_gammas(const IGLT& t);
LatticePath hat_gamma(const IGLT& t, int i);
std::map<int, int> sfq_initial_labels(const IGLT& t);
std::map<int, int> sfq_labels(const IGLT& t);
Regions sink_regions(const IGLT& t);
IGLT sink_of(const IGLT& t);

struct PredicatePair {
    bool by_definition = false;
    bool by_characterization = false;
};

PredicatePair is_source(const IGLT& t);
PredicatePair is_sink(const IGLT& t);

// Horizontal strips of the source tableau, each sorted by column.
std::vector<std::vector<Cell>> strips(const EquivClass& e);
Permutation sfread(const EquivClass& e, const IGLT& t);

struct PosetIsoReport {
    bool ok = true;
    std::string witness;
    std::vector<Permutation> image;  // sfread of each member, in member order
};

PosetIsoReport class_poset_iso(const EquivClass& e);

}  // namespace gapless
