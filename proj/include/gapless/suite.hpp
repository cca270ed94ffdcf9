// Exhaustive checks over all shapes of a given size.
#pragma once

#include "gapless/equivalence.hpp"
#include "gapless/projective.hpp"
#include "gapless/qsym.hpp"

#include <string>
#include <vector>

namespace gapless {

struct CheckResult {
    bool ok = true;
    long long cases = 0;
    std::string failure;  // first failure, empty when ok

    void fail(const std::string& why) {
        if (ok)
            failure = why;
        ok = false;
    }
    void merge(const CheckResult& o) {
        cases += o.cases;
        if (!o.ok)
            fail(o.failure);
    }
};

// verify_relations on every G(lambda; m), lambda of n
CheckResult check_relations(int n);

// sum of characteristics against the enumerated genomic Schur function
CheckResult check_characteristic(int n);

struct ClassReport {
    bool closed = false;
    bool source_sink = false;
    bool poset_iso = false;
    bool wbim_iso = false;
    bool cover = false;
    std::string failure;
    CoverReport cover_report;

    bool ok() const { return closed && source_sink && poset_iso && wbim_iso && cover; }
};

ClassReport check_class(const EquivClass& e);

struct StructureResult {
    CheckResult closure, source_sink, poset_iso, wbim_iso, cover;
    long long classes = 0;

    bool ok() const { return closure.ok && source_sink.ok && poset_iso.ok && wbim_iso.ok && cover.ok; }
};

StructureResult check_structure(int n);

// two_row_expansion against genomic_schur for two-row shapes of n
CheckResult check_two_row(int n);

}  // namespace gapless
