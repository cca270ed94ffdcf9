// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "big_example.hpp"
#include "oracle.hpp"

#include "gapless/cli.hpp"
#include "gapless/suite.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gapless;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string cli(std::vector<std::string> args) {
    std::istringstream in;
    std::ostringstream out, err;
    run_cli(args, in, out, err);
    return out.str();
}

QSymExpr cli_expand(std::vector<std::string> args) {
    args.insert(args.end(), {"--format", "json"});
    QSymExpr e;
    for (auto& term : nlohmann::json::parse(cli(args)))
        e.add_term(Composition(term["composition"].get<std::vector<int>>()), term["coeff"].get<long long>());
    return e;
}

QSymExpr F(std::vector<int> p) { return fundamental(Composition(std::move(p))); }

Outcome golden_expansions() {
    Outcome o;
    o.require(cli({"expand", "--lambda", "2,2"}) == "U = F(1,1,1) + F(2,2) + F(1,2,1)\n", "U_(2,2) text");
    o.require(cli_expand({"expand", "--lambda", "2,2"}) == F({1, 1, 1}) + F({2, 2}) + F({1, 2, 1}), "U_(2,2)");
    o.require(cli_expand({"expand", "--lambda", "2,1,1"}) ==
                  F({2, 1, 1}) + F({1, 2, 1}) + F({1, 1, 2}) + scale(2, F({1, 1, 1})),
              "U_(2,1,1)");
    o.require(cli_expand({"expand", "--lambda", "2,1,1", "--m", "3"}) == scale(2, F({1, 1, 1})), "U_(2,1,1);3");
    o.require(cli({"expand", "--lambda", "2,1,1", "--m", "3"}) == "2·F(1,1,1)\n", "U_(2,1,1);3 text");
    return o;
}

Outcome big_example() {
    Outcome o;
    IGLT t = big::tableau();
    o.require(multi_support(t) == std::set<int>{17, 21, 27, 29}, "repeated entries");
    o.require(gamma(t, 17) == big::path({{5, 1}, {4, 1}, {4, 2}, {4, 3}, {3, 3}, {3, 4}}), "Gamma_17");
    o.require(sfp_labels(t) == std::map<int, int>{{17, 1}, {27, 2}, {29, 3}, {21, 4}}, "source labels");
    o.require(source_of(t) == big::source(), "source tableau");
    o.require(sfq_labels(big::source()) == std::map<int, int>{{22, 1}, {29, 2}, {23, 3}, {25, 4}}, "sink labels");
    o.require(sink_of(t) == big::sink(), "sink tableau");
    EquivClass e = class_of(big::reading_source());
    o.require(sfread(e, big::reading_source()) ==
                  Permutation({5, 4, 3, 2, 1, 8, 7, 6, 12, 11, 10, 9, 15, 14, 13}),
              "reading word");
    return o;
}

Outcome up_to(int n_max, const std::function<CheckResult(int)>& check) {
    Outcome o;
    for (int n = 1; n <= n_max; ++n) {
        CheckResult r = check(n);
        o.require(r.ok, "n=" + std::to_string(n) + ": " + r.failure);
    }
    return o;
}

Outcome structure(int n_max) {
    Outcome o;
    long long classes = 0;
    for (int n = 1; n <= n_max; ++n) {
        StructureResult s = check_structure(n);
        classes += s.classes;
        const char* names[] = {"closure", "source/sink", "poset iso", "module iso", "projective cover"};
        const CheckResult* parts[] = {&s.closure, &s.source_sink, &s.poset_iso, &s.wbim_iso, &s.cover};
        for (int k = 0; k < 5; ++k)
            o.require(parts[k]->ok, std::string(names[k]) + " n=" + std::to_string(n) + ": " + parts[k]->failure);
    }
    if (o.ok)
        o.detail = std::to_string(classes) + " classes";
    return o;
}

Outcome oracle_agreement(int n_max) {
    Outcome o;
    long long shapes = 0;
    for (int n = 1; n <= n_max; ++n) {
        auto a = oracle::compare_with_classes(n);
        shapes += a.shapes;
        o.require(a.ok, a.failure);
    }
    if (o.ok)
        o.detail = std::to_string(shapes) + " (lambda, m) pairs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"golden expansions", golden_expansions},
        {"large example suite", big_example},
        {"relations, n <= 8", [] { return up_to(8, check_relations); }},
        {"characteristic, n <= 8", [] { return up_to(8, check_characteristic); }},
        {"structure per class, n <= 7", [] { return structure(7); }},
        {"two-row expansion, n <= 8", [] { return up_to(8, check_two_row); }},
        {"oracle equivalence, n <= 5", [] { return oracle_agreement(5); }},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.ok;
        std::printf("criterion %zu %s: %s (%.2fs)%s%s\n", k + 1, criteria[k].name, o.ok ? "PASS" : "FAIL", secs,
                    o.detail.empty() ? "" : " ", o.detail.c_str());
    }
    return all ? 0 : 1;
}
