#include "gapless/suite.hpp"

#include "gapless/parallel.hpp"

#include <sstream>

namespace gapless {

namespace {

struct Job {
    Partition lambda;
    int m;
};

std::vector<Job> jobs_of(int n) {
    std::vector<Job> jobs;
    for (auto& lambda : partitions_of(n))
        for (int m = 1; m <= n; ++m)
            jobs.push_back({lambda, m});
    return jobs;
}

std::string where(const Partition& lambda, int m) {
    return "lambda=" + to_string(lambda) + " m=" + std::to_string(m);
}

}  // namespace

CheckResult check_relations(int n) {
    auto jobs = jobs_of(n);
    std::vector<CheckResult> res(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t k) {
        auto& [lambda, m] = jobs[k];
        try {
            auto basis = enumerate_iglt(lambda, m);
            if (basis.empty())
                return;
            GModule G = g_module(lambda, m);
            auto rep = verify_relations(G.module);
            res[k].cases = 1;
            if (!rep.ok)
                res[k].fail(where(lambda, m) + ": " + rep.witness);
        } catch (const std::exception& e) {
            res[k].fail(where(lambda, m) + ": " + e.what());
        }
    });
    CheckResult total;
    for (auto& r : res)
        total.merge(r);
    return total;
}

CheckResult check_characteristic(int n) {
    auto parts = partitions_of(n);
    std::vector<CheckResult> res(parts.size());
    parallel_for(parts.size(), [&](std::size_t k) {
        const Partition& lambda = parts[k];
        try {
            QSymExpr sum;
            for (int m = 1; m <= n; ++m)
                if (!enumerate_iglt(lambda, m).empty())
                    sum += characteristic(g_module(lambda, m).module);
            res[k].cases = 1;
            QSymExpr direct = genomic_schur(lambda);
            if (sum != direct)
                res[k].fail("lambda=" + to_string(lambda) + ": " + to_string(sum) + " vs " + to_string(direct));
        } catch (const std::exception& e) {
            res[k].fail("lambda=" + to_string(lambda) + ": " + e.what());
        }
    });
    CheckResult total;
    for (auto& r : res)
        total.merge(r);
    return total;
}

ClassReport check_class(const EquivClass& e) {
    ClassReport r;
    auto note = [&](const std::string& s) {
        if (r.failure.empty())
            r.failure = s;
    };
    auto G = g_module_on(e.members, e.m);
    r.closed = G.has_value();
    if (!r.closed)
        note("class not closed under the action");

    // exactly one source and one sink, both predicates agree, and the
    // algorithms land on them from every member
    int sources = 0, sinks = 0;
    bool agree = true, algos = true;
    const IGLT* src = nullptr;
    const IGLT* snk = nullptr;
    for (auto& t : e.members) {
        PredicatePair ps = is_source(t), pk = is_sink(t);
        if (ps.by_definition != ps.by_characterization || pk.by_definition != pk.by_characterization)
            agree = false;
        if (ps.by_definition) {
            ++sources;
            src = &t;
        }
        if (pk.by_definition) {
            ++sinks;
            snk = &t;
        }
    }
    if (sources == 1 && sinks == 1) {
        for (auto& t : e.members) {
            try {
                if (source_of(t) != *src || sink_of(t) != *snk)
                    algos = false;
            } catch (const std::exception& ex) {
                algos = false;
                note(ex.what());
            }
        }
    }
    r.source_sink = agree && sources == 1 && sinks == 1 && algos && src && e.source == *src && e.sink == *snk;
    if (!r.source_sink) {
        std::ostringstream os;
        os << "sources=" << sources << " sinks=" << sinks << " predicates_agree=" << agree
           << " algorithms_agree=" << algos;
        note(os.str());
    }

    try {
        auto iso = class_poset_iso(e);
        r.poset_iso = iso.ok;
        if (!iso.ok)
            note("poset iso: " + iso.witness);
        r.wbim_iso = verify_wbim_iso(e);
        if (!r.wbim_iso)
            note("module iso with the weak interval failed");
        r.cover_report = verify_projective_cover(e);
        bool section = true;
        EtaContext ctx = eta_context(e);
        for (auto& t : e.members) {
            auto back = eta(ctx, srt_of_t(ctx, t));
            if (!back || *back != t)
                section = false;
        }
        r.cover = r.cover_report.ok() && section;
        if (!r.cover)
            note("projective cover check failed");
    } catch (const std::exception& ex) {
        note(ex.what());
    }
    return r;
}

StructureResult check_structure(int n) {
    auto jobs = jobs_of(n);
    std::vector<StructureResult> res(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t k) {
        auto& [lambda, m] = jobs[k];
        StructureResult& s = res[k];
        std::vector<EquivClass> cls;
        try {
            cls = classes(lambda, m);
        } catch (const std::exception& e) {
            s.closure.fail(where(lambda, m) + ": " + e.what());
            return;
        }
        for (auto& e : cls) {
            ++s.classes;
            ClassReport r = check_class(e);
            std::string at = where(lambda, m) + " source " + render(e.source) + ": " + r.failure;
            for (auto* c : {&s.closure, &s.source_sink, &s.poset_iso, &s.wbim_iso, &s.cover})
                ++c->cases;
            if (!r.closed)
                s.closure.fail(at);
            if (!r.source_sink)
                s.source_sink.fail(at);
            if (!r.poset_iso)
                s.poset_iso.fail(at);
            if (!r.wbim_iso)
                s.wbim_iso.fail(at);
            if (!r.cover)
                s.cover.fail(at);
        }
    });
    StructureResult total;
    for (auto& s : res) {
        total.classes += s.classes;
        total.closure.merge(s.closure);
        total.source_sink.merge(s.source_sink);
        total.poset_iso.merge(s.poset_iso);
        total.wbim_iso.merge(s.wbim_iso);
        total.cover.merge(s.cover);
    }
    return total;
}

CheckResult check_two_row(int n) {
    CheckResult r;
    for (auto& lambda : partitions_of(n)) {
        if (lambda.length() > 2)
            continue;
        ++r.cases;
        QSymExpr a = two_row_expansion(lambda), b = genomic_schur(lambda);
        if (a != b)
            r.fail("lambda=" + to_string(lambda) + ": " + to_string(a) + " vs " + to_string(b));
    }
    return r;
}

}  // namespace gapless
