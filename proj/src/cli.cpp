#include "gapless/cli.hpp"

#include "gapless/equivalence.hpp"
#include "gapless/hecke.hpp"
#include "gapless/projective.hpp"
#include "gapless/qsym.hpp"
#include "gapless/suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gapless {

using nlohmann::json;

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string lambda;
    int m = -1;  // -1 when --m is absent
    int n_max = 6;
    std::string format = "text";
    std::string out;

    bool has_m() const { return m != -1; }
};

Partition parse_lambda(const std::string& s) {
    if (s.empty())
        throw ParseError("--lambda is required");
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw ParseError("bad part '" + tok + "'");
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad part '" + tok + "' in --lambda");
        }
    }
    try {
        return Partition(parts);
    } catch (const Error& e) {
        throw ParseError(std::string("--lambda: ") + e.what());
    }
}

void check_m(const Partition& lambda, int m) {
    if (m < 1 || m > lambda.size())
        throw ParseError("--m must lie in [1, " + std::to_string(lambda.size()) + "]");
}

json tableau_json(const IGLT& t) { return {{"shape", t.shape.parts}, {"rows", t.rows}}; }

IGLT tableau_from_json(const json& j) {
    try {
        Partition shape(j.at("shape").get<std::vector<int>>());
        auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
        return validate(shape, rows);
    } catch (const json::exception& e) {
        throw ParseError(std::string("tableau JSON: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(std::string("tableau: ") + e.what());
    }
}

IGLT read_tableau(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("stdin is not JSON: ") + e.what());
    }
    return tableau_from_json(j);
}

json qsym_json(const QSymExpr& e) {
    json a = json::array();
    for (auto& [c, k] : e.terms())
        a.push_back({{"composition", c.parts}, {"coeff", k}});
    return a;
}

json gc_json(const GeneralizedComposition& g) {
    json a = json::array();
    for (auto& b : g.blocks)
        a.push_back(b.parts);
    return a;
}

std::string spaced(const Permutation& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.word.size(); ++k)
        os << (k ? " " : "") << p.word[k];
    return os.str();
}

json class_json(const EquivClass& e) {
    json members = json::array();
    for (auto& t : e.members)
        members.push_back(tableau_json(t));
    return {{"lambda", e.lambda.parts},
            {"m", e.m},
            {"members", members},
            {"source", tableau_json(e.source)},
            {"sink", tableau_json(e.sink)},
            {"read_source", sfread(e, e.source).word},
            {"read_sink", sfread(e, e.sink).word}};
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (auto* f : allowed)
        if (o.format == f)
            return;
    throw ParseError("--format " + o.format + " is not available for this command");
}

int cmd_iglt(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "dot"});
    Partition lambda = parse_lambda(o.lambda);
    std::vector<int> ms;
    if (o.has_m()) {
        check_m(lambda, o.m);
        ms.push_back(o.m);
    } else {
        for (int m = 1; m <= lambda.size(); ++m)
            ms.push_back(m);
    }
    if (o.format == "dot") {
        if (!o.has_m())
            throw ParseError("--format dot needs --m");
        auto basis = enumerate_iglt(lambda, o.m);
        if (basis.empty()) {
            out << "digraph hecke {\n}\n";
            return 0;
        }
        GModule G = g_module(lambda, o.m);
        out << to_dot(G.module, [&](std::size_t b) { return render(G.basis[b]); });
        return 0;
    }
    json all = json::array();
    for (int m : ms) {
        auto ts = enumerate_iglt(lambda, m);
        if (o.format == "json") {
            for (auto& t : ts)
                all.push_back(tableau_json(t));
            continue;
        }
        out << "# m=" << m << ": " << ts.size() << " tableaux\n";
        for (auto& t : ts)
            out << render(t) << '\n';
    }
    if (o.format == "json")
        out << all.dump() << '\n';
    return 0;
}

int cmd_expand(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    Partition lambda = parse_lambda(o.lambda);
    QSymExpr e;
    if (o.has_m()) {
        check_m(lambda, o.m);
        e = genomic_schur_component(lambda, o.m);
    } else {
        e = genomic_schur(lambda);
    }
    if (o.format == "json")
        out << qsym_json(e).dump() << '\n';
    else if (o.has_m())
        out << to_string(e) << '\n';
    else
        out << "U = " << to_string(e) << '\n';
    return 0;
}

int cmd_classes(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    Partition lambda = parse_lambda(o.lambda);
    if (!o.has_m())
        throw ParseError("classes needs --m");
    check_m(lambda, o.m);
    auto cls = classes(lambda, o.m);
    if (o.format == "json") {
        json a = json::array();
        for (auto& e : cls)
            a.push_back(class_json(e));
        out << a.dump() << '\n';
        return 0;
    }
    out << cls.size() << " classes for lambda=" << to_string(lambda) << " m=" << o.m << "\n";
    for (std::size_t k = 0; k < cls.size(); ++k) {
        auto& e = cls[k];
        out << "\nclass " << k + 1 << ": " << e.members.size() << " members, bal_E = " << to_string(bal_e(e))
            << "\nsource\n"
            << render(e.source) << "sink\n"
            << render(e.sink) << "read source: " << spaced(sfread(e, e.source))
            << "\nread sink:   " << spaced(sfread(e, e.sink)) << '\n';
    }
    return 0;
}

int cmd_source_sink(const Options& o, std::istream& in, std::ostream& out, bool source) {
    require_format(o, {"text", "json"});
    IGLT t = read_tableau(in);
    IGLT r = source ? source_of(t) : sink_of(t);
    if (o.format == "json")
        out << tableau_json(r).dump() << '\n';
    else
        out << render(r);
    return 0;
}

int cmd_read(const Options& o, std::istream& in, std::ostream& out) {
    require_format(o, {"text", "json"});
    IGLT t = read_tableau(in);
    EquivClass e = class_of(t);
    Permutation w = sfread(e, t);
    if (o.format == "json")
        out << json(w.word).dump() << '\n';
    else
        out << spaced(w) << '\n';
    return 0;
}

int cmd_bal(const Options& o, std::istream& in, std::ostream& out) {
    require_format(o, {"text", "json"});
    std::vector<EquivClass> cls;
    if (!o.lambda.empty()) {
        Partition lambda = parse_lambda(o.lambda);
        if (!o.has_m())
            throw ParseError("bal with --lambda needs --m");
        check_m(lambda, o.m);
        cls = classes(lambda, o.m);
    } else {
        cls.push_back(class_of(read_tableau(in)));
    }
    json a = json::array();
    for (auto& e : cls) {
        auto g = bal_e(e);
        if (o.format == "json")
            a.push_back(gc_json(g));
        else
            out << to_string(g) << '\n';
    }
    if (o.format == "json")
        out << (cls.size() == 1 && o.lambda.empty() ? a[0] : a).dump() << '\n';
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    if (o.n_max < 1)
        throw ParseError("--n-max must be positive");
    bool all_ok = true;
    json rows = json::array();
    json class_reports = json::array();
    auto word = [](bool b) { return b ? "pass" : "FAIL"; };
    if (o.format == "text")
        out << std::left << std::setw(4) << "n" << std::setw(11) << "relations" << std::setw(16) << "characteristic"
            << std::setw(11) << "structure" << std::setw(9) << "two-row" << "seconds\n";
    std::vector<std::string> failures;
    for (int n = 1; n <= o.n_max; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult rel = check_relations(n);
        CheckResult ch = check_characteristic(n);
        StructureResult st = check_structure(n);
        CheckResult two = check_two_row(n);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = rel.ok && ch.ok && st.ok() && two.ok;
        all_ok = all_ok && ok;
        for (auto* r : {&rel, &ch, &st.closure, &st.source_sink, &st.poset_iso, &st.wbim_iso, &st.cover, &two})
            if (!r->ok)
                failures.push_back("n=" + std::to_string(n) + ": " + r->failure);
        if (o.format == "text") {
            std::ostringstream sec;
            sec << std::fixed << std::setprecision(2) << secs;
            out << std::left << std::setw(4) << n << std::setw(11) << word(rel.ok) << std::setw(16) << word(ch.ok)
                << std::setw(11) << word(st.ok()) << std::setw(9) << word(two.ok) << sec.str() << '\n';
        } else {
            rows.push_back({{"n", n},
                            {"relations", rel.ok},
                            {"characteristic", ch.ok},
                            {"structure", st.ok()},
                            {"two_row", two.ok},
                            {"classes", st.classes},
                            {"seconds", secs}});
            for (auto& lambda : partitions_of(n))
                for (int m = 1; m <= n; ++m)
                    for (auto& e : classes(lambda, m)) {
                        ClassReport r = check_class(e);
                        class_reports.push_back({{"lambda", lambda.parts},
                                                 {"m", m},
                                                 {"source", tableau_json(e.source)},
                                                 {"bal_E", gc_json(r.cover_report.bal)},
                                                 {"dims", {{"srt", r.cover_report.dim_srt}, {"class", r.cover_report.dim_class}}},
                                                 {"kernel_size", r.cover_report.kernel_size},
                                                 {"cover_ok", r.cover},
                                                 {"iso_ok", r.poset_iso && r.wbim_iso}});
                    }
        }
    }
    if (o.format == "json") {
        out << json{{"rows", rows}, {"classes", class_reports}, {"ok", all_ok}}.dump() << '\n';
    } else {
        for (auto& f : failures)
            out << "failure " << f << '\n';
        out << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all_ok ? 0 : 1;
}

int cmd_schur2(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    std::vector<Partition> shapes;
    if (!o.lambda.empty()) {
        Partition lambda = parse_lambda(o.lambda);
        if (lambda.length() > 2)
            throw ParseError("schur2 needs a shape with at most two rows");
        shapes.push_back(lambda);
    } else {
        for (int n = 1; n <= o.n_max; ++n)
            for (auto& p : partitions_of(n))
                if (p.length() <= 2)
                    shapes.push_back(p);
    }
    bool all_ok = true;
    json a = json::array();
    for (auto& lambda : shapes) {
        QSymExpr lhs = genomic_schur(lambda), rhs = two_row_expansion(lambda);
        bool ok = lhs == rhs;
        all_ok = all_ok && ok;
        if (o.format == "json") {
            a.push_back({{"lambda", lambda.parts}, {"genomic", qsym_json(lhs)}, {"schur", qsym_json(rhs)}, {"ok", ok}});
            continue;
        }
        out << to_string(lambda) << ": ";
        bool first = true;
        for (int m = 1; m <= lambda.size(); ++m)
            for (auto& mu : two_row_par(lambda, m)) {
                out << (first ? "" : " + ") << "s" << to_string(mu);
                first = false;
            }
        out << (ok ? "  pass" : "  FAIL") << '\n';
        if (!ok)
            out << "  U = " << to_string(lhs) << "\n  S = " << to_string(rhs) << '\n';
    }
    if (o.format == "json")
        out << a.dump() << '\n';
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"gapless: increasing gapless tableaux and 0-Hecke modules"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--lambda", o.lambda, "partition, comma separated");
        sub->add_option("--m", o.m, "maximal entry");
        sub->add_option("--n-max", o.n_max, "largest size for verify and schur2");
        sub->add_option("--format", o.format, "text, json or dot");
        sub->add_option("--out", o.out, "write output to this file");
    };
    std::map<std::string, CLI::App*> subs;
    for (auto [name, help] : std::initializer_list<std::pair<const char*, const char*>>{
             {"iglt", "list increasing gapless tableaux"},
             {"expand", "genomic Schur function in the fundamental basis"},
             {"classes", "equivalence classes with sources, sinks and readings"},
             {"source", "source of a tableau read from stdin"},
             {"sink", "sink of a tableau read from stdin"},
             {"read", "standardized reading word of a tableau read from stdin"},
             {"bal", "bal_E of the class of a tableau (stdin) or of all classes"},
             {"verify", "run the exhaustive checks up to --n-max"},
             {"schur2", "check the two-row Schur expansion"}}) {
        subs[name] = app.add_subcommand(name, help);
        common(subs[name]);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "cannot open " << o.out << '\n';
            return 2;
        }
        sink = &file;
    }

    try {
        if (subs["iglt"]->parsed())
            return cmd_iglt(o, *sink);
        if (subs["expand"]->parsed())
            return cmd_expand(o, *sink);
        if (subs["classes"]->parsed())
            return cmd_classes(o, *sink);
        if (subs["source"]->parsed())
            return cmd_source_sink(o, in, *sink, true);
        if (subs["sink"]->parsed())
            return cmd_source_sink(o, in, *sink, false);
        if (subs["read"]->parsed())
            return cmd_read(o, in, *sink);
        if (subs["bal"]->parsed())
            return cmd_bal(o, in, *sink);
        if (subs["verify"]->parsed())
            return cmd_verify(o, *sink);
        if (subs["schur2"]->parsed())
            return cmd_schur2(o, *sink);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace gapless
