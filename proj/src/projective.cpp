#include "gapless/projective.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gapless {

GeneralizedComposition bal_e(const EquivClass& e) {
    const IGLT& src = e.source;
    std::vector<int> d{0};
    for (int x : descents(src))
        d.push_back(x);
    d.push_back(src.max_entry);
    // d[1..k+1] are the strip ends
    std::vector<Composition> blocks{Composition({d[1]})};
    for (std::size_t j = 2; j < d.size(); ++j) {
        int part = d[j] - d[j - 1];
        Cell bot = bot_box(src, d[j - 2] + 1);
        Cell top = top_box(src, d[j]);
        if (bot.col <= top.col)
            blocks.back().parts.push_back(part);
        else
            blocks.push_back(Composition({part}));
    }
    return GeneralizedComposition(blocks);
}

EtaContext eta_context(const EquivClass& e) {
    EtaContext ctx{e, bal_e(e), strips(e), {}};
    ctx.columns = ribbon_columns(ctx.bal);
    if (ctx.columns.size() != ctx.strips.size())
        throw Error("eta_context: strip count differs from the ribbon column count");
    return ctx;
}

std::vector<std::vector<int>> t_of_srt(const EtaContext& ctx, const SRT& t) {
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= ctx.cls.lambda.length(); ++r)
        rows.emplace_back(ctx.cls.lambda.row(r), 0);
    for (std::size_t j = 0; j < ctx.strips.size(); ++j) {
        std::vector<int> eps;
        for (Cell b : ctx.columns[j])
            eps.push_back(t.at(b));
        std::sort(eps.begin(), eps.end());
        const auto& h = ctx.strips[j];
        // connected components, left to right; neighbouring components share
        // one entry
        std::size_t pos = 0;
        for (std::size_t k = 0; k < h.size(); ++k) {
            bool new_component = k > 0 && !(h[k].row == h[k - 1].row && h[k].col == h[k - 1].col + 1);
            if (new_component)
                --pos;
            if (pos >= eps.size())
                throw Error("t_of_srt: strip has more distinct values than its ribbon column");
            rows[h[k].row - 1][h[k].col - 1] = eps[pos++];
        }
        if (pos != eps.size())
            throw Error("t_of_srt: ribbon column has more entries than its strip");
    }
    return rows;
}

std::optional<IGLT> eta(const EtaContext& ctx, const SRT& t) {
    auto rows = t_of_srt(ctx, t);
    if (!is_iglt(ctx.cls.lambda, rows))
        return std::nullopt;
    IGLT s = validate(ctx.cls.lambda, rows);
    if (s.max_entry != ctx.cls.m || signature(s) != ctx.cls.signature)
        return std::nullopt;
    return s;
}

SRT srt_of_t(const EtaContext& ctx, const IGLT& t) {
    SRT s{ctx.bal, ribbon_cells(ctx.bal), {}};
    s.entries.assign(s.cells.size(), 0);
    for (std::size_t j = 0; j < ctx.strips.size(); ++j) {
        std::set<int> vals;
        for (Cell b : ctx.strips[j])
            vals.insert(t.at(b));
        if (vals.size() != ctx.columns[j].size())
            throw Error("srt_of_t: strip values do not fit the ribbon column");
        auto it = vals.begin();
        for (Cell b : ctx.columns[j]) {
            auto k = std::lower_bound(s.cells.begin(), s.cells.end(), b) - s.cells.begin();
            s.entries[k] = *it++;
        }
    }
    if (!is_srt(s))
        throw Error("srt_of_t: result is not a standard ribbon tableau");
    return s;
}

static SRT srt_with_read(const GeneralizedComposition& g, const Permutation& w) {
    for (auto& t : enumerate_srt(g))
        if (lread(t) == w)
            return t;
    throw Error("no SRT of shape " + to_string(g) + " reads as " + to_string(w));
}

SRT bullet_srt(const GeneralizedComposition& g) { return srt_with_read(g, parabolic_longest(gc_bullet(g))); }

SRT odot_srt(const GeneralizedComposition& g) { return srt_with_read(g, parabolic_longest(gc_odot(g))); }

std::vector<SRT> srt_interval(const GeneralizedComposition& g) {
    PModule P = p_module(g);
    SRT lo = bullet_srt(g), hi = odot_srt(g);
    std::size_t a = std::find(P.basis.begin(), P.basis.end(), lo) - P.basis.begin();
    std::size_t b = std::find(P.basis.begin(), P.basis.end(), hi) - P.basis.begin();
    auto reach = reachability(P.module);
    std::vector<SRT> out;
    for (std::size_t k = 0; k < P.basis.size(); ++k)
        if (reach[a][k] && reach[k][b])
            out.push_back(P.basis[k]);
    return out;
}

bool verify_wbim_iso(const EquivClass& e) {
    auto G = g_module_on(e.members, e.m);
    if (!G)
        return false;
    BModule B = b_module(sfread(e, e.source), sfread(e, e.sink));
    if (B.basis.size() != e.members.size())
        return false;
    std::map<Permutation, std::size_t> index;
    for (std::size_t b = 0; b < B.basis.size(); ++b)
        index[B.basis[b]] = b;
    std::vector<Image> f;
    std::set<std::size_t> hit;
    for (auto& t : e.members) {
        auto it = index.find(sfread(e, t));
        if (it == index.end())
            return false;
        f.push_back(it->second);
        hit.insert(it->second);
    }
    if (hit.size() != B.basis.size())
        return false;
    return verify_module_map(*G, B.module, f);
}

CoverReport verify_projective_cover(const EquivClass& e) {
    CoverReport rep;
    EtaContext ctx = eta_context(e);
    rep.bal = ctx.bal;
    PModule P = p_module(ctx.bal);
    auto G = g_module_on(e.members, e.m);
    if (!G)
        return rep;
    rep.dim_srt = P.basis.size();
    rep.dim_class = e.members.size();

    std::map<std::vector<std::vector<int>>, std::size_t> member_index;
    for (std::size_t k = 0; k < e.members.size(); ++k)
        member_index[e.members[k].rows] = k;

    std::vector<Image> f;
    std::set<std::size_t> hit;
    std::vector<std::size_t> kernel;
    for (std::size_t b = 0; b < P.basis.size(); ++b) {
        auto s = eta(ctx, P.basis[b]);
        if (!s) {
            f.push_back(std::nullopt);
            kernel.push_back(b);
            continue;
        }
        auto it = member_index.find(s->rows);
        if (it == member_index.end())
            return rep;
        f.push_back(it->second);
        hit.insert(it->second);
    }
    rep.kernel_size = kernel.size();
    rep.surjective = hit.size() == e.members.size();
    rep.dims_ok = rep.dim_class + rep.kernel_size == rep.dim_srt;
    rep.equivariant = verify_module_map(P.module, *G, f);

    auto interval = srt_interval(ctx.bal);
    std::set<std::vector<int>> in_interval;
    for (auto& t : interval)
        in_interval.insert(t.entries);
    rep.kernel_outside_interval = true;
    for (std::size_t b : kernel)
        if (in_interval.count(P.basis[b].entries))
            rep.kernel_outside_interval = false;

    Permutation lo = sfread(e, e.source), hi = sfread(e, e.sink);
    rep.reads_ok = true;
    for (std::size_t b = 0; b < P.basis.size(); ++b) {
        Permutation w = lread(P.basis[b]);
        if (f[b]) {
            if (w != sfread(e, e.members[*f[b]]))
                rep.reads_ok = false;
        } else if (weak_leq(lo, w) && weak_leq(w, hi)) {
            rep.reads_ok = false;
        }
    }
    return rep;
}

}  // namespace gapless
