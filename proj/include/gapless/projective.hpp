// The ribbon module P attached to a class and its map onto the class module.
#pragma once

#include "gapless/equivalence.hpp"
#include "gapless/hecke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gapless {

GeneralizedComposition bal_e(const EquivClass& e);

struct EtaContext {
    EquivClass cls;
    GeneralizedComposition bal;
    std::vector<std::vector<Cell>> strips;   // by column
    std::vector<std::vector<Cell>> columns;  // columns of the ribbon, top to bottom
};

EtaContext eta_context(const EquivClass& e);

// The filling of the Young diagram read off from an SRT of shape bal_E.
std::vector<std::vector<int>> t_of_srt(const EtaContext& ctx, const SRT& t);
std::optional<IGLT> eta(const EtaContext& ctx, const SRT& t);
SRT srt_of_t(const EtaContext& ctx, const IGLT& t);

SRT bullet_srt(const GeneralizedComposition& g);
SRT odot_srt(const GeneralizedComposition& g);
std::vector<SRT> srt_interval(const GeneralizedComposition& g);

bool verify_wbim_iso(const EquivClass& e);

struct CoverReport {
    GeneralizedComposition bal;
    std::size_t dim_srt = 0;
    std::size_t dim_class = 0;
    std::size_t kernel_size = 0;
    bool surjective = false;
    bool kernel_outside_interval = false;
    bool dims_ok = false;
    bool equivariant = false;
    bool reads_ok = false;  // lread matches sfread off the kernel and leaves the interval on it

    bool ok() const { return surjective && kernel_outside_interval && dims_ok && equivariant && reads_ok; }
};

CoverReport verify_projective_cover(const EquivClass& e);

}  // namespace gapless
