#include "gic/bounds.hpp"

#include <cmath>

#include "gic/gaussmi.hpp"
#include "gic/geometry.hpp"

namespace gic {

namespace {

// Single-user rate with the cross signal absorbed into the noise floor.
double tin_term(double p_own, double h_in, double p_other) {
    return 0.5 * std::log2(1.0 + p_own / (1.0 + h_in * h_in * p_other));
}

}  // namespace

Rate tin_sum_rate(const ChannelParams& params) {
    validate(params);
    return tin_term(params.p1, params.h12, params.p2) +
           tin_term(params.p2, params.h21, params.p1);
}

Rate ortho_sum_rate(const ChannelParams& params) {
    validate(params);
    require_symmetric(params);
    return std::log2(1.0 + 2.0 * params.p1);
}

Rate onebit_upper(const ChannelParams& params) {
    validate(params);
    require_symmetric(params);
    const double p = params.p1;
    const double hh = params.h12 * params.h12;
    return std::log2(1.0 + hh * p + p / (1.0 + hh * p));
}

Rate kramer_upper(const ChannelParams& params) {
    validate(params);
    require_symmetric(params);
    const double p = params.p1;
    const double hh = params.h12 * params.h12;
    return 0.5 * std::log2(1.0 + p / (1.0 + hh * p)) + 0.5 * std::log2(1.0 + p);
}

std::optional<Rate> exact_sum_capacity(const ChannelParams& params) {
    validate(params);
    if (!asym_condition(params)) return std::nullopt;
    return tin_sum_rate(params);
}

BoundSet all_bounds(const ChannelParams& params) {
    validate(params);
    // Every bound depends on the gains only through h^2 and |h|; evaluating
    // with absolute gains makes the output bit-identical under sign flips,
    // including the genie-aided route.
    const ChannelParams c{params.p1, params.p2, std::abs(params.h12),
                          std::abs(params.h21)};

    BoundSet out;
    out.regime = classify(c);
    out.tin_lower = tin_sum_rate(c);
    const bool in_regime = out.regime.kind == RegimeKind::low_interference_exact;

    if (symmetric(c)) {
        out.ortho_lower = ortho_sum_rate(c);
        out.onebit_upper = onebit_upper(c);
        out.kramer_upper = kramer_upper(c);
        if (!in_regime) out.tangent_upper = tangent_bound(c).rate;
    }
    if (const auto genie = construct_genie(c)) {
        out.genie_aided_upper = genie_aided_sum_rate(c, *genie);
    }
    if (in_regime) out.exact_capacity = out.tin_lower;
    return out;
}

}  // namespace gic
