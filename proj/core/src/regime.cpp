#include "gic/regime.hpp"

#include <cmath>

namespace gic {

namespace {

// One term of the threshold sum: the gain into the opposite receiver scaled
// by the interference-plus-noise variance seen at the own receiver.
double condition_term(double h_cross, double h_other, double p_other) {
    return std::abs(h_cross) * (1.0 + h_other * h_other * p_other);
}

double asym_condition_value(const ChannelParams& c) {
    return condition_term(c.h12, c.h21, c.p1) + condition_term(c.h21, c.h12, c.p2);
}

}  // namespace

void validate_genie(const GenieSpec& g) {
    const bool etas_ok = std::isfinite(g.eta1) && g.eta1 > 0.0 &&
                         std::isfinite(g.eta2) && g.eta2 > 0.0;
    const bool rhos_ok = g.rho1 >= 0.0 && g.rho1 <= 1.0 && g.rho2 >= 0.0 &&
                         g.rho2 <= 1.0;
    if (!etas_ok || !rhos_ok) {
        throw PreconditionError(
            "genie requires positive finite etas and correlations in [0, 1]");
    }
}

const char* to_string(RegimeKind kind) {
    switch (kind) {
        case RegimeKind::low_interference_exact: return "low_interference_exact";
        case RegimeKind::above_threshold: return "above_threshold";
    }
    return "unknown";
}

bool symmetric_condition(double p, double h) {
    if (!(std::isfinite(p) && p > 0.0) || !std::isfinite(h)) {
        throw PreconditionError("symmetric_condition requires p > 0 and finite h");
    }
    // |h|(1 + h^2 p) == |h + h^3 p|
    return std::abs(h) * (1.0 + h * h * p) <= 0.5;
}

bool asym_condition(const ChannelParams& params) {
    validate(params);
    return asym_condition_value(params) <= 1.0;
}

std::optional<RhoChoice> find_rhos(const ChannelParams& params) {
    validate(params);
    const double a = condition_term(params.h12, params.h21, params.p1);
    const double b = condition_term(params.h21, params.h12, params.p2);
    if (a + b > 1.0) return std::nullopt;

    // cos^2(phi) feasible in [a, 1-b]; equal margins collapse to the exact
    // midpoint so that symmetric inputs get bit-identical rho1 and rho2.
    const double mid = (a == b) ? 0.5 : 0.5 * (a + (1.0 - b));
    RhoChoice choice;
    choice.rho2 = std::sqrt(mid);
    choice.rho1 = std::sqrt(1.0 - mid);
    choice.phi = std::acos(choice.rho2);
    return choice;
}

std::optional<GenieSpec> construct_genie(const ChannelParams& params) {
    validate(params);
    if (!asym_condition(params)) return std::nullopt;
    // Zero cross-gain: the corresponding side information vanishes and the
    // regime is exact without any certificate.
    if (params.h12 == 0.0 || params.h21 == 0.0) return std::nullopt;

    const auto rhos = find_rhos(params);
    GenieSpec g;
    g.rho1 = rhos->rho1;
    g.rho2 = rhos->rho2;
    g.eta1 = (1.0 + params.h12 * params.h12 * params.p2) / g.rho1;
    g.eta2 = (1.0 + params.h21 * params.h21 * params.p1) / g.rho2;
    return g;
}

RegimeLabel classify(const ChannelParams& params) {
    validate(params);
    RegimeLabel label;
    if (symmetric(params)) {
        label.condition_value =
            std::abs(params.h12) * (1.0 + params.h12 * params.h12 * params.p1);
        label.threshold = 0.5;
    } else {
        label.condition_value = asym_condition_value(params);
        label.threshold = 1.0;
    }
    label.kind = label.condition_value <= label.threshold
                     ? RegimeKind::low_interference_exact
                     : RegimeKind::above_threshold;
    return label;
}

GenieChecks genie_checks(const ChannelParams& params, const GenieSpec& genie) {
    validate(params);
    validate_genie(genie);
    GenieChecks out;
    out.useful_margin1 =
        std::sqrt(1.0 - genie.rho2 * genie.rho2) - std::abs(params.h21) * genie.eta1;
    out.useful_margin2 =
        std::sqrt(1.0 - genie.rho1 * genie.rho1) - std::abs(params.h12) * genie.eta2;
    const double smart1 = 1.0 + params.h12 * params.h12 * params.p2;
    const double smart2 = 1.0 + params.h21 * params.h21 * params.p1;
    out.smart_residual1 = std::abs(genie.eta1 * genie.rho1 - smart1) / smart1;
    out.smart_residual2 = std::abs(genie.eta2 * genie.rho2 - smart2) / smart2;
    return out;
}

bool genie_is_useful(const ChannelParams& params, const GenieSpec& genie,
                     double slack) {
    const auto checks = genie_checks(params, genie);
    return checks.useful_margin1 >= -slack && checks.useful_margin2 >= -slack;
}

bool genie_is_smart(const ChannelParams& params, const GenieSpec& genie,
                    double rel_tol) {
    const auto checks = genie_checks(params, genie);
    return checks.smart_residual1 <= rel_tol && checks.smart_residual2 <= rel_tol;
}

}  // namespace gic
