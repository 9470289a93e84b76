#ifndef GIC_REGIME_HPP
#define GIC_REGIME_HPP

#include <optional>

#include "gic/channel.hpp"

namespace gic {

/// Genie side-information parameters, one (eta, rho) pair per receiver:
///
///   S1 = h21*(X1 + eta1*W1),   S2 = h12*(X2 + eta2*W2)
///
/// where W_i is unit-variance Gaussian noise with correlation rho_i to the
/// receiver noise Z_i. A symmetric channel uses eta1 == eta2, rho1 == rho2,
/// which reduces S1 to h*X1 + h*eta*W1.
struct GenieSpec {
    double eta1 = 1.0;
    double rho1 = 0.0;
    double eta2 = 1.0;
    double rho2 = 0.0;
};

/// Throws PreconditionError unless etas are positive finite and rhos in [0, 1].
void validate_genie(const GenieSpec& genie);

enum class RegimeKind {
    low_interference_exact,  ///< TIN sum rate is the exact sum capacity
    above_threshold,         ///< only bounds are available
};

/// Where the channel sits relative to the low-interference threshold.
/// For symmetric parameters the scalar is |h|(1+h^2 P) = |h + h^3 P| against
/// threshold 0.5; otherwise |h12|(1+h21^2 P1) + |h21|(1+h12^2 P2) against 1.
struct RegimeLabel {
    RegimeKind kind = RegimeKind::above_threshold;
    double condition_value = 0.0;
    double threshold = 0.0;
};

const char* to_string(RegimeKind kind);

/// Correlation pair produced by the angle construction: rho1 = sin(phi),
/// rho2 = cos(phi) with cos^2(phi) at the midpoint of its feasible interval.
struct RhoChoice {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double phi = 0.0;
};

/// True iff |h|(1 + h^2 p) <= 0.5.
bool symmetric_condition(double p, double h);

/// True iff |h12|(1+h21^2 p1) + |h21|(1+h12^2 p2) <= 1. Agrees exactly with
/// symmetric_condition on symmetric parameters.
bool asym_condition(const ChannelParams& params);

/// Feasible correlation pair for the smart-genie construction, or nullopt
/// when the low-interference condition fails. The feasible interval for
/// cos^2(phi) is [|h12|(1+h21^2 p1), 1 - |h21|(1+h12^2 p2)]; the midpoint is
/// chosen for maximal margin and reproducibility.
std::optional<RhoChoice> find_rhos(const ChannelParams& params);

/// Explicit useful-and-smart genie certifying the low-interference regime.
/// Returns nullopt when the condition fails, and also for zero cross-gains
/// (the side information vanishes there and no genie is needed even though
/// the regime is still exact).
std::optional<GenieSpec> construct_genie(const ChannelParams& params);

RegimeLabel classify(const ChannelParams& params);

/// |h21*eta1| <= sqrt(1-rho2^2) + slack and |h12*eta2| <= sqrt(1-rho1^2) + slack.
bool genie_is_useful(const ChannelParams& params, const GenieSpec& genie,
                     double slack = 1e-12);

/// eta1*rho1 == 1+h12^2 p2 and eta2*rho2 == 1+h21^2 p1 to rel_tol.
bool genie_is_smart(const ChannelParams& params, const GenieSpec& genie,
                    double rel_tol = 1e-12);

/// Signed margins/residuals behind the two predicates, for reporting.
struct GenieChecks {
    double useful_margin1 = 0.0;  ///< sqrt(1-rho2^2) - |h21|*eta1
    double useful_margin2 = 0.0;  ///< sqrt(1-rho1^2) - |h12|*eta2
    double smart_residual1 = 0.0;  ///< |eta1*rho1 - (1+h12^2 p2)| / (1+h12^2 p2)
    double smart_residual2 = 0.0;  ///< |eta2*rho2 - (1+h21^2 p1)| / (1+h21^2 p1)
};
GenieChecks genie_checks(const ChannelParams& params, const GenieSpec& genie);

}  // namespace gic

#endif  // GIC_REGIME_HPP
