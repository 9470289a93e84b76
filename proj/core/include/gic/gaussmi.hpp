#ifndef GIC_GAUSSMI_HPP
#define GIC_GAUSSMI_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gic/channel.hpp"
#include "gic/regime.hpp"

namespace gic {

/// Zero-mean jointly Gaussian vector given by named coordinates and their
/// covariance matrix. Exact mutual informations between coordinates follow
/// from determinants of sub-blocks; see mi_det below.
struct GaussianVector {
    std::vector<std::string> names;
    Eigen::MatrixXd cov;

    /// Validates symmetry (1e-12 relative), positive semidefiniteness
    /// (eigenvalues >= -1e-10 relative to scale) and name uniqueness.
    /// Throws PreconditionError otherwise.
    static GaussianVector make(std::vector<std::string> names, Eigen::MatrixXd cov);

    /// Index of a named coordinate; throws PreconditionError on unknown name.
    int index(std::string_view name) const;
};

/// Noisy observations E_i = X + N_i, i = 1..m, of a common zero-mean Gaussian
/// signal X with the given variance; noise_cov is the m-by-m covariance of
/// the (arbitrarily correlated) noises N_i.
struct NoisyObservationSet {
    double signal_variance = 1.0;
    Eigen::MatrixXd noise_cov;
};

/// Joint law of (X1, X2, Y1, Y2) and, when a genie is supplied, the side
/// information (S1, S2). Coordinates are named "X1", "X2", "Y1", "Y2", "S1",
/// "S2". All cross-correlations are zero except E[W_i Z_i] = rho_i.
GaussianVector assemble_joint(const ChannelParams& params,
                              const std::optional<GenieSpec>& genie);

/// I(target; observed) in bits, computed through the determinant route
///
///   1/2 log2( det S_obs / det S_obs|target )
///
/// where S_obs|target is the Schur complement of the target coordinate.
/// Observation blocks (plain and conditional) must be strictly positive
/// definite with condition number below 1e12, otherwise
/// DegenerateObservationError is thrown.
Rate mi_det(const GaussianVector& joint, std::string_view target,
            const std::vector<std::string>& observed);

/// Minimum of E[(b'E - X)^2] over combiners with sum(b) = 1; a single KKT
/// solve with one scalar multiplier. Throws DegenerateObservationError when
/// the constraint system is singular or the residual collapses to zero.
double mmse_sigma_sq(const NoisyObservationSet& obs);

/// I(X; E) = 1/2 log2(1 + signal_variance / sigma^2) with sigma^2 the
/// constrained MMSE above. This is the second, independent route to the same
/// mutual information that mi_det computes from the joint covariance.
Rate mi_mmse(const NoisyObservationSet& obs);

/// Rate of a fixed (not optimized) combiner b with sum(b) = 1. Never exceeds
/// mi_mmse on the same observations.
Rate combiner_rate(const NoisyObservationSet& obs, const Eigen::VectorXd& b);

/// I(X1; S1 | Y1) = I(X1; Y1,S1) - I(X1; Y1). Zero (to rounding) exactly when
/// the genie is smart.
Rate cond_mi_smartcheck(const ChannelParams& params, const GenieSpec& genie);

/// Genie-aided sum-capacity bound I(X1;Y1,S1) + I(X2;Y2,S2). Refuses genies
/// that are not useful (InvalidCertificateError): the value is only a proven
/// upper bound under the usefulness hypothesis.
Rate genie_aided_sum_rate(const ChannelParams& params, const GenieSpec& genie);

/// Conditional entropy h(Y_i | S_i) in nats, evaluated two ways: through the
/// closed-form display
///
///   1/2 ln[ 2 pi e (1 - rho^2 + h^2 P_other + P_own (rho-eta)^2 / (P_own + eta^2)) ]
///
/// and through the Schur complement of the assembled joint covariance. The
/// two must agree; both are returned for comparison.
struct CondEntropyPair {
    double formula_nats = 0.0;
    double covariance_nats = 0.0;
};
CondEntropyPair cond_entropy_formula(const ChannelParams& params,
                                     const GenieSpec& genie, int receiver = 1);

}  // namespace gic

#endif  // GIC_GAUSSMI_HPP
