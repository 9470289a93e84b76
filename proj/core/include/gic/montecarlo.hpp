#ifndef GIC_MONTECARLO_HPP
#define GIC_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gic/channel.hpp"
#include "gic/regime.hpp"

namespace gic {

/// I.i.d. draws from the channel law, one named column per variable.
///
/// Columns are (X1, X2, Z1, Z2, Y1, Y2) and, with a genie,
/// (X1, X2, Z1, Z2, W1, W2, Y1, Y2, S1, S2). Generation is deterministic
/// given (seed, n, parameters): the source is std::mt19937_64, uniforms are
/// (x >> 11 + 1) * 2^-53 in (0, 1], and each row consumes exactly six
/// standard normals from the Box-Muller transform in the order
/// (gX1, gX2), (Z1, Z2), (U1, U2). Derived columns are
///
///   X_i = sqrt(p_i) * gX_i
///   W_i = rho_i * Z_i + sqrt(1 - rho_i^2) * U_i
///   Y1  = X1 + h12*X2 + Z1        (and mirrored for Y2)
///   S1  = h21*(X1 + eta1*W1)      (and mirrored for S2)
///
/// so recomputing Y and S from the stored columns with the same expressions
/// reproduces them bit-exactly.
struct SampleBatch {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& column(std::string_view name) const;
    bool has_column(std::string_view name) const;
};

/// Draws n rows; n = 0 throws PreconditionError.
SampleBatch sample(const ChannelParams& params,
                   const std::optional<GenieSpec>& genie, std::size_t n,
                   std::uint64_t seed);

struct MiEstimate {
    Rate estimate = 0.0;
    Rate std_error = 0.0;
};

/// Empirical covariance of the selected columns plugged into the closed-form
/// Gaussian mutual information; the standard error comes from a 10-fold
/// split of the batch. Singular empirical covariance raises
/// DegenerateObservationError.
MiEstimate empirical_mi(const SampleBatch& batch, std::string_view target,
                        const std::vector<std::string>& observed);

/// CSV dump (header row, 17 significant digits, LF line endings).
void dump_batch_csv(const SampleBatch& batch, std::ostream& out);

}  // namespace gic

#endif  // GIC_MONTECARLO_HPP
