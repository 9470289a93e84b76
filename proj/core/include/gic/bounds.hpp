#ifndef GIC_BOUNDS_HPP
#define GIC_BOUNDS_HPP

#include <optional>

#include "gic/channel.hpp"
#include "gic/regime.hpp"

namespace gic {

/// Every sum-capacity bound applicable to one channel. Bounds that do not
/// apply (asymmetric parameters, wrong regime) are absent, never zero or
/// infinity. When exact_capacity is present it equals tin_lower exactly.
struct BoundSet {
    Rate tin_lower = 0.0;
    std::optional<Rate> ortho_lower;        ///< symmetric only
    std::optional<Rate> onebit_upper;       ///< symmetric only
    std::optional<Rate> kramer_upper;       ///< symmetric only
    std::optional<Rate> tangent_upper;      ///< symmetric, above threshold only
    std::optional<Rate> genie_aided_upper;  ///< present when a genie certificate exists
    std::optional<Rate> exact_capacity;     ///< present in the low-interference regime
    RegimeLabel regime;
};

/// Sum rate of treating interference as noise,
/// 1/2 log2(1 + p1/(1+h12^2 p2)) + 1/2 log2(1 + p2/(1+h21^2 p1));
/// reduces exactly to log2(1 + P/(1+h^2 P)) for symmetric parameters.
Rate tin_sum_rate(const ChannelParams& params);

/// Orthogonalization sum rate log2(1 + 2P), symmetric channels only. Reported
/// as-is; see the strict-ordering mode in gic::checks for the caveat on its
/// power convention.
Rate ortho_sum_rate(const ChannelParams& params);

/// One-Bit genie bound log2(1 + h^2 P + P/(1+h^2 P)), symmetric only.
Rate onebit_upper(const ChannelParams& params);

/// Z-channel bound 1/2 log2(1+P) + 1/2 log2(1 + P/(1+h^2 P)), symmetric only.
Rate kramer_upper(const ChannelParams& params);

/// TIN sum rate when the low-interference condition holds, nullopt otherwise.
std::optional<Rate> exact_sum_capacity(const ChannelParams& params);

/// Populates every applicable bound. Gains enter only through h^2 and |h|, so
/// the result is bit-identical under sign flips of either gain.
BoundSet all_bounds(const ChannelParams& params);

}  // namespace gic

#endif  // GIC_BOUNDS_HPP
