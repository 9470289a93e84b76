#ifndef GIC_CHANNEL_HPP
#define GIC_CHANNEL_HPP

#include "gic/errors.hpp"

namespace gic {

/// Information rate in bits per channel use. Every rate produced by this
/// library is in base-2 units; internal computation may use natural logs.
using Rate = double;

/// Transmit powers and real cross-gains of the two-user Gaussian interference
/// channel in standard form,
///
///   Y1 = X1 + h12*X2 + Z1
///   Y2 = X2 + h21*X1 + Z2
///
/// with independent unit-variance receiver noise Z1, Z2. Powers are linear
/// (not dB) and must be positive; gains may be negative. The noise variances
/// are fixed at 1 and cannot be overridden.
struct ChannelParams {
    double p1 = 1.0;
    double p2 = 1.0;
    double h12 = 0.0;
    double h21 = 0.0;
};

/// Throws PreconditionError unless powers are positive finite and gains finite.
void validate(const ChannelParams& params);

ChannelParams make_params(double p1, double p2, double h12, double h21);

/// Channel with p1 = p2 = p and h12 = h21 = h.
ChannelParams make_symmetric(double p, double h);

/// True iff p1 == p2 and h12 == h21 (exact comparison).
bool symmetric(const ChannelParams& params);

/// Throws UnsupportedConfigError unless symmetric(params).
void require_symmetric(const ChannelParams& params);

/// 10^(x/10)
double db_to_linear(double x_db);

/// 10*log10(p), p > 0
double linear_to_db(double p);

}  // namespace gic

#endif  // GIC_CHANNEL_HPP
