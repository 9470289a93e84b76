#ifndef GIC_GEOMETRY_HPP
#define GIC_GEOMETRY_HPP

#include <vector>

#include "gic/channel.hpp"
#include "gic/regime.hpp"

namespace gic {

/// A symmetric-channel genie in polar coordinates: radius eta > 0 and angle
/// theta in [0, pi/2], with cos(theta) = rho / sqrt(1 + h^2 P). The channel
/// output corresponds to the fixed point Q_Y = (sqrt(1 + h^2 P), 0); the
/// per-user rate of the genie-aided receiver is 1/2 log2(1 + P / sigma^2)
/// where sigma is the distance from the origin to the line through Q_Y and
/// the genie point.
struct PolarGenie {
    double eta = 1.0;
    double theta = 0.0;
};

/// (eta, rho) -> (eta, theta). Symmetric channels and symmetric genies only.
PolarGenie to_polar(const GenieSpec& genie, const ChannelParams& params);

/// Inverse map; throws PreconditionError if the angle corresponds to a
/// correlation above 1.
GenieSpec from_polar(const PolarGenie& point, const ChannelParams& params);

/// Distance from the origin to the line joining Q_Y and the genie point.
/// Throws DegenerateLineError when the two points coincide.
double sigma_line(const ChannelParams& params, const PolarGenie& q_s);

/// Radius of the useful-region boundary h^2 eta^2 + (1+h^2 P) cos^2(theta) = 1
/// at the given angle. Feasible only for cos^2(theta) <= 1/(1+h^2 P); outside
/// that NoBoundaryError is thrown. h = 0 is unsupported (region unbounded).
double useful_boundary(const ChannelParams& params, double theta);

/// Smallest feasible boundary angle, arccos(1/sqrt(1+h^2 P)).
double theta_feasible_min(const ChannelParams& params);

/// Tangent-line upper bound for symmetric channels above the low-interference
/// threshold: sigma is maximized over boundary genies by a 4096-point grid
/// scan plus golden-section refinement to |dtheta| < 1e-12.
struct TangentResult {
    Rate rate = 0.0;          ///< log2(1 + P / sigma^2)
    PolarGenie tangency;      ///< boundary point attaining the maximum
    double sigma = 0.0;       ///< maximal origin-to-line distance
    double mu = 0.0;          ///< |slope| recovered from sigma^2 = (1+h^2P) mu^2/(mu^2+1)
    /// Angles of every grid-detected local maximum whose rate is within 1e-9
    /// bits of the best; more than one entry flags a (numerically) non-unique
    /// tangent.
    std::vector<double> near_optimal_thetas;
};
TangentResult tangent_bound(const ChannelParams& params);

}  // namespace gic

#endif  // GIC_GEOMETRY_HPP
