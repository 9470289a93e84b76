#include "gic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gic {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct SymView {
    double p = 0.0;
    double h = 0.0;
    double c2 = 0.0;  // 1 + h^2 P, squared radius of Q_Y
    double c = 0.0;   // sqrt(1 + h^2 P)
};

SymView sym_view(const ChannelParams& params) {
    validate(params);
    require_symmetric(params);
    SymView v;
    v.p = params.p1;
    v.h = params.h12;
    v.c2 = 1.0 + v.h * v.h * v.p;
    v.c = std::sqrt(v.c2);
    return v;
}

// Distance from the origin to the line through A = (c, 0) and B; the first
// point always sits on the x-axis, so the cross product collapses to c*yB.
double origin_line_distance(double c, double xb, double yb) {
    const double len = std::hypot(xb - c, yb);
    return std::abs(c * yb) / len;
}

// Boundary radius with the feasibility slack already applied; returns 0 at
// the angle where the region closes onto the axis.
double boundary_eta(const SymView& v, double theta) {
    const double ct = std::cos(theta);
    const double rem = 1.0 - v.c2 * ct * ct;
    return std::sqrt(std::max(rem, 0.0)) / std::abs(v.h);
}

double golden_max(double lo, double hi, const auto& f) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-12) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

PolarGenie to_polar(const GenieSpec& genie, const ChannelParams& params) {
    const SymView v = sym_view(params);
    validate_genie(genie);
    if (genie.eta1 != genie.eta2 || genie.rho1 != genie.rho2) {
        throw PreconditionError("symmetric channel expects a symmetric genie");
    }
    return {genie.eta1, std::acos(genie.rho1 / v.c)};
}

GenieSpec from_polar(const PolarGenie& point, const ChannelParams& params) {
    const SymView v = sym_view(params);
    if (!(std::isfinite(point.eta) && point.eta > 0.0) ||
        !(point.theta >= 0.0 && point.theta <= kHalfPi)) {
        throw PreconditionError("polar genie requires eta > 0 and theta in [0, pi/2]");
    }
    const double rho = std::cos(point.theta) * v.c;
    if (rho > 1.0) {
        throw PreconditionError("angle corresponds to a correlation above 1");
    }
    return {point.eta, rho, point.eta, rho};
}

double sigma_line(const ChannelParams& params, const PolarGenie& q_s) {
    const SymView v = sym_view(params);
    if (!(std::isfinite(q_s.eta) && q_s.eta >= 0.0)) {
        throw PreconditionError("polar radius must be nonnegative finite");
    }
    const double xb = q_s.eta * std::cos(q_s.theta);
    const double yb = q_s.eta * std::sin(q_s.theta);
    const double len = std::hypot(xb - v.c, yb);
    if (!(len > 1e-14 * std::max(1.0, v.c))) {
        throw DegenerateLineError("genie point coincides with the channel point");
    }
    return std::abs(v.c * yb) / len;
}

double useful_boundary(const ChannelParams& params, double theta) {
    const SymView v = sym_view(params);
    if (v.h == 0.0) {
        throw UnsupportedConfigError("useful region is unbounded for h = 0");
    }
    if (!(theta >= 0.0 && theta <= kHalfPi)) {
        throw PreconditionError("theta must lie in [0, pi/2]");
    }
    const double ct = std::cos(theta);
    const double rem = 1.0 - v.c2 * ct * ct;
    // Rounding right at the closing angle may produce a tiny negative rem.
    if (rem < -1e-12) {
        throw NoBoundaryError("no boundary point exists at this angle");
    }
    return std::sqrt(std::max(rem, 0.0)) / std::abs(v.h);
}

double theta_feasible_min(const ChannelParams& params) {
    const SymView v = sym_view(params);
    return std::acos(1.0 / v.c);
}

TangentResult tangent_bound(const ChannelParams& params) {
    const SymView v = sym_view(params);
    if (v.h == 0.0) {
        throw PreconditionError("tangent bound requires a nonzero cross-gain");
    }
    if (symmetric_condition(v.p, v.h)) {
        throw PreconditionError(
            "tangent bound applies only above the low-interference threshold");
    }

    const double lo = std::acos(1.0 / v.c);
    const double hi = kHalfPi;
    const auto sigma_at = [&](double theta) {
        const double eta = boundary_eta(v, theta);
        // eta == 0 is the closing point at the origin: the chord through the
        // origin has distance zero.
        if (eta == 0.0) return 0.0;
        return origin_line_distance(v.c, eta * std::cos(theta),
                                    eta * std::sin(theta));
    };

    // Coarse scan; unimodality of sigma(theta) is not assumed, so every grid
    // local maximum is refined and the global winner kept (ties broken by the
    // smaller angle).
    constexpr int kGrid = 4096;
    std::vector<double> sig(kGrid + 1);
    const double step = (hi - lo) / kGrid;
    for (int i = 0; i <= kGrid; ++i) sig[i] = sigma_at(lo + i * step);

    std::vector<int> local_max;
    for (int i = 1; i <= kGrid; ++i) {
        const double left = sig[i - 1];
        const double right = i < kGrid ? sig[i + 1] : -1.0;
        if (sig[i] >= left && sig[i] >= right) local_max.push_back(i);
    }

    double best_sigma = -1.0;
    double best_theta = lo;
    std::vector<std::pair<double, double>> refined;  // (theta, sigma)
    for (int i : local_max) {
        const double a = lo + (i - 1) * step;
        const double b = std::min(hi, lo + (i + 1) * step);
        const double theta = golden_max(a, b, sigma_at);
        const double s = sigma_at(theta);
        refined.emplace_back(theta, s);
        if (s > best_sigma || (s == best_sigma && theta < best_theta)) {
            best_sigma = s;
            best_theta = theta;
        }
    }

    TangentResult result;
    result.sigma = best_sigma;
    result.tangency = {boundary_eta(v, best_theta), best_theta};
    result.rate = std::log2(1.0 + v.p / (best_sigma * best_sigma));
    result.mu = best_sigma / std::sqrt(v.c2 - best_sigma * best_sigma);
    for (const auto& [theta, s] : refined) {
        const double rate = std::log2(1.0 + v.p / (s * s));
        if (rate - result.rate <= 1e-9) result.near_optimal_thetas.push_back(theta);
    }
    std::sort(result.near_optimal_thetas.begin(), result.near_optimal_thetas.end());
    return result;
}

}  // namespace gic
