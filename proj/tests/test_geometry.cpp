#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gic/bounds.hpp"
#include "gic/channel.hpp"
#include "gic/gaussmi.hpp"
#include "gic/geometry.hpp"
#include "gic/regime.hpp"

using namespace gic;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Dense scan over the boundary, an implementation-independent stand-in for
// the tangent optimizer.
double brute_force_tangent_rate(const ChannelParams& c, int points) {
    const double lo = theta_feasible_min(c);
    const double cq = std::sqrt(1.0 + c.h12 * c.h12 * c.p1);
    double best = 0.0;
    for (int i = 1; i <= points; ++i) {
        const double theta = lo + (kHalfPi - lo) * i / points;
        const double eta = useful_boundary(c, theta);
        const double xb = eta * std::cos(theta), yb = eta * std::sin(theta);
        best = std::max(best, std::abs(cq * yb) / std::hypot(xb - cq, yb));
    }
    return std::log2(1.0 + c.p1 / (best * best));
}

}  // namespace

TEST_CASE("zero correlation maps to theta = pi/2") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto q = to_polar(GenieSpec{2.0, 0.0, 2.0, 0.0}, c);
    CHECK(q.eta == 2.0);
    CHECK(q.theta == doctest::Approx(kHalfPi).epsilon(1e-15));
}

TEST_CASE("polar angle of the example genie") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto genie = construct_genie(c);
    REQUIRE(genie.has_value());
    const auto q = to_polar(*genie, c);
    // cos(theta) = rho / sqrt(1 + h^2 P) = 0.7071 / 1.2748
    CHECK(std::cos(q.theta) == doctest::Approx(0.5547).epsilon(1e-4));
}

TEST_CASE("polar round trip within 1e-12") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> up(std::log(0.1), std::log(100.0));
    std::uniform_real_distribution<double> uh(0.05, 2.0);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> ue(0.05, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const auto c = make_symmetric(std::exp(up(gen)), uh(gen));
        const double rho = ur(gen), eta = ue(gen);
        const GenieSpec g{eta, rho, eta, rho};
        const auto back = from_polar(to_polar(g, c), c);
        CHECK(std::abs(back.rho1 - rho) <= 1e-12);
        CHECK(back.eta1 == eta);
    }
}

TEST_CASE("the smart line is vertical at x = sqrt(1 + h^2 P)") {
    std::mt19937_64 gen(6);
    std::uniform_real_distribution<double> up(std::log(0.1), std::log(100.0));
    for (int i = 0; i < 500; ++i) {
        const double p = std::exp(up(gen));
        double lo = 0.0, hi = 0.5;
        for (int k = 0; k < 100; ++k) {
            const double mid = 0.5 * (lo + hi);
            (mid * (1.0 + mid * mid * p) <= 0.5 ? lo : hi) = mid;
        }
        const double h = lo * (0.999 * (i % 1000) / 1000.0 + 0.001);
        if (h == 0.0) continue;
        const auto c = make_symmetric(p, h);
        const auto genie = construct_genie(c);
        REQUIRE(genie.has_value());
        const auto q = to_polar(*genie, c);
        const double cq = std::sqrt(1.0 + h * h * p);
        CHECK(q.eta * std::cos(q.theta) == doctest::Approx(cq).epsilon(1e-12));
        // distance to a point on the vertical line equals the line abscissa
        CHECK(sigma_line(c, q) == doctest::Approx(cq).epsilon(1e-12));
        // consistency: the smart-genie sigma reproduces the TIN rate
        CHECK(std::log2(1.0 + p / (cq * cq)) ==
              doctest::Approx(tin_sum_rate(c)).epsilon(1e-12));
    }
}

TEST_CASE("sigma of the boundary point at pi/2 reproduces the One-Bit bound") {
    for (double h : {0.3, 0.5, 0.8, 1.0}) {
        const auto c = make_symmetric(10.0, h);
        const double sigma = sigma_line(c, PolarGenie{1.0 / h, kHalfPi});
        CHECK(std::abs(std::log2(1.0 + 10.0 / (sigma * sigma)) - onebit_upper(c)) <=
              1e-9);
    }
}

TEST_CASE("coincident points define no line") {
    const auto c = make_symmetric(10.0, 0.5);
    const double cq = std::sqrt(1.0 + 0.25 * 10.0);
    CHECK_THROWS_AS(sigma_line(c, PolarGenie{cq, 0.0}), DegenerateLineError);
}

TEST_CASE("useful boundary radii") {
    const auto c = make_symmetric(10.0, 0.5);
    CHECK(useful_boundary(c, kHalfPi) == 2.0);  // 1 / |h|
    const double c2 = 1.0 + 0.25 * 10.0;
    CHECK(useful_boundary(c, 1.2) ==
          doctest::Approx(std::sqrt((1.0 - c2 * std::cos(1.2) * std::cos(1.2)) /
                                    0.25))
              .epsilon(1e-14));
    // the region closes onto the axis at the feasibility limit
    CHECK(useful_boundary(c, theta_feasible_min(c)) <= 1e-6);
    CHECK_THROWS_AS(useful_boundary(c, 0.2), NoBoundaryError);
    CHECK_THROWS_AS(useful_boundary(make_symmetric(10.0, 0.0), 1.0),
                    UnsupportedConfigError);
}

TEST_CASE("tangent bound preconditions") {
    CHECK_THROWS_AS(tangent_bound(make_symmetric(10.0, 0.25)), PreconditionError);
    CHECK_THROWS_AS(tangent_bound(make_symmetric(10.0, 0.0)), PreconditionError);
    CHECK_THROWS_AS(tangent_bound(make_params(10.0, 9.0, 1.0, 1.0)),
                    UnsupportedConfigError);
}

TEST_CASE("tangent bound at the reference point") {
    const auto c = make_symmetric(10.0, 0.5);
    const auto t = tangent_bound(c);

    CHECK(t.rate > tin_sum_rate(c));
    CHECK(t.rate < onebit_upper(c));
    CHECK(t.sigma <= std::sqrt(3.5) + 1e-12);

    // both algebraic forms of the bound
    const double mu2 = t.mu * t.mu;
    CHECK(std::abs(t.rate - std::log2(1.0 + 10.0 / 3.5 * (1.0 + 1.0 / mu2))) <=
          1e-12);

    // geometric slope of the optimal line matches the recovered mu
    const double cq = std::sqrt(3.5);
    const double xb = t.tangency.eta * std::cos(t.tangency.theta);
    const double yb = t.tangency.eta * std::sin(t.tangency.theta);
    CHECK(std::abs(yb / (cq - xb)) == doctest::Approx(t.mu).epsilon(1e-9));

    // independent dense-scan oracle
    CHECK(std::abs(t.rate - brute_force_tangent_rate(c, 100000)) <= 1e-7);

    CHECK(t.near_optimal_thetas.size() == 1);
}

TEST_CASE("tangent bound stays above TIN and below One-Bit across gains") {
    for (double h : {0.3, 0.5, 0.8, 1.0}) {
        const auto c = make_symmetric(10.0, h);
        const auto t = tangent_bound(c);
        CHECK(t.rate >= tin_sum_rate(c) - 1e-12);
        CHECK(t.rate <= onebit_upper(c) + 1e-9);
    }
    // large gain: the bound stays valid
    const auto big = make_symmetric(10.0, 3.0);
    CHECK(tangent_bound(big).rate >= tin_sum_rate(big) - 1e-12);
}

TEST_CASE("tangent bound is continuous at the regime boundary") {
    const double p = 10.0;
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * (1.0 + mid * mid * p) <= 0.5 + 1e-6 ? lo : hi) = mid;
    }
    const auto c = make_symmetric(p, hi);
    CHECK_FALSE(symmetric_condition(p, hi));
    CHECK(tangent_bound(c).rate - tin_sum_rate(c) <= 1e-3);
}

TEST_CASE("sigma route equals the determinant route for any useful genie") {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> up(std::log(0.1), std::log(100.0));
    std::uniform_real_distribution<double> uh(0.05, 2.0);
    std::uniform_real_distribution<double> ur(0.0, 0.99);
    std::uniform_real_distribution<double> uu(0.05, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto c = make_symmetric(std::exp(up(gen)), uh(gen));
        const double rho = ur(gen);
        const double eta = uu(gen) * std::sqrt(1.0 - rho * rho) / c.h12;
        const GenieSpec g{eta, rho, eta, rho};
        const double sigma = sigma_line(c, to_polar(g, c));
        const double via_sigma = std::log2(1.0 + c.p1 / (sigma * sigma));
        CHECK(std::abs(via_sigma - genie_aided_sum_rate(c, g)) <= 1e-9);
    }
}

TEST_CASE("polar operations are symmetric-channel only") {
    const auto asym = make_params(10.0, 9.0, 0.3, 0.3);
    CHECK_THROWS_AS(theta_feasible_min(asym), UnsupportedConfigError);
    CHECK_THROWS_AS(to_polar(GenieSpec{1.0, 0.5, 1.0, 0.5}, asym),
                    UnsupportedConfigError);
    CHECK_THROWS_AS(sigma_line(asym, PolarGenie{1.0, 1.0}),
                    UnsupportedConfigError);
}

TEST_CASE("every sampled useful boundary genie is dominated by the tangent") {
    const auto c = make_symmetric(10.0, 0.8);
    const auto t = tangent_bound(c);
    const double lo = theta_feasible_min(c);
    const double cq = std::sqrt(1.0 + 0.64 * 10.0);
    for (int i = 1; i < 50; ++i) {
        const double theta = lo + (kHalfPi - lo) * i / 50.0;
        const double eta = useful_boundary(c, theta);
        const double rho = std::min(1.0, std::cos(theta) * cq);
        const GenieSpec g{eta, rho, eta, rho};
        CHECK(t.rate <= genie_aided_sum_rate(c, g) + 1e-9);
    }
}
