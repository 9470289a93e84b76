#include "gic/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "gic/bounds.hpp"
#include "gic/channel.hpp"
#include "gic/gaussmi.hpp"
#include "gic/geometry.hpp"
#include "gic/montecarlo.hpp"
#include "gic/regime.hpp"

namespace gic::checks {

namespace {

constexpr double kGolden64 = 0x9E3779B97F4A7C15ULL;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt) {
    return std::mt19937_64(seed ^ (salt * static_cast<std::uint64_t>(kGolden64)));
}

double uni(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

double log_uni(std::mt19937_64& g, double lo, double hi) {
    return std::exp(uni(g, std::log(lo), std::log(hi)));
}

double pm1(std::mt19937_64& g) { return (g() & 1) ? 1.0 : -1.0; }

template <class... Args>
std::string strf(const char* fmt, Args... args) {
    char buf[320];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

std::string fmt_params(const ChannelParams& c) {
    return strf("p1=%.17g p2=%.17g h12=%.17g h21=%.17g", c.p1, c.p2, c.h12, c.h21);
}

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void trial() { ++result_.trials; }

    void residual(double r) {
        if (r > result_.worst_residual) result_.worst_residual = r;
    }

    // Records the residual and fails the instance when it exceeds tol.
    void check(double r, double tol, const std::string& note) {
        residual(r);
        if (!(r <= tol)) fail(note + strf(" (residual %.3g > %.3g)", r, tol));
    }

    void check_true(bool ok, const std::string& note) {
        if (!ok) fail(note);
    }

    void fail(const std::string& note) {
        ++result_.failures;
        if (result_.notes.size() < 8) result_.notes.push_back(note);
    }

    void info(const std::string& note) {
        if (result_.notes.size() < 8) result_.notes.push_back(note);
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

// Positive gain at which |h|(1 + h^2 p) reaches the symmetric threshold.
double boundary_gain(double p) {
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * (1.0 + mid * mid * p) <= 0.5 ? lo : hi) = mid;
    }
    return lo;
}

// Scales (m12, m21) so that the two-sided condition value hits `target`.
ChannelParams scaled_to_condition(double p1, double p2, double m12, double m21,
                                  double target) {
    const auto value = [&](double s) {
        const double h12 = s * m12, h21 = s * m21;
        return std::abs(h12) * (1.0 + h21 * h21 * p1) +
               std::abs(h21) * (1.0 + h12 * h12 * p2);
    };
    double hi = 1.0;
    while (value(hi) < target) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (value(mid) <= target ? lo : hi) = mid;
    }
    return make_params(p1, p2, lo * m12, lo * m21);
}

// Brute-force feasibility of the per-receiver inequalities
//   a <= rho2 sqrt(1-rho1^2)  and  b <= rho1 sqrt(1-rho2^2)
// over a uniform 200x200 grid of (rho1, rho2) in [0, 1]^2.
bool grid_feasible(double a, double b) {
    constexpr int kN = 200;
    static const auto tables = [] {
        std::array<double, kN> rho{}, orth{};
        for (int i = 0; i < kN; ++i) {
            rho[i] = static_cast<double>(i) / (kN - 1);
            orth[i] = std::sqrt(1.0 - rho[i] * rho[i]);
        }
        return std::pair(rho, orth);
    }();
    const auto& [rho, orth] = tables;
    for (int i = 0; i < kN; ++i) {
        if (rho[i] * 1.0 < b) continue;  // rho1 sqrt(1-rho2^2) <= rho1
        for (int j = 0; j < kN; ++j) {
            if (rho[j] * orth[i] >= a && rho[i] * orth[j] >= b) return true;
        }
    }
    return false;
}

bool same_opt(const std::optional<Rate>& x, const std::optional<Rate>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || *x == *y;
}

bool bitwise_equal(const BoundSet& a, const BoundSet& b) {
    return a.tin_lower == b.tin_lower && same_opt(a.ortho_lower, b.ortho_lower) &&
           same_opt(a.onebit_upper, b.onebit_upper) &&
           same_opt(a.kramer_upper, b.kramer_upper) &&
           same_opt(a.tangent_upper, b.tangent_upper) &&
           same_opt(a.genie_aided_upper, b.genie_aided_upper) &&
           same_opt(a.exact_capacity, b.exact_capacity) &&
           a.regime.kind == b.regime.kind &&
           a.regime.condition_value == b.regime.condition_value;
}

// Useful genie drawn at random: correlations in [0, 0.99] and etas scaled
// inside the usefulness budget.
GenieSpec random_useful_genie(std::mt19937_64& g, const ChannelParams& c) {
    GenieSpec genie;
    genie.rho1 = uni(g, 0.0, 0.99);
    genie.rho2 = uni(g, 0.0, 0.99);
    genie.eta1 = uni(g, 0.05, 1.0) * std::sqrt(1.0 - genie.rho2 * genie.rho2) /
                 std::abs(c.h21);
    genie.eta2 = uni(g, 0.05, 1.0) * std::sqrt(1.0 - genie.rho1 * genie.rho1) /
                 std::abs(c.h12);
    return genie;
}

ChannelParams random_channel(std::mt19937_64& g) {
    return make_params(log_uni(g, 0.1, 100.0), log_uni(g, 0.1, 100.0),
                       pm1(g) * uni(g, 0.05, 2.0), pm1(g) * uni(g, 0.05, 2.0));
}

NoisyObservationSet channel_pair_obs(const ChannelParams& c, const GenieSpec& g,
                                     int receiver) {
    NoisyObservationSet obs;
    obs.noise_cov.resize(2, 2);
    if (receiver == 1) {
        obs.signal_variance = c.p1;
        obs.noise_cov(0, 0) = 1.0 + c.h12 * c.h12 * c.p2;
        obs.noise_cov(0, 1) = obs.noise_cov(1, 0) = g.eta1 * g.rho1;
        obs.noise_cov(1, 1) = g.eta1 * g.eta1;
    } else {
        obs.signal_variance = c.p2;
        obs.noise_cov(0, 0) = 1.0 + c.h21 * c.h21 * c.p1;
        obs.noise_cov(0, 1) = obs.noise_cov(1, 0) = g.eta2 * g.rho2;
        obs.noise_cov(1, 1) = g.eta2 * g.eta2;
    }
    return obs;
}

}  // namespace

SuiteResult unit_roundtrip(std::uint64_t seed) {
    Suite suite("db-linear-roundtrip");
    auto g = make_rng(seed, 1);
    std::vector<double> powers;
    for (int i = 0; i <= 180; ++i) powers.push_back(1e-3 * std::pow(10.0, i / 20.0));
    for (int i = 0; i < 500; ++i) powers.push_back(log_uni(g, 1e-3, 1e6));
    for (double p : powers) {
        suite.trial();
        const double rt = db_to_linear(linear_to_db(p));
        suite.check(std::abs(rt - p) / p, 1e-12, strf("round trip broke at p=%.17g", p));
    }
    return suite.take();
}

SuiteResult sign_symmetry(std::uint64_t seed, std::size_t trials) {
    Suite suite("sign-symmetry");
    auto g = make_rng(seed, 2);
    for (std::size_t t = 0; t < trials; ++t) {
        suite.trial();
        const double p = log_uni(g, 0.1, 100.0);
        const double h = uni(g, 0.0, 2.0);
        const auto plus = make_symmetric(p, h);
        const auto minus = make_symmetric(p, -h);
        suite.check_true(tin_sum_rate(plus) == tin_sum_rate(minus),
                         "tin differs under sign flip: " + fmt_params(plus));
        suite.check_true(ortho_sum_rate(plus) == ortho_sum_rate(minus),
                         "ortho differs under sign flip: " + fmt_params(plus));
        suite.check_true(onebit_upper(plus) == onebit_upper(minus),
                         "onebit differs under sign flip: " + fmt_params(plus));
        suite.check_true(kramer_upper(plus) == kramer_upper(minus),
                         "kramer differs under sign flip: " + fmt_params(plus));
        suite.check_true(same_opt(exact_sum_capacity(plus), exact_sum_capacity(minus)),
                         "exact capacity differs under sign flip: " + fmt_params(plus));
        suite.check_true(bitwise_equal(all_bounds(plus), all_bounds(minus)),
                         "all_bounds differs under sign flip: " + fmt_params(plus));

        const auto base = random_channel(g);
        const auto baseline = all_bounds(base);
        for (int mask = 1; mask < 4; ++mask) {
            ChannelParams flipped = base;
            if (mask & 1) flipped.h12 = -flipped.h12;
            if (mask & 2) flipped.h21 = -flipped.h21;
            suite.check_true(bitwise_equal(baseline, all_bounds(flipped)),
                             "asymmetric all_bounds differs under sign flip: " +
                                 fmt_params(base));
        }
    }
    return suite.take();
}

SuiteResult bound_ordering(bool strict) {
    Suite suite(strict ? "bound-ordering-strict" : "bound-ordering");
    for (double p : {1.0, 10.0, 100.0}) {
        for (int i = 0; i <= 200; ++i) {
            suite.trial();
            const double h = i * 0.01;
            const auto b = all_bounds(make_symmetric(p, h));

            double min_upper = std::numeric_limits<double>::infinity();
            for (const auto& u : {b.onebit_upper, b.kramer_upper, b.tangent_upper,
                                  b.genie_aided_upper, b.exact_capacity}) {
                if (u) min_upper = std::min(min_upper, *u);
            }
            suite.check(b.tin_lower - min_upper, 1e-9,
                        strf("tin exceeds an upper bound at p=%.3g h=%.3g", p, h));
            if (strict && b.ortho_lower) {
                suite.check(*b.ortho_lower - min_upper, 1e-9,
                            strf("orthogonal rate exceeds an upper bound at "
                                 "p=%.3g h=%.3g",
                                 p, h));
            }
            if (b.exact_capacity) {
                suite.check_true(*b.exact_capacity == b.tin_lower,
                                 strf("exact capacity != tin at p=%.3g h=%.3g", p, h));
            }
            if (b.genie_aided_upper) {
                suite.check(std::abs(*b.genie_aided_upper - b.tin_lower),
                            b.exact_capacity ? 1e-9
                                             : std::numeric_limits<double>::infinity(),
                            strf("in-regime genie bound is not tight at p=%.3g "
                                 "h=%.3g",
                                 p, h));
            }
            if (b.tangent_upper && b.onebit_upper && h <= 1.0) {
                suite.check(*b.tangent_upper - *b.onebit_upper, 1e-9,
                            strf("tangent exceeds the One-Bit bound at p=%.3g "
                                 "h=%.3g",
                                 p, h));
            }
        }
    }
    return suite.take();
}

SuiteResult regime_equivalence(std::uint64_t seed, std::size_t draws) {
    Suite suite("regime-equivalence");
    auto g = make_rng(seed, 3);
    // The 200x200 grid resolves feasibility only up to its cell size; draws in
    // a sliver just below the threshold may be feasible without a feasible
    // grid point. Those are counted separately and certified through the
    // exact construction instead.
    constexpr double kSliver = 0.02;
    std::size_t sliver_misses = 0;

    for (std::size_t t = 0; t < draws; ++t) {
        suite.trial();
        const auto c = make_params(log_uni(g, 0.1, 100.0), log_uni(g, 0.1, 100.0),
                                   uni(g, -0.8, 0.8), uni(g, -0.8, 0.8));
        const bool cond = asym_condition(c);
        const auto rhos = find_rhos(c);
        suite.check_true(rhos.has_value() == cond,
                         "find_rhos success disagrees with the threshold "
                         "condition: " +
                             fmt_params(c));

        const double a = std::abs(c.h12) * (1.0 + c.h21 * c.h21 * c.p1);
        const double b = std::abs(c.h21) * (1.0 + c.h12 * c.h12 * c.p2);
        if (rhos) {
            const double slack = 1e-12;
            const double lhs1 = rhos->rho2 * std::sqrt(1.0 - rhos->rho1 * rhos->rho1);
            const double lhs2 = rhos->rho1 * std::sqrt(1.0 - rhos->rho2 * rhos->rho2);
            suite.check(a - lhs1, slack, "first correlation inequality fails: " + fmt_params(c));
            suite.check(b - lhs2, slack, "second correlation inequality fails: " + fmt_params(c));
        }

        const bool grid = grid_feasible(a, b);
        const double value = a + b;
        if (value > 1.0) {
            suite.check_true(!grid, "grid found a feasible point above the "
                                    "threshold: " +
                                        fmt_params(c));
        } else if (value <= 1.0 - kSliver) {
            suite.check_true(grid, "grid missed a feasible point well inside "
                                   "the threshold: " +
                                       fmt_params(c));
        } else if (!grid) {
            ++sliver_misses;  // resolution limit; exact construction above certifies
        }
    }

    // Symmetric reduction: the two-sided condition must agree exactly with
    // the scalar one.
    for (std::size_t t = 0; t < std::max<std::size_t>(draws / 10, 100); ++t) {
        suite.trial();
        const double p = log_uni(g, 0.1, 100.0);
        const double h = uni(g, -1.0, 1.0);
        suite.check_true(
            asym_condition(make_symmetric(p, h)) == symmetric_condition(p, h),
            strf("symmetric reduction disagrees at p=%.17g h=%.17g", p, h));
    }

    if (sliver_misses > 0) {
        suite.info(strf("grid inconclusive on %zu near-threshold draws "
                        "(within %.3g of 1); certified by construction",
                        sliver_misses, kSliver));
    }
    return suite.take();
}

SuiteResult genie_certification(std::uint64_t seed, std::size_t trials) {
    Suite suite("genie-certification");
    auto g = make_rng(seed, 4);
    for (std::size_t t = 0; t < trials; ++t) {
        suite.trial();
        ChannelParams c;
        if (t % 2 == 0) {
            const double p = log_uni(g, 0.1, 100.0);
            const double h = pm1(g) * uni(g, 1e-3, 1.0) * boundary_gain(p);
            c = make_symmetric(p, h);
        } else {
            c = scaled_to_condition(log_uni(g, 0.1, 100.0), log_uni(g, 0.1, 100.0),
                                    pm1(g) * uni(g, 0.05, 1.0),
                                    pm1(g) * uni(g, 0.05, 1.0), uni(g, 0.02, 0.999));
        }

        const auto genie = construct_genie(c);
        if (!genie) {
            suite.fail("no certificate inside the regime: " + fmt_params(c));
            continue;
        }
        const auto checks = genie_checks(c, *genie);
        suite.check(std::max(checks.smart_residual1, checks.smart_residual2), 1e-12,
                    "smart residual too large: " + fmt_params(c));
        suite.check(std::max(-checks.useful_margin1, -checks.useful_margin2), 1e-12,
                    "useful margin violated: " + fmt_params(c));
        suite.check(std::abs(genie_aided_sum_rate(c, *genie) - tin_sum_rate(c)),
                    1e-9, "genie-aided rate does not match TIN: " + fmt_params(c));
        if (symmetric(c)) {
            suite.check_true(genie->eta1 == genie->eta2 && genie->rho1 == genie->rho2,
                             "symmetric channel produced an asymmetric genie: " +
                                 fmt_params(c));
        }
    }
    return suite.take();
}

SuiteResult mi_two_path(std::uint64_t seed, std::size_t trials) {
    Suite suite("mi-two-path");
    auto g = make_rng(seed, 5);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t t = 0; t < trials; ++t) {
        suite.trial();
        if (t % 2 == 0) {
            const auto c = random_channel(g);
            const auto genie = random_useful_genie(g, c);
            const auto joint = assemble_joint(c, genie);
            for (int receiver : {1, 2}) {
                const auto obs = channel_pair_obs(c, genie, receiver);
                const Rate det = receiver == 1 ? mi_det(joint, "X1", {"Y1", "S1"})
                                               : mi_det(joint, "X2", {"Y2", "S2"});
                suite.check(std::abs(det - mi_mmse(obs)), 1e-9,
                            strf("two-path mismatch (receiver %d): ", receiver) +
                                fmt_params(c));
            }
        } else {
            const auto m = static_cast<Eigen::Index>(1 + t % 4);
            Eigen::MatrixXd a(m, m);
            for (Eigen::Index i = 0; i < m; ++i) {
                for (Eigen::Index j = 0; j < m; ++j) a(i, j) = normal(g);
            }
            NoisyObservationSet obs;
            obs.signal_variance = log_uni(g, 0.1, 100.0);
            obs.noise_cov = a * a.transpose();
            for (Eigen::Index i = 0; i < m; ++i) obs.noise_cov(i, i) += uni(g, 0.1, 1.1);

            std::vector<std::string> names{"X"};
            for (Eigen::Index i = 0; i < m; ++i) names.push_back("E" + std::to_string(i + 1));
            Eigen::MatrixXd cov(m + 1, m + 1);
            cov(0, 0) = obs.signal_variance;
            for (Eigen::Index i = 0; i < m; ++i) {
                cov(0, i + 1) = cov(i + 1, 0) = obs.signal_variance;
                for (Eigen::Index j = 0; j < m; ++j) {
                    cov(i + 1, j + 1) = obs.signal_variance + obs.noise_cov(i, j);
                }
            }
            const auto joint = GaussianVector::make(names, cov);
            const std::vector<std::string> observed(names.begin() + 1, names.end());
            suite.check(std::abs(mi_det(joint, "X", observed) - mi_mmse(obs)), 1e-9,
                        strf("two-path mismatch on a random observation set "
                             "(m=%d, P=%.17g)",
                             static_cast<int>(m), obs.signal_variance));
        }
    }
    return suite.take();
}

SuiteResult mi_properties(std::uint64_t seed, std::size_t trials) {
    Suite suite("mi-properties");
    auto g = make_rng(seed, 6);
    for (std::size_t t = 0; t < trials; ++t) {
        suite.trial();
        const auto c = random_channel(g);
        const auto genie = random_useful_genie(g, c);
        const auto joint = assemble_joint(c, genie);

        const Rate with_genie = mi_det(joint, "X1", {"Y1", "S1"});
        const Rate without = mi_det(joint, "X1", {"Y1"});
        const Rate cond = cond_mi_smartcheck(c, genie);
        suite.check(std::abs(with_genie - (without + cond)), 1e-12,
                    "chain rule violated: " + fmt_params(c));

        // Scaling any observed coordinate leaves the information unchanged.
        const double scale = pm1(g) * log_uni(g, 0.2, 10.0);
        GaussianVector scaled = joint;
        const int s1 = joint.index("S1");
        scaled.cov.row(s1) *= scale;
        scaled.cov.col(s1) *= scale;
        suite.check(std::abs(mi_det(scaled, "X1", {"Y1", "S1"}) - with_genie), 1e-10,
                    strf("scaling by %.3g changed the information: ", scale) +
                        fmt_params(c));

        suite.check(without - with_genie, 1e-10,
                    "adding an observation decreased the information: " +
                        fmt_params(c));
        suite.check(with_genie - mi_det(joint, "X1", {"Y1", "S1", "Y2"}), 1e-10,
                    "adding Y2 decreased the information: " + fmt_params(c));

        const auto obs = channel_pair_obs(c, genie, 1);
        Eigen::VectorXd b(2);
        b(0) = uni(g, -1.0, 2.0);
        b(1) = 1.0 - b(0);
        suite.check(combiner_rate(obs, b) - with_genie, 1e-10,
                    "a fixed combiner beat the joint observation: " + fmt_params(c));
    }
    return suite.take();
}

SuiteResult smart_genie_equality(std::uint64_t seed, std::size_t trials) {
    Suite suite("smart-genie-equality");
    auto g = make_rng(seed, 7);
    for (std::size_t t = 0; t < trials; ++t) {
        suite.trial();
        const double p = log_uni(g, 0.1, 100.0);
        const double h = pm1(g) * uni(g, 1e-3, 1.0) * boundary_gain(p);
        const auto c = make_symmetric(p, h);
        const auto genie = construct_genie(c);
        if (!genie) {
            suite.fail("no certificate inside the regime: " + fmt_params(c));
            continue;
        }
        suite.check(std::abs(cond_mi_smartcheck(c, *genie)), 1e-9,
                    "smart genie leaks information: " + fmt_params(c));
        suite.check(std::abs(genie_aided_sum_rate(c, *genie) - tin_sum_rate(c)),
                    1e-9, "genie-aided rate does not match TIN: " + fmt_params(c));

        GenieSpec off = *genie;
        off.eta1 *= 1.1;
        off.eta2 *= 1.1;
        suite.check_true(cond_mi_smartcheck(c, off) >= 1e-6,
                         "perturbed genie still looks smart: " + fmt_params(c));
    }
    return suite.take();
}

SuiteResult tangent_geometry() {
    Suite suite("tangent-geometry");

    for (double p : {1.0, 10.0, 100.0}) {
        const double hb = boundary_gain(p);
        std::vector<double> gains{hb * 1.02, hb * 1.2, 0.5, 0.8, 1.0, 1.5, 2.0, 3.0};
        for (double h : gains) {
            if (symmetric_condition(p, h)) continue;
            suite.trial();
            const auto c = make_symmetric(p, h);
            const auto t = tangent_bound(c);
            const double c2 = 1.0 + h * h * p;
            const double cq = std::sqrt(c2);

            suite.check(t.sigma - cq, 1e-12,
                        strf("sigma exceeded its cap at p=%.3g h=%.3g", p, h));
            suite.check(tin_sum_rate(c) - t.rate, 1e-12,
                        strf("tangent fell below TIN at p=%.3g h=%.3g", p, h));

            const double mu2 = t.mu * t.mu;
            const double alt = std::log2(1.0 + p / c2 * (1.0 + 1.0 / mu2));
            suite.check(std::abs(t.rate - alt), 1e-12,
                        strf("slope form disagrees at p=%.3g h=%.3g", p, h));

            // Tangency: every boundary point stays on the origin side of the
            // optimal line and the line touches the boundary.
            const double lo = theta_feasible_min(c);
            const double xb = t.tangency.eta * std::cos(t.tangency.theta);
            const double yb = t.tangency.eta * std::sin(t.tangency.theta);
            const double dx = xb - cq, dy = yb;
            const double len = std::hypot(dx, dy);
            const double nx = -dy / len, ny = dx / len;
            // origin side: n . (O - A) = -nx * cq
            const double orient = -nx * cq > 0.0 ? 1.0 : -1.0;
            const auto signed_dist = [&](double theta) {
                const double eta = useful_boundary(c, theta);
                return orient * (nx * (eta * std::cos(theta) - cq) +
                                 ny * eta * std::sin(theta));
            };
            double min_d = signed_dist(t.tangency.theta);
            constexpr int kFine = 20000;
            for (int i = 0; i <= kFine; ++i) {
                const double theta = lo + (std::numbers::pi / 2 - lo) * i / kFine;
                min_d = std::min(min_d, signed_dist(theta));
            }
            suite.check(-min_d, 1e-8,
                        strf("boundary crosses the optimal line at p=%.3g h=%.3g",
                             p, h));
            suite.check(min_d, 1e-8,
                        strf("optimal line does not touch the boundary at "
                             "p=%.3g h=%.3g",
                             p, h));

            // The tangent is the best bound in its class: any useful boundary
            // genie gives a weaker (larger) genie-aided rate.
            for (int i = 1; i < 64; ++i) {
                const double theta = lo + (std::numbers::pi / 2 - lo) * i / 64.0;
                const double eta = useful_boundary(c, theta);
                if (eta <= 0.0) continue;
                const double rho = std::min(1.0, std::cos(theta) * cq);
                const GenieSpec boundary{eta, rho, eta, rho};
                suite.check(t.rate - genie_aided_sum_rate(c, boundary), 1e-9,
                            strf("boundary genie beat the tangent at p=%.3g "
                                 "h=%.3g theta=%.6g",
                                 p, h, theta));
            }
        }
    }

    {
        // Brute-force scan oracle at the reference point.
        suite.trial();
        const auto c = make_symmetric(10.0, 0.5);
        const auto t = tangent_bound(c);
        const double lo = theta_feasible_min(c);
        const double cq = std::sqrt(1.0 + 0.25 * 10.0);
        double best = 0.0;
        constexpr int kBrute = 1000000;
        for (int i = 1; i <= kBrute; ++i) {
            const double theta = lo + (std::numbers::pi / 2 - lo) * i / kBrute;
            const double eta = useful_boundary(c, theta);
            const double xb = eta * std::cos(theta), yb = eta * std::sin(theta);
            const double len = std::hypot(xb - cq, yb);
            best = std::max(best, std::abs(cq * yb) / len);
        }
        suite.check(std::abs(t.rate - std::log2(1.0 + 10.0 / (best * best))), 1e-8,
                    "optimizer disagrees with the brute-force scan at p=10 h=0.5");
    }

    {
        // Continuity just above the threshold.
        suite.trial();
        double lo = boundary_gain(10.0), hi = 0.5;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (mid * (1.0 + mid * mid * 10.0) <= 0.5 + 1e-6 ? lo : hi) = mid;
        }
        const auto c = make_symmetric(10.0, hi);
        suite.check(tangent_bound(c).rate - tin_sum_rate(c), 1e-3,
                    "tangent is discontinuous at the regime boundary");
    }

    // The boundary genie at theta = pi/2 reproduces the One-Bit bound.
    for (double h : {0.3, 0.5, 0.8, 1.0}) {
        suite.trial();
        const auto c = make_symmetric(10.0, h);
        const double sigma = sigma_line(c, {1.0 / h, std::numbers::pi / 2});
        suite.check(std::abs(std::log2(1.0 + 10.0 / (sigma * sigma)) - onebit_upper(c)),
                    1e-9, strf("sigma route missed the One-Bit bound at h=%.3g", h));
        const GenieSpec edge{1.0 / h, 0.0, 1.0 / h, 0.0};
        suite.check(std::abs(genie_aided_sum_rate(c, edge) - onebit_upper(c)), 1e-9,
                    strf("genie route missed the One-Bit bound at h=%.3g", h));
        suite.check(tangent_bound(c).rate - onebit_upper(c), 1e-9,
                    strf("tangent exceeded the One-Bit bound at h=%.3g", h));
    }

    return suite.take();
}

SuiteResult mc_moments(std::uint64_t seed) {
    Suite suite("mc-moments");
    const auto c = make_symmetric(10.0, 0.25);
    const auto genie = construct_genie(c);
    const auto joint = assemble_joint(c, genie);
    constexpr std::size_t kN = 1000000;
    const auto batch = sample(c, genie, kN, seed);

    // Stored outputs must reproduce bit-exactly from the stored inputs.
    {
        suite.trial();
        const auto& x1 = batch.column("X1");
        const auto& x2 = batch.column("X2");
        const auto& z1 = batch.column("Z1");
        const auto& w1 = batch.column("W1");
        const auto& y1 = batch.column("Y1");
        const auto& s1 = batch.column("S1");
        std::size_t bad = 0;
        for (std::size_t i = 0; i < kN; ++i) {
            if (y1[i] != x1[i] + c.h12 * x2[i] + z1[i]) ++bad;
            if (s1[i] != c.h21 * (x1[i] + genie->eta1 * w1[i])) ++bad;
        }
        suite.check_true(bad == 0,
                         strf("%zu rows failed the bit-exact recomputation", bad));
    }

    // Sampled covariance vs the assembled covariance, five standard errors.
    {
        const std::vector<std::string> names{"X1", "X2", "Y1", "Y2", "S1", "S2"};
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto& ci = batch.column(names[i]);
            for (std::size_t j = i; j < names.size(); ++j) {
                suite.trial();
                const auto& cj = batch.column(names[j]);
                double s = 0.0;
                for (std::size_t r = 0; r < kN; ++r) s += ci[r] * cj[r];
                const double emp = s / kN;
                const auto ii = static_cast<Eigen::Index>(i);
                const auto jj = static_cast<Eigen::Index>(j);
                const double truth = joint.cov(ii, jj);
                const double se = std::sqrt((joint.cov(ii, ii) * joint.cov(jj, jj) +
                                             truth * truth) /
                                            kN);
                suite.check(std::abs(emp - truth) / se, 5.0,
                            strf("covariance entry (%s,%s) off by more than 5 SE",
                                 names[i].c_str(), names[j].c_str()));
            }
        }
    }

    // Sampled mutual informations vs the determinant route, three SE.
    {
        const auto check_mi = [&](const SampleBatch& b, const GaussianVector& jt,
                                  std::string_view target,
                                  const std::vector<std::string>& observed) {
            suite.trial();
            const auto est = empirical_mi(b, target, observed);
            const Rate truth = mi_det(jt, target, observed);
            suite.check(std::abs(est.estimate - truth) / est.std_error, 3.0,
                        strf("sampled I(%s; ...) off by more than 3 SE",
                             std::string(target).c_str()));
        };
        check_mi(batch, joint, "X1", {"Y1"});
        check_mi(batch, joint, "X1", {"Y1", "S1"});
        check_mi(batch, joint, "X2", {"Y2", "S2"});

        const auto awgn = make_symmetric(10.0, 0.0);
        const auto awgn_batch = sample(awgn, std::nullopt, kN, seed ^ 0xA5A5A5A5ULL);
        check_mi(awgn_batch, assemble_joint(awgn, std::nullopt), "X1", {"Y1"});
    }

    // Determinism of the generator.
    {
        suite.trial();
        const auto b1 = sample(c, genie, 1000, seed + 17);
        const auto b2 = sample(c, genie, 1000, seed + 17);
        suite.check_true(b1.columns == b2.columns,
                         "same seed produced different batches");
    }
    return suite.take();
}

SuiteResult mc_consistency(std::uint64_t seed, std::size_t trials) {
    Suite suite("mc-consistency");
    const auto c = make_symmetric(10.0, 0.25);
    const auto genie = construct_genie(c);
    const auto joint = assemble_joint(c, genie);

    struct Quantity {
        std::string target;
        std::vector<std::string> observed;
        Rate truth;
    };
    const std::vector<Quantity> quantities{
        {"X1", {"Y1"}, mi_det(joint, "X1", {"Y1"})},
        {"X1", {"Y1", "S1"}, mi_det(joint, "X1", {"Y1", "S1"})},
        {"X2", {"Y2", "S2"}, mi_det(joint, "X2", {"Y2", "S2"})},
    };
    const std::array<std::size_t, 3> sizes{10000, 100000, 1000000};

    std::array<std::array<std::size_t, 3>, 3> within{};
    std::array<std::array<double, 3>, 3> err_sum{};

    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t ni = 0; ni < sizes.size(); ++ni) {
            const auto batch =
                sample(c, genie, sizes[ni], seed + 1000003ULL * t + 17ULL * ni);
            for (std::size_t q = 0; q < quantities.size(); ++q) {
                suite.trial();
                const auto est =
                    empirical_mi(batch, quantities[q].target, quantities[q].observed);
                const double err = std::abs(est.estimate - quantities[q].truth);
                suite.residual(err / est.std_error);
                if (err <= 3.0 * est.std_error) ++within[q][ni];
                err_sum[q][ni] += err;
            }
        }
    }

    // Per quantity and per size: at least 95% of the trials inside 3 SE, and
    // the average error shrinking as n grows.
    const double min_frac = trials >= 100 ? 0.95 : 0.8;
    for (std::size_t q = 0; q < quantities.size(); ++q) {
        for (std::size_t ni = 0; ni < sizes.size(); ++ni) {
            const double frac = static_cast<double>(within[q][ni]) / trials;
            suite.check_true(frac >= min_frac,
                             strf("only %.0f%% of trials inside 3 SE for "
                                  "quantity %zu at n=%zu",
                                  100.0 * frac, q, sizes[ni]));
        }
        suite.check_true(err_sum[q][0] > err_sum[q][1] && err_sum[q][1] > err_sum[q][2],
                         strf("average error does not shrink with n for "
                              "quantity %zu",
                              q));
    }
    return suite.take();
}

std::vector<SuiteResult> run_all(const Options& options) {
    std::vector<SuiteResult> out;
    out.push_back(unit_roundtrip(options.seed));
    out.push_back(sign_symmetry(options.seed, options.quick ? 100 : 500));
    out.push_back(bound_ordering(options.strict_ordering));
    out.push_back(regime_equivalence(options.seed, options.quick ? 2000 : 10000));
    out.push_back(genie_certification(options.seed, options.quick ? 200 : 1000));
    out.push_back(mi_two_path(options.seed, options.mi_trials));
    out.push_back(mi_properties(options.seed, options.quick ? 100 : 500));
    out.push_back(smart_genie_equality(options.seed, options.quick ? 200 : 1000));
    out.push_back(tangent_geometry());
    out.push_back(mc_moments(options.seed));
    out.push_back(mc_consistency(options.seed, options.quick ? 10 : 100));
    return out;
}

}  // namespace gic::checks
