#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gic/bounds.hpp"
#include "gic/channel.hpp"
#include "gic/gaussmi.hpp"
#include "gic/montecarlo.hpp"
#include "gic/regime.hpp"

using namespace gic;

namespace {
constexpr std::uint64_t kSeed = 0x1234'5678'9abcULL;
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto genie = construct_genie(c);
    const auto b1 = sample(c, genie, 2000, kSeed);
    const auto b2 = sample(c, genie, 2000, kSeed);
    CHECK(b1.columns == b2.columns);
    const auto b3 = sample(c, genie, 2000, kSeed + 1);
    CHECK(b1.column("X1") != b3.column("X1"));
}

TEST_CASE("an empty batch is refused") {
    CHECK_THROWS_AS(sample(make_symmetric(1.0, 0.1), std::nullopt, 0, kSeed),
                    PreconditionError);
}

TEST_CASE("column layout with and without a genie") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto with = sample(c, construct_genie(c), 10, kSeed);
    CHECK(with.names ==
          std::vector<std::string>{"X1", "X2", "Z1", "Z2", "W1", "W2", "Y1", "Y2",
                                   "S1", "S2"});
    const auto without = sample(c, std::nullopt, 10, kSeed);
    CHECK(without.names ==
          std::vector<std::string>{"X1", "X2", "Z1", "Z2", "Y1", "Y2"});
    CHECK_FALSE(without.has_column("S1"));
    // the same seed generates the same underlying normals either way
    CHECK(with.column("X1") == without.column("X1"));
    CHECK(with.column("Z2") == without.column("Z2"));
}

TEST_CASE("full correlation copies the receiver noise into the genie noise") {
    const auto c = make_symmetric(10.0, 0.25);
    const GenieSpec g{1.625, 1.0, 1.625, 1.0};  // rho = 1
    const auto batch = sample(c, g, 5000, kSeed);
    CHECK(batch.column("W1") == batch.column("Z1"));
    CHECK(batch.column("W2") == batch.column("Z2"));
}

TEST_CASE("stored outputs recompute bit-exactly from stored inputs") {
    const auto c = make_params(10.0, 3.0, 0.25, -0.4);
    const GenieSpec g{2.0, 0.6, 1.5, 0.3};
    const auto batch = sample(c, g, 5000, kSeed);
    const auto& x1 = batch.column("X1");
    const auto& x2 = batch.column("X2");
    const auto& z1 = batch.column("Z1");
    const auto& z2 = batch.column("Z2");
    const auto& w1 = batch.column("W1");
    const auto& w2 = batch.column("W2");
    const auto& y1 = batch.column("Y1");
    const auto& y2 = batch.column("Y2");
    const auto& s1 = batch.column("S1");
    const auto& s2 = batch.column("S2");
    for (std::size_t i = 0; i < batch.n; ++i) {
        CHECK(y1[i] == x1[i] + c.h12 * x2[i] + z1[i]);
        CHECK(y2[i] == x2[i] + c.h21 * x1[i] + z2[i]);
        CHECK(s1[i] == c.h21 * (x1[i] + g.eta1 * w1[i]));
        CHECK(s2[i] == c.h12 * (x2[i] + g.eta2 * w2[i]));
    }
}

TEST_CASE("sample variance of Y1 sits inside three standard errors") {
    const auto c = make_symmetric(10.0, 0.25);
    constexpr std::size_t n = 1000000;
    const auto batch = sample(c, construct_genie(c), n, kSeed);
    const auto& y1 = batch.column("Y1");
    double s = 0.0;
    for (double v : y1) s += v * v;
    const double var = s / n;
    const double truth = 11.625;  // P + h^2 P + 1
    const double se = truth * std::sqrt(2.0 / n);
    CHECK(std::abs(var - truth) <= 3.0 * se);
}

TEST_CASE("empirical mutual information on the single-user channel") {
    const auto c = make_symmetric(10.0, 0.0);
    const auto batch = sample(c, std::nullopt, 1000000, kSeed);
    const auto est = empirical_mi(batch, "X1", {"Y1"});
    CHECK(std::abs(est.estimate - 0.5 * std::log2(11.0)) <= 3.0 * est.std_error);
    CHECK(est.std_error < 0.01);
}

TEST_CASE("empirical mutual information sees the smart-genie equality") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto genie = construct_genie(c);
    const auto batch = sample(c, genie, 1000000, kSeed);
    const auto with = empirical_mi(batch, "X1", {"Y1", "S1"});
    const auto without = empirical_mi(batch, "X1", {"Y1"});
    CHECK(std::abs(with.estimate - without.estimate) <=
          3.0 * (with.std_error + without.std_error));
    // per-user TIN rate
    const double tin_half = 0.5 * tin_sum_rate(c);
    CHECK(std::abs(without.estimate - tin_half) <= 3.0 * without.std_error);
}

TEST_CASE("empirical covariance matches the assembled one at n = 10^6") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto genie = construct_genie(c);
    const auto joint = assemble_joint(c, genie);
    constexpr std::size_t n = 1000000;
    const auto batch = sample(c, genie, n, kSeed);
    const std::vector<std::string> names{"X1", "X2", "Y1", "Y2", "S1", "S2"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i; j < names.size(); ++j) {
            const auto& a = batch.column(names[i]);
            const auto& b = batch.column(names[j]);
            double s = 0.0;
            for (std::size_t r = 0; r < n; ++r) s += a[r] * b[r];
            const double emp = s / n;
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            const double truth = joint.cov(ii, jj);
            const double se = std::sqrt(
                (joint.cov(ii, ii) * joint.cov(jj, jj) + truth * truth) / n);
            CHECK(std::abs(emp - truth) <= 5.0 * se);
        }
    }
}

TEST_CASE("estimates tighten as the batch grows") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto genie = construct_genie(c);
    const auto joint = assemble_joint(c, genie);
    const double truth = mi_det(joint, "X1", {"Y1", "S1"});

    double prev_err_sum = 1e9;
    for (std::size_t n : {10000, 100000, 1000000}) {
        double err_sum = 0.0;
        for (std::uint64_t t = 0; t < 10; ++t) {
            const auto batch = sample(c, genie, n, kSeed + 1000 * t + n);
            const auto est = empirical_mi(batch, "X1", {"Y1", "S1"});
            err_sum += std::abs(est.estimate - truth);
        }
        CHECK(err_sum < prev_err_sum);
        prev_err_sum = err_sum;
    }
}

TEST_CASE("CSV dump round-trips at full precision") {
    const auto c = make_symmetric(10.0, 0.25);
    const auto batch = sample(c, construct_genie(c), 50, kSeed);
    std::ostringstream out;
    dump_batch_csv(batch, out);
    std::istringstream in(out.str());

    std::string header;
    std::getline(in, header);
    CHECK(header == "X1,X2,Z1,Z2,W1,W2,Y1,Y2,S1,S2");

    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string field;
        std::size_t col = 0;
        while (std::getline(fields, field, ',')) {
            CHECK(std::stod(field) == batch.columns[col][rows]);
            ++col;
        }
        CHECK(col == 10);
        ++rows;
    }
    CHECK(rows == 50);
    // LF endings only
    CHECK(out.str().find('\r') == std::string::npos);
}
