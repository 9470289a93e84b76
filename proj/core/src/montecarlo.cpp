#include "gic/montecarlo.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "gic/gaussmi.hpp"

namespace gic {

namespace {

// Uniform in (0, 1]: top 53 bits of the engine output, shifted off zero.
double unit_open(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
}

// Box-Muller pair from two uniforms.
void normal_pair(std::mt19937_64& gen, double& z0, double& z1) {
    const double u1 = unit_open(gen);
    const double u2 = unit_open(gen);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
}

// Raw first and second moments of a row range, combinable across ranges.
struct MomentSums {
    Eigen::VectorXd sum;
    Eigen::MatrixXd cross;
    double count = 0.0;

    explicit MomentSums(Eigen::Index d)
        : sum(Eigen::VectorXd::Zero(d)), cross(Eigen::MatrixXd::Zero(d, d)) {}

    void add(const MomentSums& other) {
        sum += other.sum;
        cross += other.cross;
        count += other.count;
    }

    Eigen::MatrixXd cov() const {
        const Eigen::VectorXd mean = sum / count;
        return cross / count - mean * mean.transpose();
    }
};

MomentSums accumulate(const std::vector<const std::vector<double>*>& cols,
                      std::size_t begin, std::size_t end) {
    const auto d = static_cast<Eigen::Index>(cols.size());
    MomentSums m(d);
    m.count = static_cast<double>(end - begin);
    for (Eigen::Index j = 0; j < d; ++j) {
        const double* x = cols[j]->data();
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += x[i];
        m.sum(j) = s;
        for (Eigen::Index k = j; k < d; ++k) {
            const double* y = cols[k]->data();
            double c = 0.0;
            for (std::size_t i = begin; i < end; ++i) c += x[i] * y[i];
            m.cross(j, k) = m.cross(k, j) = c;
        }
    }
    return m;
}

Rate gaussian_mi_from_cov(const Eigen::MatrixXd& cov,
                          const std::vector<std::string>& names,
                          std::string_view target,
                          const std::vector<std::string>& observed) {
    const GaussianVector joint = GaussianVector::make(names, cov);
    return mi_det(joint, target, observed);
}

}  // namespace

const std::vector<double>& SampleBatch::column(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return columns[i];
    }
    throw PreconditionError("unknown column name: " + std::string(name));
}

bool SampleBatch::has_column(std::string_view name) const {
    for (const auto& n : names) {
        if (n == name) return true;
    }
    return false;
}

SampleBatch sample(const ChannelParams& params,
                   const std::optional<GenieSpec>& genie, std::size_t n,
                   std::uint64_t seed) {
    validate(params);
    if (genie) validate_genie(*genie);
    if (n == 0) throw PreconditionError("sample batch must not be empty");

    SampleBatch batch;
    batch.seed = seed;
    batch.n = n;
    batch.names = genie ? std::vector<std::string>{"X1", "X2", "Z1", "Z2", "W1",
                                                   "W2", "Y1", "Y2", "S1", "S2"}
                        : std::vector<std::string>{"X1", "X2", "Z1", "Z2", "Y1", "Y2"};
    batch.columns.assign(batch.names.size(), std::vector<double>(n));

    const double sp1 = std::sqrt(params.p1);
    const double sp2 = std::sqrt(params.p2);
    const double h12 = params.h12, h21 = params.h21;
    const double rho1 = genie ? genie->rho1 : 0.0;
    const double rho2 = genie ? genie->rho2 : 0.0;
    const double orth1 = genie ? std::sqrt(1.0 - rho1 * rho1) : 0.0;
    const double orth2 = genie ? std::sqrt(1.0 - rho2 * rho2) : 0.0;

    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < n; ++i) {
        double gx1, gx2, z1, z2, u1, u2;
        normal_pair(gen, gx1, gx2);
        normal_pair(gen, z1, z2);
        normal_pair(gen, u1, u2);

        const double x1 = sp1 * gx1;
        const double x2 = sp2 * gx2;
        const double y1 = x1 + h12 * x2 + z1;
        const double y2 = x2 + h21 * x1 + z2;

        if (genie) {
            const double w1 = rho1 * z1 + orth1 * u1;
            const double w2 = rho2 * z2 + orth2 * u2;
            const double s1 = h21 * (x1 + genie->eta1 * w1);
            const double s2 = h12 * (x2 + genie->eta2 * w2);
            batch.columns[0][i] = x1;
            batch.columns[1][i] = x2;
            batch.columns[2][i] = z1;
            batch.columns[3][i] = z2;
            batch.columns[4][i] = w1;
            batch.columns[5][i] = w2;
            batch.columns[6][i] = y1;
            batch.columns[7][i] = y2;
            batch.columns[8][i] = s1;
            batch.columns[9][i] = s2;
        } else {
            batch.columns[0][i] = x1;
            batch.columns[1][i] = x2;
            batch.columns[2][i] = z1;
            batch.columns[3][i] = z2;
            batch.columns[4][i] = y1;
            batch.columns[5][i] = y2;
        }
    }
    return batch;
}

MiEstimate empirical_mi(const SampleBatch& batch, std::string_view target,
                        const std::vector<std::string>& observed) {
    if (observed.empty()) {
        throw PreconditionError("empirical_mi requires observed columns");
    }
    std::vector<std::string> names{std::string(target)};
    names.insert(names.end(), observed.begin(), observed.end());
    std::vector<const std::vector<double>*> cols;
    cols.reserve(names.size());
    for (const auto& name : names) cols.push_back(&batch.column(name));

    constexpr std::size_t kFolds = 10;
    if (batch.n < kFolds * (cols.size() + 1)) {
        throw PreconditionError("batch too small for a 10-fold error estimate");
    }

    MiEstimate out;
    try {
        MomentSums total(static_cast<Eigen::Index>(cols.size()));
        double fold_sum = 0.0, fold_sq = 0.0;
        for (std::size_t f = 0; f < kFolds; ++f) {
            const std::size_t begin = batch.n * f / kFolds;
            const std::size_t end = batch.n * (f + 1) / kFolds;
            const MomentSums fold = accumulate(cols, begin, end);
            total.add(fold);
            const double mi =
                gaussian_mi_from_cov(fold.cov(), names, target, observed);
            fold_sum += mi;
            fold_sq += mi * mi;
        }
        out.estimate = gaussian_mi_from_cov(total.cov(), names, target, observed);
        const double mean = fold_sum / kFolds;
        const double var = std::max(0.0, fold_sq / kFolds - mean * mean) *
                           kFolds / (kFolds - 1.0);
        out.std_error = std::sqrt(var / kFolds);
    } catch (const PreconditionError& e) {
        // the empirical covariance failed its positive-semidefinite screen
        throw DegenerateObservationError(std::string("degenerate batch: ") + e.what());
    }
    return out;
}

void dump_batch_csv(const SampleBatch& batch, std::ostream& out) {
    for (std::size_t j = 0; j < batch.names.size(); ++j) {
        if (j) out << ',';
        out << batch.names[j];
    }
    out << '\n';
    char buf[40];
    for (std::size_t i = 0; i < batch.n; ++i) {
        for (std::size_t j = 0; j < batch.columns.size(); ++j) {
            if (j) out << ',';
            std::snprintf(buf, sizeof buf, "%.17g", batch.columns[j][i]);
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace gic
