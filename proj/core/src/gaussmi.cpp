#include "gic/gaussmi.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace gic {

namespace {

constexpr double kCondLimit = 1e12;

struct SpdInfo {
    double det = 0.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

// Eigenvalue screen applied to every observation block: strictly positive
// definite with condition number below kCondLimit.
SpdInfo spd_screen(const Eigen::MatrixXd& m, const char* what) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();
    SpdInfo info{ev.prod(), ev.minCoeff(), ev.maxCoeff()};
    if (!(info.lambda_min > 0.0)) {
        throw DegenerateObservationError(std::string(what) +
                                         ": covariance is not strictly positive definite");
    }
    if (info.lambda_max / info.lambda_min > kCondLimit) {
        throw DegenerateObservationError(std::string(what) +
                                         ": covariance condition number exceeds 1e12");
    }
    return info;
}

void check_noise_cov(const Eigen::MatrixXd& k) {
    if (k.rows() < 1 || k.rows() != k.cols()) {
        throw PreconditionError("noise covariance must be square with m >= 1");
    }
    const double scale = std::max(1.0, k.cwiseAbs().maxCoeff());
    if ((k - k.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw PreconditionError("noise covariance must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * scale) {
        throw PreconditionError("noise covariance must be positive semidefinite");
    }
}

}  // namespace

GaussianVector GaussianVector::make(std::vector<std::string> names,
                                    Eigen::MatrixXd cov) {
    const auto dim = static_cast<Eigen::Index>(names.size());
    if (dim == 0 || cov.rows() != dim || cov.cols() != dim) {
        throw PreconditionError("covariance dimension must match the name count");
    }
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) {
        throw PreconditionError("coordinate names must be unique");
    }
    if (!cov.allFinite()) {
        throw PreconditionError("covariance entries must be finite");
    }
    const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw PreconditionError("covariance must be symmetric within 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * scale) {
        throw PreconditionError("covariance must be positive semidefinite");
    }
    GaussianVector v;
    v.names = std::move(names);
    v.cov = std::move(cov);
    return v;
}

int GaussianVector::index(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    throw PreconditionError("unknown coordinate name: " + std::string(name));
}

GaussianVector assemble_joint(const ChannelParams& params,
                              const std::optional<GenieSpec>& genie) {
    validate(params);
    if (genie) validate_genie(*genie);

    const double p1 = params.p1, p2 = params.p2;
    const double h12 = params.h12, h21 = params.h21;

    std::vector<std::string> names{"X1", "X2", "Y1", "Y2"};
    const Eigen::Index dim = genie ? 6 : 4;
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);

    // X1, X2 independent; Y1 = X1 + h12 X2 + Z1, Y2 = X2 + h21 X1 + Z2.
    cov(0, 0) = p1;
    cov(1, 1) = p2;
    cov(2, 2) = p1 + h12 * h12 * p2 + 1.0;
    cov(3, 3) = p2 + h21 * h21 * p1 + 1.0;
    cov(0, 2) = cov(2, 0) = p1;
    cov(0, 3) = cov(3, 0) = h21 * p1;
    cov(1, 2) = cov(2, 1) = h12 * p2;
    cov(1, 3) = cov(3, 1) = p2;
    cov(2, 3) = cov(3, 2) = h21 * p1 + h12 * p2;

    if (genie) {
        // S1 = h21 (X1 + eta1 W1), S2 = h12 (X2 + eta2 W2); E[W_i Z_i] = rho_i.
        names.emplace_back("S1");
        names.emplace_back("S2");
        const double e1 = genie->eta1, r1 = genie->rho1;
        const double e2 = genie->eta2, r2 = genie->rho2;
        cov(4, 4) = h21 * h21 * (p1 + e1 * e1);
        cov(5, 5) = h12 * h12 * (p2 + e2 * e2);
        cov(0, 4) = cov(4, 0) = h21 * p1;
        cov(1, 5) = cov(5, 1) = h12 * p2;
        cov(2, 4) = cov(4, 2) = h21 * (p1 + e1 * r1);
        cov(2, 5) = cov(5, 2) = h12 * h12 * p2;
        cov(3, 4) = cov(4, 3) = h21 * h21 * p1;
        cov(3, 5) = cov(5, 3) = h12 * (p2 + e2 * r2);
        // X1-S2, X2-S1 stay zero: the inputs and the opposite genie noises
        // are independent.
    }
    return GaussianVector::make(std::move(names), std::move(cov));
}

Rate mi_det(const GaussianVector& joint, std::string_view target,
            const std::vector<std::string>& observed) {
    if (observed.empty()) {
        throw PreconditionError("mi_det requires at least one observed coordinate");
    }
    const int t = joint.index(target);
    std::vector<int> obs_idx;
    obs_idx.reserve(observed.size());
    for (const auto& name : observed) obs_idx.push_back(joint.index(name));
    std::set<int> unique(obs_idx.begin(), obs_idx.end());
    if (unique.size() != obs_idx.size()) {
        throw PreconditionError("observed coordinates must be distinct");
    }

    const double var_t = joint.cov(t, t);
    if (!(var_t > 0.0)) {
        throw PreconditionError("target coordinate must have positive variance");
    }

    const auto k = static_cast<Eigen::Index>(obs_idx.size());
    Eigen::MatrixXd s_obs(k, k);
    Eigen::VectorXd s_cross(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        s_cross(i) = joint.cov(obs_idx[i], t);
        for (Eigen::Index j = 0; j < k; ++j) {
            s_obs(i, j) = joint.cov(obs_idx[i], obs_idx[j]);
        }
    }

    const SpdInfo obs_info = spd_screen(s_obs, "observations");
    const Eigen::MatrixXd s_cond =
        s_obs - (s_cross * s_cross.transpose()) / var_t;
    const SpdInfo cond_info = spd_screen(s_cond, "conditional observations");

    return 0.5 * std::log2(obs_info.det / cond_info.det);
}

double mmse_sigma_sq(const NoisyObservationSet& obs) {
    if (!(std::isfinite(obs.signal_variance) && obs.signal_variance > 0.0)) {
        throw PreconditionError("signal variance must be positive finite");
    }
    check_noise_cov(obs.noise_cov);

    // minimize b'Kb subject to sum(b) = 1: one KKT solve, one multiplier.
    const Eigen::Index m = obs.noise_cov.rows();
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    kkt.topLeftCorner(m, m) = 2.0 * obs.noise_cov;
    kkt.topRightCorner(m, 1).setOnes();
    kkt.bottomLeftCorner(1, m).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    rhs(m) = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) {
        throw DegenerateObservationError("mmse combiner: singular constraint system");
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    const Eigen::VectorXd b = sol.head(m);
    const double sigma_sq = b.dot(obs.noise_cov * b);
    if (!(sigma_sq > 0.0) || !std::isfinite(sigma_sq)) {
        throw DegenerateObservationError(
            "mmse combiner: zero residual, mutual information unbounded");
    }
    return sigma_sq;
}

Rate mi_mmse(const NoisyObservationSet& obs) {
    return 0.5 * std::log2(1.0 + obs.signal_variance / mmse_sigma_sq(obs));
}

Rate combiner_rate(const NoisyObservationSet& obs, const Eigen::VectorXd& b) {
    if (!(std::isfinite(obs.signal_variance) && obs.signal_variance > 0.0)) {
        throw PreconditionError("signal variance must be positive finite");
    }
    check_noise_cov(obs.noise_cov);
    if (b.size() != obs.noise_cov.rows()) {
        throw PreconditionError("combiner length must match the observation count");
    }
    if (std::abs(b.sum() - 1.0) > 1e-9) {
        throw PreconditionError("combiner weights must sum to 1");
    }
    const double sigma_sq = b.dot(obs.noise_cov * b);
    if (!(sigma_sq > 0.0)) {
        throw DegenerateObservationError("combiner residual is not positive");
    }
    return 0.5 * std::log2(1.0 + obs.signal_variance / sigma_sq);
}

Rate cond_mi_smartcheck(const ChannelParams& params, const GenieSpec& genie) {
    const GaussianVector joint = assemble_joint(params, genie);
    return mi_det(joint, "X1", {"Y1", "S1"}) - mi_det(joint, "X1", {"Y1"});
}

Rate genie_aided_sum_rate(const ChannelParams& params, const GenieSpec& genie) {
    validate(params);
    validate_genie(genie);
    if (!genie_is_useful(params, genie)) {
        throw InvalidCertificateError(
            "genie is not useful; the genie-aided value would not be a proven "
            "upper bound");
    }
    const GaussianVector joint = assemble_joint(params, genie);
    return mi_det(joint, "X1", {"Y1", "S1"}) + mi_det(joint, "X2", {"Y2", "S2"});
}

CondEntropyPair cond_entropy_formula(const ChannelParams& params,
                                     const GenieSpec& genie, int receiver) {
    validate(params);
    validate_genie(genie);
    if (receiver != 1 && receiver != 2) {
        throw PreconditionError("receiver must be 1 or 2");
    }

    const bool first = receiver == 1;
    const double p_own = first ? params.p1 : params.p2;
    const double p_other = first ? params.p2 : params.p1;
    const double h_in = first ? params.h12 : params.h21;    // gain into this receiver
    const double h_out = first ? params.h21 : params.h12;   // gain scaling S_i
    const double eta = first ? genie.eta1 : genie.eta2;
    const double rho = first ? genie.rho1 : genie.rho2;
    if (h_out == 0.0) {
        throw PreconditionError("side information vanishes for a zero cross-gain");
    }

    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    const double body = 1.0 - rho * rho + h_in * h_in * p_other +
                        p_own * (rho - eta) * (rho - eta) / (p_own + eta * eta);

    const GaussianVector joint = assemble_joint(params, genie);
    const int y = joint.index(first ? "Y1" : "Y2");
    const int s = joint.index(first ? "S1" : "S2");
    const double var_s = joint.cov(s, s);
    if (!(var_s > 0.0)) {
        throw DegenerateObservationError("side information has zero variance");
    }
    const double var_cond =
        joint.cov(y, y) - joint.cov(y, s) * joint.cov(y, s) / var_s;

    CondEntropyPair pair;
    pair.formula_nats = 0.5 * std::log(two_pi_e * body);
    pair.covariance_nats = 0.5 * std::log(two_pi_e * var_cond);
    return pair;
}

}  // namespace gic
