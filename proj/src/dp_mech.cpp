#include "fsir/dp_mech.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fsir/error.hpp"

namespace fsir {

void PrivacyBudget::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InvalidInput(fmt::format("privacy budget: epsilon must be positive (got {})", epsilon));
    if (!(delta > 0.0 && delta < 1.0))
        throw InvalidInput(fmt::format("privacy budget: delta must lie in (0,1) (got {})", delta));
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvalidInput(fmt::format("privacy budget: R must be positive (got {})", r));
}

std::string_view mechanism_name(Mechanism m) {
    switch (m) {
        case Mechanism::none: return "none";
        case Mechanism::iid: return "iid";
        case Mechanism::vgm: return "vgm";
    }
    return "unknown";
}

Matrix VgmNoiseSpec::covariance() const {
    return basis * eigvals.asDiagonal() * basis.transpose();
}

double l2_sensitivity(Eigen::Index p, Eigen::Index n, double r) {
    if (p < 1 || n < 1 || !(r > 0.0)) throw InvalidInput("l2_sensitivity: need p, n >= 1 and r > 0");
    return 2.0 * r * std::sqrt(static_cast<double>(p)) / static_cast<double>(n);
}

std::int64_t min_sample_size(const PrivacyBudget& budget, Eigen::Index p, double sigma0) {
    budget.validate();
    if (!(sigma0 > 0.0)) throw InvalidInput("min_sample_size: sigma0 must be positive");
    const double raw = 2.0 * budget.r *
                       std::sqrt(2.0 * static_cast<double>(p) * std::log(1.25 / budget.delta)) /
                       (sigma0 * budget.epsilon);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(raw)));
}

bool budget_check(Eigen::Index n, const PrivacyBudget& budget, Eigen::Index p, double sigma0) {
    return n >= min_sample_size(budget, p, sigma0);
}

double iid_noise_variance(const PrivacyBudget& budget, Eigen::Index p, Eigen::Index n) {
    budget.validate();
    const double d2 = l2_sensitivity(p, n, budget.r);
    return 2.0 * d2 * d2 * std::log(1.25 / budget.delta) / (budget.epsilon * budget.epsilon);
}

Matrix iid_gaussian_mechanism(const SliceMeanMatrix& m_bar, const PrivacyBudget& budget,
                              SeededRng& rng) {
    const double sd = std::sqrt(iid_noise_variance(budget, m_bar.m.rows(), m_bar.n));
    return m_bar.m + gaussian_matrix(rng, m_bar.m.rows(), m_bar.m.cols(), 0.0, sd);
}

double vgm_noise_floor(const PrivacyBudget& budget, Eigen::Index p, Eigen::Index n,
                       VgmBound bound) {
    budget.validate();
    if (n < 1) throw InvalidInput("vgm_noise_floor: n must be positive");
    const double log_term = std::log(2.0 / budget.delta);
    const double eps = budget.epsilon;
    if (bound == VgmBound::approx) {
        const double nn = static_cast<double>(n);
        return 8.0 * budget.r * budget.r * static_cast<double>(p) * log_term / (nn * nn * eps * eps);
    }
    const double d2 = l2_sensitivity(p, n, budget.r);
    const double denom =
        4.0 * log_term + 2.0 * eps - 4.0 * std::sqrt(log_term * log_term + log_term * eps);
    if (!(denom > 0.0)) throw InvalidInput("vgm_noise_floor: exact bound is not positive");
    return d2 * d2 / denom;
}

int largest_eigengap(const Vector& s, Eigen::Index count) {
    if (count < 1 || count > s.size()) throw InvalidInput("largest_eigengap: bad singular value count");
    if (count == 1) return 1;
    int best = 1;
    double best_gap = s(0) - s(1);
    for (Eigen::Index j = 1; j + 1 < count; ++j) {
        const double gap = s(j) - s(j + 1);
        if (gap > best_gap) {
            best_gap = gap;
            best = static_cast<int>(j) + 1;
        }
    }
    return best;
}

VgmResult vgm_mechanism(const SliceMeanMatrix& m_bar, const PrivacyBudget& budget,
                        SeededRng& rng, VgmBound bound) {
    const Eigen::Index p = m_bar.m.rows();
    const Eigen::Index h = m_bar.m.cols();
    if (p < 1 || h < 1) throw InvalidInput("vgm_mechanism: empty slice mean matrix");
    const double floor = vgm_noise_floor(budget, p, m_bar.n, bound);

    SvdResult dec = svd(m_bar.m, SvdBasis::full_left);
    const Eigen::Index count = std::min(p, h);
    const int d_hat = largest_eigengap(dec.s, count);

    Vector v = Vector::Constant(p, floor);
    if (count == 1) {
        v(0) += dec.s(0);
    } else {
        for (int j = 0; j < d_hat; ++j) v(j) += dec.s(j) - dec.s(j + 1);
    }

    const Matrix z = gaussian_matrix(rng, p, h, 0.0, 1.0);
    VgmResult out;
    out.m_tilde = m_bar.m + dec.u * (v.array().sqrt().matrix().asDiagonal() * z);
    out.d_hat = d_hat;
    out.spec.basis = std::move(dec.u);
    out.spec.eigvals = std::move(v);
    out.spec.floor = floor;
    return out;
}

double covariance_noise_sd(Eigen::Index p, Eigen::Index n, double epsilon_x, double delta_x) {
    if (p < 1 || n < 1) throw InvalidInput("covariance_noise_sd: need p, n >= 1");
    if (!(epsilon_x > 0.0) || !(delta_x > 0.0 && delta_x < 1.0))
        throw InvalidInput("covariance_noise_sd: invalid budget");
    const double pp = static_cast<double>(p);
    const double nn = static_cast<double>(n);
    const double arg = (pp * pp + pp) / (2.0 * std::sqrt(2.0 * std::numbers::pi) * delta_x);
    return (pp + 1.0) / (nn * epsilon_x) * std::sqrt(2.0 * std::log(arg)) +
           1.0 / (nn * std::sqrt(epsilon_x));
}

Matrix private_covariance(const CovarianceEstimate& cov, const PrivacyBudget& budget_x,
                          SeededRng& rng, CovNoise mode) {
    if (!(cov.c_r > 0.0)) throw DegenerateData("private_covariance: c_r must be positive");
    budget_x.validate();
    const Eigen::Index p = cov.sigma.rows();
    const double sd = covariance_noise_sd(p, cov.n, budget_x.epsilon, budget_x.delta);
    const double scale = mode == CovNoise::rescaled ? cov.c_r * cov.c_r : 1.0;
    return cov.sigma + scale * symmetric_gaussian(rng, p, sd);
}

}  // namespace fsir
