#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fsir/numerics.hpp"
#include "fsir/sliced_data.hpp"

namespace fsir {

struct PrivacyBudget {
    double epsilon = 1.0;
    double delta = 1e-3;
    double r = 3.0;  ///< truncation level R

    void validate() const;  ///< throws InvalidInput
};

enum class Mechanism { none, iid, vgm };

std::string_view mechanism_name(Mechanism m);

/// Which bound from the VGM privacy theorem sets the eigenvalue floor.
enum class VgmBound { approx, exact };

/// How the covariance perturbation is scaled before it is added.
///  rescaled: Sigma + c_r^2 A (mechanism applied to Sigma / c_r^2, which has
///            unit row norms, then scaled back)
///  unit:     Sigma + A
enum class CovNoise { rescaled, unit };

struct VgmNoiseSpec {
    Matrix basis;    ///< p x p orthonormal, left singular vectors of M completed to a basis
    Vector eigvals;  ///< aligned with basis columns, all >= floor
    double floor = 0.0;

    /// basis * diag(eigvals) * basis'
    Matrix covariance() const;
};

struct ClientUpload {
    Matrix m_tilde;      ///< p x H
    Matrix sigma_tilde;  ///< p x p, symmetric
    Eigen::Index n = 0;
    Mechanism mechanism = Mechanism::none;
    int d_hat = 0;       ///< vgm only
    double c_r = 0.0;
    std::uint64_t client_id = 0;
    std::optional<VgmNoiseSpec> vgm;
};

double l2_sensitivity(Eigen::Index p, Eigen::Index n, double r);

/// ceil(2 R sqrt(2 p log(1.25/delta)) / (sigma0 epsilon)), at least 1.
std::int64_t min_sample_size(const PrivacyBudget& budget, Eigen::Index p, double sigma0);

bool budget_check(Eigen::Index n, const PrivacyBudget& budget, Eigen::Index p, double sigma0);

/// Per-entry variance 2 Delta^2 log(1.25/delta) / epsilon^2.
double iid_noise_variance(const PrivacyBudget& budget, Eigen::Index p, Eigen::Index n);

Matrix iid_gaussian_mechanism(const SliceMeanMatrix& m_bar, const PrivacyBudget& budget,
                              SeededRng& rng);

/// Smallest admissible eigenvalue of the VGM noise covariance.
/// approx: 8 R^2 p log(2/delta) / (n^2 epsilon^2).
/// exact:  Delta^2 / (4 log(2/delta) + 2 epsilon - 4 sqrt(log(2/delta)^2 + epsilon log(2/delta)))
///         with Delta = 2 R sqrt(p) / n.
double vgm_noise_floor(const PrivacyBudget& budget, Eigen::Index p, Eigen::Index n,
                       VgmBound bound = VgmBound::approx);

/// Index (1-based) of the largest gap s_j - s_{j+1} among the first
/// min(p, H) singular values; the smallest index wins ties. With a single
/// singular value the answer is 1.
int largest_eigengap(const Vector& s, Eigen::Index count);

struct VgmResult {
    Matrix m_tilde;
    int d_hat = 0;
    VgmNoiseSpec spec;
};

VgmResult vgm_mechanism(const SliceMeanMatrix& m_bar, const PrivacyBudget& budget,
                        SeededRng& rng, VgmBound bound = VgmBound::approx);

/// Standard deviation of the symmetric Gaussian perturbation for a
/// covariance built from rows of norm at most one.
double covariance_noise_sd(Eigen::Index p, Eigen::Index n, double epsilon_x, double delta_x);

Matrix private_covariance(const CovarianceEstimate& cov, const PrivacyBudget& budget_x,
                          SeededRng& rng, CovNoise mode = CovNoise::rescaled);

}  // namespace fsir
