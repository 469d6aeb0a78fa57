#pragma once

#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "fsir/dp_mech.hpp"
#include "fsir/numerics.hpp"
#include "fsir/sliced_data.hpp"

namespace fsir {

/// Frobenius distance between the orthogonal projectors onto span(b1) and
/// span(b2). Throws InvalidInput if either argument is column-rank deficient.
double projection_loss(const Matrix& b1, const Matrix& b2);

/// Largest principal angle between span(b1) and span(b2), in [0, pi/2].
/// For single columns this is arccos(|<b1,b2>| / (|b1| |b2|)).
double subspace_angle(const Matrix& b1, const Matrix& b2);

/// <x0 (1(y0=1) - 1(y0=0)) - beta_ref, beta_hat>
double tracing_attack_score(std::span<const double> x0, int y0, const Vector& beta_hat,
                            const Vector& beta_ref);

struct RocCurve {
    std::vector<std::pair<double, double>> points;  ///< (fpr, tpr), fpr ascending, (0,0) to (1,1)
    double auc = 0.0;
};

/// ROC over every distinct threshold; higher scores mean "member". Tied
/// scores move together, so the AUC equals the Mann-Whitney statistic.
RocCurve roc_curve(const std::vector<double>& scores, const std::vector<bool>& member);

/// Trapezoidal area under a list of (fpr, tpr) points.
double trapezoid_auc(const std::vector<std::pair<double, double>>& points);

void write_roc_csv(const std::filesystem::path& path, const RocCurve& roc);
RocCurve read_roc_csv(const std::filesystem::path& path);

enum class AttackEstimator { raw, iid, vgm, fixed };

struct TracingRun {
    RocCurve roc;
    std::vector<double> scores;
    std::vector<bool> member;
};

/// One tracing-attack replication on a dataset whose response is 0/1.
/// A random sample is held out as the surrogate for beta, the rest is split
/// into equal "in" and "out" halves (one sample is dropped when the count is
/// odd), beta_hat is the mean of x_i (2 y_i - 1) over "in", and every "in"
/// and "out" sample is scored. The private estimators truncate at budget.r
/// and perturb the p x 1 mean with the corresponding mechanism; `fixed`
/// ignores the data entirely.
TracingRun tracing_experiment(const LabeledDataset& d, AttackEstimator estimator,
                              const PrivacyBudget& budget, SeededRng& rng);

/// Centers the covariates and whitens them by the inverse square root of
/// their empirical covariance.
void whiten(LabeledDataset& d);

}  // namespace fsir
