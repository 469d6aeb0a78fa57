#include "fsir/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "fsir/csv.hpp"
#include "fsir/error.hpp"
#include "fsir/kernels.hpp"

namespace fsir {
namespace {

Matrix orthonormal_basis(const Matrix& b, const char* what) {
    if (b.rows() == 0 || b.cols() == 0) throw InvalidInput(fmt::format("{}: empty basis", what));
    if (b.cols() > b.rows()) throw InvalidInput(fmt::format("{}: more columns than rows", what));
    if (!b.allFinite()) throw InvalidInput(fmt::format("{}: non-finite basis", what));
    Eigen::ColPivHouseholderQR<Matrix> qr(b);
    qr.setThreshold(1e-12);
    if (qr.rank() < b.cols()) throw InvalidInput(fmt::format("{}: basis is rank deficient", what));
    return qr.householderQ() * Matrix::Identity(b.rows(), b.cols());
}

}  // namespace

double projection_loss(const Matrix& b1, const Matrix& b2) {
    if (b1.rows() != b2.rows()) throw InvalidInput("projection_loss: row count mismatch");
    const Matrix q1 = orthonormal_basis(b1, "projection_loss");
    const Matrix q2 = orthonormal_basis(b2, "projection_loss");
    return (q1 * q1.transpose() - q2 * q2.transpose()).norm();
}

double subspace_angle(const Matrix& b1, const Matrix& b2) {
    if (b1.rows() != b2.rows()) throw InvalidInput("subspace_angle: row count mismatch");
    Matrix q1 = orthonormal_basis(b1, "subspace_angle");
    Matrix q2 = orthonormal_basis(b2, "subspace_angle");
    if (q2.cols() > q1.cols()) std::swap(q1, q2);
    const Matrix cross = q1.transpose() * q2;
    const double cos_min =
        Eigen::JacobiSVD<Matrix>(cross).singularValues().minCoeff();
    const Matrix residual = q2 - q1 * cross;
    const double sin_max = Eigen::JacobiSVD<Matrix>(residual).singularValues().maxCoeff();
    return std::atan2(sin_max, std::min(1.0, cos_min));
}

double tracing_attack_score(std::span<const double> x0, int y0, const Vector& beta_hat,
                            const Vector& beta_ref) {
    if (y0 != 0 && y0 != 1) throw InvalidInput("tracing_attack_score: y0 must be 0 or 1");
    const auto p = static_cast<Eigen::Index>(x0.size());
    if (beta_hat.size() != p || beta_ref.size() != p)
        throw InvalidInput("tracing_attack_score: dimension mismatch");
    const double sign = y0 == 1 ? 1.0 : -1.0;
    const auto& k = kernels::active();
    return sign * k.dot(x0.data(), beta_hat.data(), x0.size()) -
           k.dot(beta_ref.data(), beta_hat.data(), x0.size());
}

double trapezoid_auc(const std::vector<std::pair<double, double>>& points) {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        area += (points[i].first - points[i - 1].first) *
                (points[i].second + points[i - 1].second) / 2.0;
    return area;
}

RocCurve roc_curve(const std::vector<double>& scores, const std::vector<bool>& member) {
    if (scores.size() != member.size()) throw InvalidInput("roc_curve: size mismatch");
    const auto positives = std::count(member.begin(), member.end(), true);
    const auto negatives = static_cast<std::ptrdiff_t>(member.size()) - positives;
    if (positives == 0 || negatives == 0)
        throw InvalidInput("roc_curve: need both members and non-members");

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    RocCurve roc;
    roc.points.emplace_back(0.0, 0.0);
    std::ptrdiff_t tp = 0;
    std::ptrdiff_t fp = 0;
    for (std::size_t i = 0; i < order.size();) {
        const double s = scores[order[i]];
        while (i < order.size() && scores[order[i]] == s) {
            if (member[order[i]])
                ++tp;
            else
                ++fp;
            ++i;
        }
        roc.points.emplace_back(static_cast<double>(fp) / static_cast<double>(negatives),
                                static_cast<double>(tp) / static_cast<double>(positives));
    }
    roc.auc = trapezoid_auc(roc.points);
    return roc;
}

void write_roc_csv(const std::filesystem::path& path, const RocCurve& roc) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(roc.points.size());
    for (const auto& [fpr, tpr] : roc.points)
        rows.push_back({csv::format_number(fpr), csv::format_number(tpr)});
    csv::write(path, {"fpr", "tpr"}, rows);
}

RocCurve read_roc_csv(const std::filesystem::path& path) {
    const csv::Table t = csv::read(path);
    const auto fc = t.column("fpr");
    const auto tc = t.column("tpr");
    RocCurve roc;
    for (const auto& row : t.rows)
        roc.points.emplace_back(csv::parse_number(row[fc]), csv::parse_number(row[tc]));
    roc.auc = trapezoid_auc(roc.points);
    return roc;
}

TracingRun tracing_experiment(const LabeledDataset& d, AttackEstimator estimator,
                              const PrivacyBudget& budget, SeededRng& rng) {
    const Eigen::Index n = d.n();
    const Eigen::Index p = d.p();
    if (n < 20) throw InvalidInput("tracing_experiment: need at least 20 samples");
    if (d.response.size() != static_cast<std::size_t>(n))
        throw InvalidInput("tracing_experiment: dataset has no response");
    std::vector<int> y(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double v = d.response[i];
        if (v != 0.0 && v != 1.0) throw InvalidInput("tracing_experiment: response must be 0/1");
        y[i] = static_cast<int>(v);
    }

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    for (std::size_t i = perm.size() - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<std::size_t>(rng.below(i + 1))]);

    const Eigen::Index ref = perm[0];
    const Eigen::Index half = (n - 1) / 2;
    auto in_idx = std::span(perm).subspan(1, static_cast<std::size_t>(half));
    auto out_idx = std::span(perm).subspan(1 + static_cast<std::size_t>(half),
                                           static_cast<std::size_t>(half));

    const auto sign = [&](Eigen::Index i) { return y[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0; };
    const Vector beta_ref = d.x.row(ref).transpose() * sign(ref);

    Vector beta_hat = Vector::Zero(p);
    const auto& k = kernels::active();
    if (estimator == AttackEstimator::fixed) {
        beta_hat.setConstant(1.0 / std::sqrt(static_cast<double>(p)));
    } else if (estimator == AttackEstimator::raw) {
        for (auto i : in_idx) k.axpy(sign(i), d.x.row(i).data(), static_cast<std::size_t>(p), beta_hat.data());
        beta_hat /= static_cast<double>(half);
    } else {
        SliceMeanMatrix one;
        one.m = Matrix::Zero(p, 1);
        std::vector<double> clamped(static_cast<std::size_t>(p));
        for (auto i : in_idx) {
            k.clamp_copy_sqnorm(d.x.row(i).data(), static_cast<std::size_t>(p), budget.r, clamped.data());
            k.axpy(sign(i), clamped.data(), clamped.size(), one.m.data());
        }
        one.m /= static_cast<double>(half);
        one.n = half;
        one.r = budget.r;
        beta_hat = estimator == AttackEstimator::iid ? iid_gaussian_mechanism(one, budget, rng).col(0)
                                                     : vgm_mechanism(one, budget, rng).m_tilde.col(0);
    }

    TracingRun run;
    run.scores.reserve(static_cast<std::size_t>(2 * half));
    run.member.reserve(static_cast<std::size_t>(2 * half));
    const auto score = [&](Eigen::Index i, bool member) {
        run.scores.push_back(tracing_attack_score(
            std::span<const double>(d.x.row(i).data(), static_cast<std::size_t>(p)),
            y[static_cast<std::size_t>(i)], beta_hat, beta_ref));
        run.member.push_back(member);
    };
    for (auto i : in_idx) score(i, true);
    for (auto i : out_idx) score(i, false);

    run.roc = roc_curve(run.scores, run.member);
    return run;
}

void whiten(LabeledDataset& d) {
    if (d.n() < 2) throw InvalidInput("whiten: need at least two samples");
    center_columns(d);
    const Matrix cov = (d.x.transpose() * d.x) / static_cast<double>(d.n() - 1);
    const EigResult eig = sym_eig(0.5 * (cov + cov.transpose()));
    if (!(eig.values.minCoeff() > 0.0)) throw DegenerateData("whiten: covariance is singular");
    const Matrix inv_sqrt =
        eig.vectors * eig.values.cwiseSqrt().cwiseInverse().asDiagonal() * eig.vectors.transpose();
    d.x = d.x * inv_sqrt;
}

}  // namespace fsir
