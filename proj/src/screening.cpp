#include "fsir/screening.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "fsir/error.hpp"
#include "fsir/kernels.hpp"

namespace fsir {
namespace {

/// Linear interpolation between order statistics (the usual "type 7" rule).
double quantile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

}  // namespace

Matrix conditional_mean_magnitudes(const LabeledDataset& d, double r) {
    if (!d.labeled()) throw InvalidInput("ccmd: dataset has no slice labels");
    if (d.labels.size() != static_cast<std::size_t>(d.n()))
        throw InvalidInput("ccmd: label count does not match sample count");
    if (!(r > 0.0)) throw InvalidInput("ccmd: r must be positive");

    const auto& k = kernels::active();
    const auto p = static_cast<std::size_t>(d.p());
    Matrix sums = Matrix::Zero(d.p(), d.slices);
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(d.slices), 0);
    for (Eigen::Index i = 0; i < d.n(); ++i) {
        const int label = d.labels[static_cast<std::size_t>(i)];
        if (label < 1 || label > d.slices)
            throw InvalidInput(fmt::format("ccmd: label {} outside 1..{}", label, d.slices));
        k.clamp_accumulate(d.x.row(i).data(), p, r, sums.col(label - 1).data());
        ++counts[static_cast<std::size_t>(label - 1)];
    }
    for (Eigen::Index h = 0; h < d.slices; ++h) {
        const auto c = counts[static_cast<std::size_t>(h)];
        if (c == 0)
            sums.col(h).setConstant(std::numeric_limits<double>::quiet_NaN());
        else
            sums.col(h) = sums.col(h).cwiseAbs() / static_cast<double>(c);
    }
    return sums;
}

ClientVote ccmd_client(const LabeledDataset& d, double r, const ScreeningParams& params) {
    const Matrix omega = conditional_mean_magnitudes(d, r);

    ClientVote vote;
    std::vector<double> finite;
    finite.reserve(static_cast<std::size_t>(omega.size()));
    for (Eigen::Index h = 0; h < omega.cols(); ++h) {
        if (std::isnan(omega(0, h))) {
            ++vote.empty_slices;
            continue;
        }
        for (Eigen::Index j = 0; j < omega.rows(); ++j) finite.push_back(omega(j, h));
    }
    if (finite.empty()) return vote;

    if (params.threshold) {
        if (!(*params.threshold > 0.0)) throw InvalidInput("ccmd: threshold must be positive");
        vote.threshold = *params.threshold;
    } else {
        if (!(params.gamma > 0.0 && params.gamma < 1.0))
            throw InvalidInput("ccmd: gamma must lie in (0,1)");
        vote.threshold = quantile(std::move(finite), 1.0 - params.gamma);
    }

    for (Eigen::Index j = 0; j < omega.rows(); ++j) {
        int flags = 0;
        for (Eigen::Index h = 0; h < omega.cols(); ++h)
            if (!std::isnan(omega(j, h)) && omega(j, h) > vote.threshold) ++flags;
        if (flags == 0) continue;
        vote.multiplicity[static_cast<int>(j) + 1] =
            params.vote_unit == VoteUnit::client ? 1 : flags;
    }
    return vote;
}

ActiveSet ccmd_aggregate(const std::vector<ClientVote>& votes, int k) {
    if (votes.empty()) throw InvalidInput("ccmd_aggregate: no votes");
    if (k < 1) throw InvalidInput("ccmd_aggregate: k must be positive");
    std::map<int, long> pooled;
    for (const auto& vote : votes)
        for (const auto& [index, count] : vote.multiplicity) pooled[index] += count;

    ActiveSet out;
    for (const auto& [index, count] : pooled)
        if (2 * count > k) out.indices.push_back(index);
    return out;
}

LabeledDataset restrict_dataset(const LabeledDataset& d, const ActiveSet& a) {
    if (a.empty()) throw ScreeningDegenerate("restrict_dataset: empty active set");
    LabeledDataset out;
    out.x.resize(d.n(), static_cast<Eigen::Index>(a.size()));
    for (std::size_t c = 0; c < a.size(); ++c) {
        const int j = a.indices[c];
        if (j < 1 || j > d.p())
            throw InvalidInput(fmt::format("restrict_dataset: index {} outside 1..{}", j, d.p()));
        if (c > 0 && a.indices[c - 1] >= j)
            throw InvalidInput("restrict_dataset: active set must be sorted and distinct");
        out.x.col(static_cast<Eigen::Index>(c)) = d.x.col(j - 1);
        if (static_cast<std::size_t>(j - 1) < d.names.size())
            out.names.push_back(d.names[static_cast<std::size_t>(j - 1)]);
    }
    out.response = d.response;
    out.labels = d.labels;
    out.slices = d.slices;
    return out;
}

}  // namespace fsir
