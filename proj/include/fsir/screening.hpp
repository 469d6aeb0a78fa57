#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fsir/numerics.hpp"
#include "fsir/sliced_data.hpp"

namespace fsir {

enum class VoteUnit { client, slice };

/// Multiset of flagged covariate indices (1-based) uploaded by one client.
struct ClientVote {
    std::map<int, int> multiplicity;  ///< index -> count, ordered by index
    int empty_slices = 0;             ///< slices skipped because they held no samples
    double threshold = 0.0;           ///< t actually used
};

struct ActiveSet {
    std::vector<int> indices;  ///< sorted, distinct, 1-based

    bool empty() const { return indices.empty(); }
    std::size_t size() const { return indices.size(); }
};

struct ScreeningParams {
    std::optional<double> threshold;  ///< fixed t; when unset, the (1 - gamma) quantile of Omega
    double gamma = 0.05;
    VoteUnit vote_unit = VoteUnit::client;
};

/// p x H matrix of |within-slice mean of clamp(x, r)|, slice count as divisor.
/// Columns of empty slices are NaN.
Matrix conditional_mean_magnitudes(const LabeledDataset& d, double r);

ClientVote ccmd_client(const LabeledDataset& d, double r, const ScreeningParams& params);

/// Keeps j when its pooled multiplicity exceeds k / 2.
ActiveSet ccmd_aggregate(const std::vector<ClientVote>& votes, int k);

LabeledDataset restrict_dataset(const LabeledDataset& d, const ActiveSet& a);

}  // namespace fsir
