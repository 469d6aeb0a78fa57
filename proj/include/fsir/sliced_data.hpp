#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fsir/numerics.hpp"

namespace fsir {

/// One client's samples: covariates plus either a continuous response
/// (to be sliced) or categorical slice labels.
struct LabeledDataset {
    RowMatrix x;                     ///< n x p, one sample per row
    std::vector<double> response;    ///< continuous response; may be empty for categorical data
    std::vector<int> labels;         ///< slice label per sample in 1..slices, empty until assigned
    int slices = 0;                  ///< H
    std::vector<std::string> names;  ///< covariate names, optional

    Eigen::Index n() const { return x.rows(); }
    Eigen::Index p() const { return x.cols(); }
    bool labeled() const { return !labels.empty(); }
};

/// How continuous responses are cut into slices.
struct SlicingRule {
    enum class Kind { local, fixed_breaks };
    Kind kind = Kind::local;
    std::vector<double> breaks;  ///< ascending interior break points (fixed_breaks only)
};

/// Equal-frequency slicing: the sample of rank r (0-based, ties broken by
/// original index) gets label floor(r*h/n) + 1.
std::vector<int> slice_response(std::span<const double> y, int h);

/// Label = 1 + number of breaks strictly below y.
std::vector<int> slice_fixed_breaks(std::span<const double> y, std::span<const double> breaks);

/// Fills d.labels from d.response unless labels are already present.
void assign_slices(LabeledDataset& d, const SlicingRule& rule, int h);

/// Entrywise clamp to [-r, r].
RowMatrix truncate(const RowMatrix& x, double r);

/// Subtracts the column means in place.
void center_columns(LabeledDataset& d);

struct SliceMeanMatrix {
    Matrix m;             ///< p x H
    Eigen::Index n = 0;   ///< sample count used as the divisor
    double r = 0.0;       ///< truncation level
};

/// Column h holds (1/n) sum_i clamp(x_i, r) 1(y_i = h). The divisor is the
/// full sample size, not the slice size.
SliceMeanMatrix slice_mean_matrix(const LabeledDataset& d, double r);

struct CovarianceEstimate {
    Matrix sigma;        ///< (1/n) Xt' Xt on truncated data, exactly symmetric
    double c_r = 0.0;    ///< largest row norm of the truncated design
    Eigen::Index n = 0;
};

CovarianceEstimate covariance_estimate(const LabeledDataset& d, double r);

/// Reads a header-first CSV. The named response column becomes the response;
/// every other column must be numeric and becomes a covariate. When
/// `categorical` is set the distinct response values map to labels 1..H, in
/// numeric order when all of them are numbers and in text order otherwise.
LabeledDataset read_dataset_csv(const std::filesystem::path& path,
                                const std::string& response_column, bool categorical);

/// Writes covariates and response (or labels when there is no response).
void write_dataset_csv(const std::filesystem::path& path, const LabeledDataset& d,
                       const std::string& response_column = "y");

}  // namespace fsir
