#include "fsir/sliced_data.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "fsir/csv.hpp"
#include "fsir/error.hpp"
#include "fsir/kernels.hpp"

namespace fsir {

std::vector<int> slice_response(std::span<const double> y, int h) {
    if (h < 2) throw InvalidInput("slice_response: need at least 2 slices");
    const std::size_t n = y.size();
    if (n < static_cast<std::size_t>(h))
        throw InvalidInput(fmt::format("slice_response: {} samples for {} slices", n, h));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return y[a] < y[b]; });

    std::vector<int> labels(n);
    for (std::size_t rank = 0; rank < n; ++rank)
        labels[order[rank]] = static_cast<int>(rank * static_cast<std::size_t>(h) / n) + 1;
    return labels;
}

std::vector<int> slice_fixed_breaks(std::span<const double> y, std::span<const double> breaks) {
    if (!std::is_sorted(breaks.begin(), breaks.end()))
        throw InvalidInput("slice_fixed_breaks: breaks must be ascending");
    std::vector<int> labels(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        labels[i] =
            1 + static_cast<int>(std::lower_bound(breaks.begin(), breaks.end(), y[i]) - breaks.begin());
    return labels;
}

void assign_slices(LabeledDataset& d, const SlicingRule& rule, int h) {
    if (d.labeled()) return;
    if (d.response.size() != static_cast<std::size_t>(d.n()))
        throw InvalidInput("assign_slices: response length does not match sample count");
    if (rule.kind == SlicingRule::Kind::fixed_breaks) {
        d.labels = slice_fixed_breaks(d.response, rule.breaks);
        d.slices = static_cast<int>(rule.breaks.size()) + 1;
    } else {
        d.labels = slice_response(d.response, h);
        d.slices = h;
    }
}

RowMatrix truncate(const RowMatrix& x, double r) {
    if (!(r > 0.0)) throw InvalidInput("truncate: r must be positive");
    return x.cwiseMax(-r).cwiseMin(r);
}

void center_columns(LabeledDataset& d) {
    if (d.n() == 0) return;
    const Eigen::RowVectorXd mean = d.x.colwise().mean();
    d.x.rowwise() -= mean;
}

namespace {

void check_labels(const LabeledDataset& d) {
    if (!d.labeled()) throw InvalidInput("dataset has no slice labels");
    if (d.labels.size() != static_cast<std::size_t>(d.n()))
        throw InvalidInput("label count does not match sample count");
    for (int label : d.labels)
        if (label < 1 || label > d.slices)
            throw InvalidInput(fmt::format("label {} outside 1..{}", label, d.slices));
}

}  // namespace

SliceMeanMatrix slice_mean_matrix(const LabeledDataset& d, double r) {
    if (d.n() == 0) throw InvalidInput("slice_mean_matrix: empty dataset");
    if (!(r > 0.0)) throw InvalidInput("slice_mean_matrix: r must be positive");
    check_labels(d);

    const auto& k = kernels::active();
    const auto p = static_cast<std::size_t>(d.p());
    Matrix acc = Matrix::Zero(d.p(), d.slices);
    for (Eigen::Index i = 0; i < d.n(); ++i)
        k.clamp_accumulate(d.x.row(i).data(), p, r, acc.col(d.labels[i] - 1).data());

    SliceMeanMatrix out;
    out.m = acc / static_cast<double>(d.n());
    out.n = d.n();
    out.r = r;
    return out;
}

CovarianceEstimate covariance_estimate(const LabeledDataset& d, double r) {
    if (d.n() == 0) throw InvalidInput("covariance_estimate: empty dataset");
    if (!(r > 0.0)) throw InvalidInput("covariance_estimate: r must be positive");

    const auto& k = kernels::active();
    const auto p = static_cast<std::size_t>(d.p());
    RowMatrix xt(d.n(), d.p());
    double max_sq = 0.0;
    for (Eigen::Index i = 0; i < d.n(); ++i)
        max_sq = std::max(max_sq, k.clamp_copy_sqnorm(d.x.row(i).data(), p, r, xt.row(i).data()));
    if (!(max_sq > 0.0)) throw DegenerateData("covariance_estimate: all-zero data (c_r = 0)");

    Matrix gram = Matrix::Zero(d.p(), d.p());
    gram.selfadjointView<Eigen::Lower>().rankUpdate(xt.transpose());
    CovarianceEstimate out;
    out.sigma = Matrix(gram.selfadjointView<Eigen::Lower>()) / static_cast<double>(d.n());
    out.c_r = std::sqrt(max_sq);
    out.n = d.n();
    return out;
}

LabeledDataset read_dataset_csv(const std::filesystem::path& path,
                                const std::string& response_column, bool categorical) {
    const csv::Table table = csv::read(path);
    const std::size_t ycol = table.column(response_column);
    if (table.rows.empty()) throw InvalidInput("read_dataset_csv: no data rows");

    LabeledDataset d;
    for (std::size_t c = 0; c < table.header.size(); ++c)
        if (c != ycol) d.names.push_back(table.header[c]);
    const auto n = static_cast<Eigen::Index>(table.rows.size());
    const auto p = static_cast<Eigen::Index>(d.names.size());
    if (p == 0) throw InvalidInput("read_dataset_csv: no covariate columns");
    d.x.resize(n, p);
    std::vector<std::string> raw_y;
    raw_y.reserve(table.rows.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = table.rows[static_cast<std::size_t>(i)];
        Eigen::Index j = 0;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c == ycol)
                raw_y.push_back(row[c]);
            else
                d.x(i, j++) = csv::parse_number(row[c]);
        }
    }

    if (!categorical) {
        for (const auto& v : raw_y) d.response.push_back(csv::parse_number(v));
        return d;
    }
    // Numeric categories sort by value, text categories lexicographically.
    bool numeric = true;
    std::vector<double> values;
    for (const auto& v : raw_y) {
        try {
            values.push_back(csv::parse_number(v));
        } catch (const InvalidInput&) {
            numeric = false;
            break;
        }
    }
    if (numeric) {
        d.response = values;
        std::map<double, int> codes;
        for (double v : values) codes.emplace(v, 0);
        int next = 1;
        for (auto& [value, code] : codes) code = next++;
        for (double v : values) d.labels.push_back(codes.at(v));
        d.slices = static_cast<int>(codes.size());
    } else {
        std::map<std::string, int> codes;
        for (const auto& v : raw_y) codes.emplace(v, 0);
        int next = 1;
        for (auto& [value, code] : codes) code = next++;
        for (const auto& v : raw_y) d.labels.push_back(codes.at(v));
        d.slices = static_cast<int>(codes.size());
    }
    return d;
}

void write_dataset_csv(const std::filesystem::path& path, const LabeledDataset& d,
                       const std::string& response_column) {
    std::vector<std::string> header;
    for (Eigen::Index j = 0; j < d.p(); ++j)
        header.push_back(static_cast<std::size_t>(j) < d.names.size()
                             ? d.names[static_cast<std::size_t>(j)]
                             : fmt::format("x{}", j + 1));
    header.push_back(response_column);
    const bool use_response = d.response.size() == static_cast<std::size_t>(d.n());
    if (!use_response && !d.labeled())
        throw InvalidInput("write_dataset_csv: dataset has neither response nor labels");

    std::vector<std::vector<std::string>> rows;
    rows.reserve(static_cast<std::size_t>(d.n()));
    for (Eigen::Index i = 0; i < d.n(); ++i) {
        std::vector<std::string> row;
        row.reserve(header.size());
        for (Eigen::Index j = 0; j < d.p(); ++j) row.push_back(csv::format_number(d.x(i, j)));
        const auto si = static_cast<std::size_t>(i);
        row.push_back(use_response ? csv::format_number(d.response[si])
                                   : std::to_string(d.labels[si]));
        rows.push_back(std::move(row));
    }
    csv::write(path, header, rows);
}

}  // namespace fsir
