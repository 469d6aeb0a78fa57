#include "fsir/simgen.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fsir/error.hpp"

namespace fsir {

CovStructure ModelSpec::covariance() const {
    return model == Model::II || model == Model::IV ? CovStructure::ar1 : CovStructure::identity;
}

Model parse_model(std::string_view name) {
    if (name == "I" || name == "1") return Model::I;
    if (name == "II" || name == "2") return Model::II;
    if (name == "III" || name == "3") return Model::III;
    if (name == "IV" || name == "4") return Model::IV;
    if (name == "V" || name == "5") return Model::V;
    throw InvalidInput(fmt::format("unknown model '{}'", name));
}

std::string_view model_name(Model m) {
    switch (m) {
        case Model::I: return "I";
        case Model::II: return "II";
        case Model::III: return "III";
        case Model::IV: return "IV";
        case Model::V: return "V";
    }
    return "?";
}

int structure_dimension(Model m) { return m == Model::I || m == Model::II ? 1 : 2; }

int default_sparsity(Eigen::Index p) { return p <= 500 ? 5 : 10; }

Matrix make_beta(Model model, Eigen::Index p, bool sparse, SeededRng& rng) {
    const int s = sparse ? default_sparsity(p) : 0;
    if (sparse ? p < s : p < 10)
        throw InvalidInput(fmt::format("make_beta: p = {} too small", p));

    Matrix beta = Matrix::Zero(p, structure_dimension(model));
    if (model == Model::I || model == Model::II) {
        const Eigen::Index support = sparse ? s : p;
        for (Eigen::Index j = 0; j < support; ++j) beta(j, 0) = 0.4 + 0.4 * rng.uniform();
    } else if (!sparse) {
        beta.col(0).head(5).setOnes();
        beta.col(1).segment(5, p - 5).setOnes();
    } else {
        const int s0 = (s + 1) / 2;
        beta.col(0).head(s0).setOnes();
        // 1-based s - s0 <= j <= s
        for (int j = s - s0; j <= s; ++j) beta(j - 1, 1) = 1.0;
    }
    for (Eigen::Index c = 0; c < beta.cols(); ++c) beta.col(c).normalize();
    return beta;
}

ModelSpec make_spec(Model model, Eigen::Index p, bool sparse, SeededRng& rng) {
    ModelSpec spec;
    spec.model = model;
    spec.p = p;
    spec.sparse = sparse;
    spec.s = sparse ? default_sparsity(p) : 0;
    spec.true_beta = make_beta(model, p, sparse, rng);
    return spec;
}

namespace {

RowMatrix draw_covariates(const ModelSpec& spec, Eigen::Index n, SeededRng& rng) {
    RowMatrix x(n, spec.p);
    const bool ar1 = spec.covariance() == CovStructure::ar1;
    const double innovation = std::sqrt(0.75);
    for (Eigen::Index i = 0; i < n; ++i) {
        x(i, 0) = rng.normal();
        for (Eigen::Index j = 1; j < spec.p; ++j) {
            const double z = rng.normal();
            x(i, j) = ar1 ? 0.5 * x(i, j - 1) + innovation * z : z;
        }
    }
    return x;
}

}  // namespace

LabeledDataset generate(const ModelSpec& spec, Eigen::Index n, SeededRng& rng) {
    if (n < 1) throw InvalidInput("generate: n must be positive");
    if (spec.true_beta.rows() != spec.p || spec.true_beta.cols() != structure_dimension(spec.model))
        throw InvalidInput("generate: true_beta has the wrong shape");
    if (!(spec.noise_scale >= 0.0)) throw InvalidInput("generate: noise_scale must be >= 0");

    LabeledDataset d;
    d.response.resize(static_cast<std::size_t>(n));
    const double e = spec.noise_scale;

    if (spec.model == Model::V) {
        d.x.resize(n, spec.p);
        const auto g1 = spec.true_beta.col(0);
        const auto g2 = spec.true_beta.col(1);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double y = rng.normal();
            d.response[static_cast<std::size_t>(i)] = y;
            for (Eigen::Index j = 0; j < spec.p; ++j)
                d.x(i, j) = g1(j) * y + g2(j) * y * y + e * rng.normal();
        }
        return d;
    }

    d.x = draw_covariates(spec, n, rng);
    const Vector u1 = d.x * spec.true_beta.col(0);
    const Vector u2 = spec.true_beta.cols() > 1 ? Vector(d.x * spec.true_beta.col(1)) : Vector();
    for (Eigen::Index i = 0; i < n; ++i) {
        double y = 0.0;
        switch (spec.model) {
            case Model::I:
                if (spec.binary_law == BinaryLaw::threshold)
                    y = u1(i) > 0.0 ? 1.0 : 0.0;
                else
                    y = rng.uniform() < 1.0 / (1.0 + std::exp(-u1(i))) ? 1.0 : 0.0;
                break;
            case Model::II: {
                const double t = u1(i) + 1.0;
                y = 1.0 / (0.5 + t * t) + e * rng.normal();
                break;
            }
            case Model::III:
                y = u1(i) / (u2(i) * u2(i) * u2(i) + 1.0) + e * rng.normal();
                break;
            case Model::IV:
                y = std::sin(u1(i)) * std::exp(u2(i) + e * rng.normal());
                break;
            case Model::V:
                break;
        }
        d.response[static_cast<std::size_t>(i)] = y;
    }

    if (spec.model == Model::I) {
        d.labels.resize(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < d.labels.size(); ++i)
            d.labels[i] = d.response[i] == 1.0 ? 2 : 1;
        d.slices = 2;
    }
    return d;
}

}  // namespace fsir
