#pragma once

#include <string_view>

#include "fsir/numerics.hpp"
#include "fsir/sliced_data.hpp"

namespace fsir {

enum class Model { I, II, III, IV, V };

enum class CovStructure { identity, ar1 };

/// Response law for model I.
enum class BinaryLaw { bernoulli, threshold };

struct ModelSpec {
    Model model = Model::I;
    Eigen::Index p = 10;
    bool sparse = false;
    int s = 0;       ///< support size in the sparse regime
    Matrix true_beta;  ///< p x d, unit columns
    BinaryLaw binary_law = BinaryLaw::bernoulli;
    double noise_scale = 1.0;  ///< multiplies the model error; 0 gives noiseless data

    CovStructure covariance() const;
    int d() const { return static_cast<int>(true_beta.cols()); }
};

Model parse_model(std::string_view name);
std::string_view model_name(Model m);
int structure_dimension(Model m);

/// Support size used in the sparse regime: 5 when p <= 500, else 10.
int default_sparsity(Eigen::Index p);

/// True directions. Models I and II draw Unif(0.4, 0.8) loadings (on all p
/// coordinates, or the first s when sparse); III to V use fixed indicator
/// patterns. Columns are normalized.
Matrix make_beta(Model model, Eigen::Index p, bool sparse, SeededRng& rng);

/// Builds a spec with its true_beta drawn from `rng`.
ModelSpec make_spec(Model model, Eigen::Index p, bool sparse, SeededRng& rng);

/// Draws n samples. Model I yields a 0/1 response with labels 1/2 already
/// assigned; the others yield a continuous response and no labels.
LabeledDataset generate(const ModelSpec& spec, Eigen::Index n, SeededRng& rng);

}  // namespace fsir
