#include "fsir/experiment.hpp"

namespace fsir {

// Mean projection loss (standard error) over 400 replications as published.
// Presets 1 and 2 are indexed by client sample size n, presets 3 and 4 by p.
const std::vector<PaperCell>& paper_reference() {
    static const std::vector<PaperCell> cells = {
    {1, Model::I, 500, 1, Mechanism::iid, 1.306, 0.13},
    {1, Model::I, 500, 10, Mechanism::iid, 1.268, 0.15},
    {1, Model::I, 500, 50, Mechanism::iid, 0.650, 0.19},
    {1, Model::I, 500, 100, Mechanism::iid, 0.382, 0.10},
    {1, Model::I, 500, 1, Mechanism::vgm, 1.290, 0.14},
    {1, Model::I, 500, 10, Mechanism::vgm, 1.298, 0.12},
    {1, Model::I, 500, 50, Mechanism::vgm, 0.598, 0.17},
    {1, Model::I, 500, 100, Mechanism::vgm, 0.384, 0.09},
    {1, Model::I, 1000, 1, Mechanism::iid, 1.260, 0.15},
    {1, Model::I, 1000, 10, Mechanism::iid, 0.547, 0.13},
    {1, Model::I, 1000, 50, Mechanism::iid, 0.206, 0.05},
    {1, Model::I, 1000, 100, Mechanism::iid, 0.141, 0.03},
    {1, Model::I, 1000, 1, Mechanism::vgm, 1.277, 0.16},
    {1, Model::I, 1000, 10, Mechanism::vgm, 0.500, 0.15},
    {1, Model::I, 1000, 50, Mechanism::vgm, 0.190, 0.04},
    {1, Model::I, 1000, 100, Mechanism::vgm, 0.128, 0.03},
    {1, Model::I, 2500, 1, Mechanism::iid, 1.131, 0.23},
    {1, Model::I, 2500, 10, Mechanism::iid, 0.327, 0.07},
    {1, Model::I, 2500, 50, Mechanism::iid, 0.135, 0.03},
    {1, Model::I, 2500, 100, Mechanism::iid, 0.091, 0.02},
    {1, Model::I, 2500, 1, Mechanism::vgm, 1.092, 0.25},
    {1, Model::I, 2500, 10, Mechanism::vgm, 0.287, 0.08},
    {1, Model::I, 2500, 50, Mechanism::vgm, 0.115, 0.03},
    {1, Model::I, 2500, 100, Mechanism::vgm, 0.078, 0.02},
    {1, Model::I, 5000, 1, Mechanism::iid, 0.563, 0.13},
    {1, Model::I, 5000, 10, Mechanism::iid, 0.186, 0.04},
    {1, Model::I, 5000, 50, Mechanism::iid, 0.079, 0.02},
    {1, Model::I, 5000, 100, Mechanism::iid, 0.054, 0.01},
    {1, Model::I, 5000, 1, Mechanism::vgm, 0.428, 0.11},
    {1, Model::I, 5000, 10, Mechanism::vgm, 0.140, 0.03},
    {1, Model::I, 5000, 50, Mechanism::vgm, 0.058, 0.01},
    {1, Model::I, 5000, 100, Mechanism::vgm, 0.040, 0.01},
    {1, Model::II, 500, 1, Mechanism::iid, 1.360, 0.07},
    {1, Model::II, 500, 10, Mechanism::iid, 1.374, 0.06},
    {1, Model::II, 500, 50, Mechanism::iid, 1.292, 0.14},
    {1, Model::II, 500, 100, Mechanism::iid, 1.061, 0.22},
    {1, Model::II, 500, 1, Mechanism::vgm, 1.328, 0.10},
    {1, Model::II, 500, 10, Mechanism::vgm, 1.275, 0.14},
    {1, Model::II, 500, 50, Mechanism::vgm, 1.167, 0.23},
    {1, Model::II, 500, 100, Mechanism::vgm, 0.760, 0.26},
    {1, Model::II, 1000, 1, Mechanism::iid, 1.370, 0.06},
    {1, Model::II, 1000, 10, Mechanism::iid, 1.311, 0.11},
    {1, Model::II, 1000, 50, Mechanism::iid, 0.788, 0.18},
    {1, Model::II, 1000, 100, Mechanism::iid, 0.565, 0.14},
    {1, Model::II, 1000, 1, Mechanism::vgm, 1.274, 0.16},
    {1, Model::II, 1000, 10, Mechanism::vgm, 1.057, 0.27},
    {1, Model::II, 1000, 50, Mechanism::vgm, 0.369, 0.09},
    {1, Model::II, 1000, 100, Mechanism::vgm, 0.241, 0.07},
    {1, Model::II, 2500, 1, Mechanism::iid, 1.381, 0.05},
    {1, Model::II, 2500, 10, Mechanism::iid, 1.107, 0.15},
    {1, Model::II, 2500, 50, Mechanism::iid, 0.614, 0.15},
    {1, Model::II, 2500, 100, Mechanism::iid, 0.445, 0.10},
    {1, Model::II, 2500, 1, Mechanism::vgm, 1.263, 0.16},
    {1, Model::II, 2500, 10, Mechanism::vgm, 0.547, 0.18},
    {1, Model::II, 2500, 50, Mechanism::vgm, 0.230, 0.06},
    {1, Model::II, 2500, 100, Mechanism::vgm, 0.163, 0.04},
    {1, Model::II, 5000, 1, Mechanism::iid, 1.331, 0.10},
    {1, Model::II, 5000, 10, Mechanism::iid, 0.854, 0.16},
    {1, Model::II, 5000, 50, Mechanism::iid, 0.438, 0.11},
    {1, Model::II, 5000, 100, Mechanism::iid, 0.308, 0.08},
    {1, Model::II, 5000, 1, Mechanism::vgm, 0.938, 0.28},
    {1, Model::II, 5000, 10, Mechanism::vgm, 0.281, 0.08},
    {1, Model::II, 5000, 50, Mechanism::vgm, 0.136, 0.03},
    {1, Model::II, 5000, 100, Mechanism::vgm, 0.111, 0.02},
    {1, Model::III, 500, 1, Mechanism::iid, 1.780, 0.13},
    {1, Model::III, 500, 10, Mechanism::iid, 1.760, 0.13},
    {1, Model::III, 500, 50, Mechanism::iid, 1.364, 0.18},
    {1, Model::III, 500, 100, Mechanism::iid, 1.156, 0.23},
    {1, Model::III, 500, 1, Mechanism::vgm, 1.773, 0.13},
    {1, Model::III, 500, 10, Mechanism::vgm, 1.716, 0.14},
    {1, Model::III, 500, 50, Mechanism::vgm, 1.303, 0.18},
    {1, Model::III, 500, 100, Mechanism::vgm, 0.952, 0.25},
    {1, Model::III, 1000, 1, Mechanism::iid, 1.750, 0.13},
    {1, Model::III, 1000, 10, Mechanism::iid, 1.353, 0.18},
    {1, Model::III, 1000, 50, Mechanism::iid, 0.846, 0.23},
    {1, Model::III, 1000, 100, Mechanism::iid, 0.561, 0.16},
    {1, Model::III, 1000, 1, Mechanism::vgm, 1.648, 0.20},
    {1, Model::III, 1000, 10, Mechanism::vgm, 0.754, 0.14},
    {1, Model::III, 1000, 50, Mechanism::vgm, 0.280, 0.05},
    {1, Model::III, 1000, 100, Mechanism::vgm, 0.193, 0.04},
    {1, Model::III, 2500, 1, Mechanism::iid, 1.628, 0.18},
    {1, Model::III, 2500, 10, Mechanism::iid, 1.142, 0.22},
    {1, Model::III, 2500, 50, Mechanism::iid, 0.577, 0.18},
    {1, Model::III, 2500, 100, Mechanism::iid, 0.387, 0.09},
    {1, Model::III, 2500, 1, Mechanism::vgm, 1.365, 0.25},
    {1, Model::III, 2500, 10, Mechanism::vgm, 0.422, 0.08},
    {1, Model::III, 2500, 50, Mechanism::vgm, 0.169, 0.03},
    {1, Model::III, 2500, 100, Mechanism::vgm, 0.113, 0.02},
    {1, Model::III, 5000, 1, Mechanism::iid, 1.347, 0.17},
    {1, Model::III, 5000, 10, Mechanism::iid, 0.835, 0.25},
    {1, Model::III, 5000, 50, Mechanism::iid, 0.355, 0.09},
    {1, Model::III, 5000, 100, Mechanism::iid, 0.237, 0.06},
    {1, Model::III, 5000, 1, Mechanism::vgm, 0.641, 0.13},
    {1, Model::III, 5000, 10, Mechanism::vgm, 0.215, 0.04},
    {1, Model::III, 5000, 50, Mechanism::vgm, 0.087, 0.02},
    {1, Model::III, 5000, 100, Mechanism::vgm, 0.062, 0.01},
    {1, Model::IV, 500, 1, Mechanism::iid, 1.762, 0.13},
    {1, Model::IV, 500, 10, Mechanism::iid, 1.704, 0.16},
    {1, Model::IV, 500, 50, Mechanism::iid, 1.452, 0.25},
    {1, Model::IV, 500, 100, Mechanism::iid, 1.089, 0.24},
    {1, Model::IV, 500, 1, Mechanism::vgm, 1.715, 0.17},
    {1, Model::IV, 500, 10, Mechanism::vgm, 1.679, 0.17},
    {1, Model::IV, 500, 50, Mechanism::vgm, 1.431, 0.21},
    {1, Model::IV, 500, 100, Mechanism::vgm, 0.957, 0.25},
    {1, Model::IV, 1000, 1, Mechanism::iid, 1.778, 0.13},
    {1, Model::IV, 1000, 10, Mechanism::iid, 1.427, 0.22},
    {1, Model::IV, 1000, 50, Mechanism::iid, 0.577, 0.11},
    {1, Model::IV, 1000, 100, Mechanism::iid, 0.401, 0.07},
    {1, Model::IV, 1000, 1, Mechanism::vgm, 1.698, 0.16},
    {1, Model::IV, 1000, 10, Mechanism::vgm, 1.241, 0.27},
    {1, Model::IV, 1000, 50, Mechanism::vgm, 0.459, 0.08},
    {1, Model::IV, 1000, 100, Mechanism::vgm, 0.314, 0.06},
    {1, Model::IV, 2500, 1, Mechanism::iid, 1.724, 0.16},
    {1, Model::IV, 2500, 10, Mechanism::iid, 0.974, 0.18},
    {1, Model::IV, 2500, 50, Mechanism::iid, 0.421, 0.08},
    {1, Model::IV, 2500, 100, Mechanism::iid, 0.302, 0.06},
    {1, Model::IV, 2500, 1, Mechanism::vgm, 1.579, 0.22},
    {1, Model::IV, 2500, 10, Mechanism::vgm, 0.735, 0.18},
    {1, Model::IV, 2500, 50, Mechanism::vgm, 0.287, 0.06},
    {1, Model::IV, 2500, 100, Mechanism::vgm, 0.211, 0.04},
    {1, Model::IV, 5000, 1, Mechanism::iid, 1.481, 0.21},
    {1, Model::IV, 5000, 10, Mechanism::iid, 0.613, 0.11},
    {1, Model::IV, 5000, 50, Mechanism::iid, 0.283, 0.05},
    {1, Model::IV, 5000, 100, Mechanism::iid, 0.208, 0.04},
    {1, Model::IV, 5000, 1, Mechanism::vgm, 1.174, 0.26},
    {1, Model::IV, 5000, 10, Mechanism::vgm, 0.361, 0.07},
    {1, Model::IV, 5000, 50, Mechanism::vgm, 0.178, 0.03},
    {1, Model::IV, 5000, 100, Mechanism::vgm, 0.148, 0.02},
    {1, Model::V, 500, 1, Mechanism::iid, 1.774, 0.12},
    {1, Model::V, 500, 10, Mechanism::iid, 1.722, 0.16},
    {1, Model::V, 500, 50, Mechanism::iid, 1.054, 0.24},
    {1, Model::V, 500, 100, Mechanism::iid, 0.629, 0.12},
    {1, Model::V, 500, 1, Mechanism::vgm, 1.702, 0.16},
    {1, Model::V, 500, 10, Mechanism::vgm, 1.683, 0.19},
    {1, Model::V, 500, 50, Mechanism::vgm, 1.034, 0.22},
    {1, Model::V, 500, 100, Mechanism::vgm, 0.580, 0.12},
    {1, Model::V, 1000, 1, Mechanism::iid, 1.741, 0.15},
    {1, Model::V, 1000, 10, Mechanism::iid, 0.952, 0.16},
    {1, Model::V, 1000, 50, Mechanism::iid, 0.367, 0.06},
    {1, Model::V, 1000, 100, Mechanism::iid, 0.245, 0.05},
    {1, Model::V, 1000, 1, Mechanism::vgm, 1.669, 0.18},
    {1, Model::V, 1000, 10, Mechanism::vgm, 0.817, 0.17},
    {1, Model::V, 1000, 50, Mechanism::vgm, 0.296, 0.05},
    {1, Model::V, 1000, 100, Mechanism::vgm, 0.194, 0.04},
    {1, Model::V, 2500, 1, Mechanism::iid, 1.630, 0.17},
    {1, Model::V, 2500, 10, Mechanism::iid, 0.604, 0.11},
    {1, Model::V, 2500, 50, Mechanism::iid, 0.251, 0.05},
    {1, Model::V, 2500, 100, Mechanism::iid, 0.173, 0.03},
    {1, Model::V, 2500, 1, Mechanism::vgm, 1.497, 0.23},
    {1, Model::V, 2500, 10, Mechanism::vgm, 0.462, 0.08},
    {1, Model::V, 2500, 50, Mechanism::vgm, 0.181, 0.03},
    {1, Model::V, 2500, 100, Mechanism::vgm, 0.124, 0.02},
    {1, Model::V, 5000, 1, Mechanism::iid, 1.005, 0.17},
    {1, Model::V, 5000, 10, Mechanism::iid, 0.364, 0.06},
    {1, Model::V, 5000, 50, Mechanism::iid, 0.154, 0.03},
    {1, Model::V, 5000, 100, Mechanism::iid, 0.107, 0.02},
    {1, Model::V, 5000, 1, Mechanism::vgm, 0.739, 0.15},
    {1, Model::V, 5000, 10, Mechanism::vgm, 0.226, 0.04},
    {1, Model::V, 5000, 50, Mechanism::vgm, 0.092, 0.02},
    {1, Model::V, 5000, 100, Mechanism::vgm, 0.063, 0.01},
    {2, Model::I, 500, 1, Mechanism::iid, 1.294, 0.13},
    {2, Model::I, 500, 10, Mechanism::iid, 0.890, 0.29},
    {2, Model::I, 500, 50, Mechanism::iid, 0.292, 0.07},
    {2, Model::I, 500, 100, Mechanism::iid, 0.190, 0.05},
    {2, Model::I, 500, 1, Mechanism::vgm, 1.279, 0.14},
    {2, Model::I, 500, 10, Mechanism::vgm, 0.859, 0.26},
    {2, Model::I, 500, 50, Mechanism::vgm, 0.278, 0.07},
    {2, Model::I, 500, 100, Mechanism::vgm, 0.181, 0.04},
    {2, Model::I, 1000, 1, Mechanism::iid, 0.939, 0.24},
    {2, Model::I, 1000, 10, Mechanism::iid, 0.277, 0.06},
    {2, Model::I, 1000, 50, Mechanism::iid, 0.111, 0.02},
    {2, Model::I, 1000, 100, Mechanism::iid, 0.077, 0.02},
    {2, Model::I, 1000, 1, Mechanism::vgm, 0.850, 0.26},
    {2, Model::I, 1000, 10, Mechanism::vgm, 0.234, 0.06},
    {2, Model::I, 1000, 50, Mechanism::vgm, 0.094, 0.02},
    {2, Model::I, 1000, 100, Mechanism::vgm, 0.064, 0.01},
    {2, Model::I, 2500, 1, Mechanism::iid, 0.527, 0.12},
    {2, Model::I, 2500, 10, Mechanism::iid, 0.190, 0.04},
    {2, Model::I, 2500, 50, Mechanism::iid, 0.079, 0.02},
    {2, Model::I, 2500, 100, Mechanism::iid, 0.054, 0.01},
    {2, Model::I, 2500, 1, Mechanism::vgm, 0.407, 0.11},
    {2, Model::I, 2500, 10, Mechanism::vgm, 0.143, 0.04},
    {2, Model::I, 2500, 50, Mechanism::vgm, 0.060, 0.01},
    {2, Model::I, 2500, 100, Mechanism::vgm, 0.041, 0.01},
    {2, Model::I, 5000, 1, Mechanism::iid, 0.323, 0.08},
    {2, Model::I, 5000, 10, Mechanism::iid, 0.113, 0.03},
    {2, Model::I, 5000, 50, Mechanism::iid, 0.047, 0.01},
    {2, Model::I, 5000, 100, Mechanism::iid, 0.034, 0.01},
    {2, Model::I, 5000, 1, Mechanism::vgm, 0.216, 0.05},
    {2, Model::I, 5000, 10, Mechanism::vgm, 0.076, 0.02},
    {2, Model::I, 5000, 50, Mechanism::vgm, 0.032, 0.01},
    {2, Model::I, 5000, 100, Mechanism::vgm, 0.022, 0.01},
    {2, Model::II, 500, 1, Mechanism::iid, 1.370, 0.07},
    {2, Model::II, 500, 10, Mechanism::iid, 1.366, 0.07},
    {2, Model::II, 500, 50, Mechanism::iid, 0.926, 0.18},
    {2, Model::II, 500, 100, Mechanism::iid, 0.653, 0.16},
    {2, Model::II, 500, 1, Mechanism::vgm, 1.302, 0.13},
    {2, Model::II, 500, 10, Mechanism::vgm, 1.204, 0.20},
    {2, Model::II, 500, 50, Mechanism::vgm, 0.557, 0.16},
    {2, Model::II, 500, 100, Mechanism::vgm, 0.373, 0.13},
    {2, Model::II, 1000, 1, Mechanism::iid, 1.381, 0.05},
    {2, Model::II, 1000, 10, Mechanism::iid, 1.037, 0.18},
    {2, Model::II, 1000, 50, Mechanism::iid, 0.549, 0.13},
    {2, Model::II, 1000, 100, Mechanism::iid, 0.401, 0.10},
    {2, Model::II, 1000, 1, Mechanism::vgm, 1.208, 0.20},
    {2, Model::II, 1000, 10, Mechanism::vgm, 0.448, 0.13},
    {2, Model::II, 1000, 50, Mechanism::vgm, 0.205, 0.05},
    {2, Model::II, 1000, 100, Mechanism::vgm, 0.146, 0.04},
    {2, Model::II, 2500, 1, Mechanism::iid, 1.325, 0.10},
    {2, Model::II, 2500, 10, Mechanism::iid, 0.869, 0.17},
    {2, Model::II, 2500, 50, Mechanism::iid, 0.426, 0.11},
    {2, Model::II, 2500, 100, Mechanism::iid, 0.296, 0.08},
    {2, Model::II, 2500, 1, Mechanism::vgm, 0.950, 0.23},
    {2, Model::II, 2500, 10, Mechanism::vgm, 0.280, 0.07},
    {2, Model::II, 2500, 50, Mechanism::vgm, 0.141, 0.03},
    {2, Model::II, 2500, 100, Mechanism::vgm, 0.116, 0.02},
    {2, Model::II, 5000, 1, Mechanism::iid, 1.153, 0.15},
    {2, Model::II, 5000, 10, Mechanism::iid, 0.661, 0.16},
    {2, Model::II, 5000, 50, Mechanism::iid, 0.316, 0.08},
    {2, Model::II, 5000, 100, Mechanism::iid, 0.220, 0.06},
    {2, Model::II, 5000, 1, Mechanism::vgm, 0.488, 0.13},
    {2, Model::II, 5000, 10, Mechanism::vgm, 0.174, 0.04},
    {2, Model::II, 5000, 50, Mechanism::vgm, 0.106, 0.02},
    {2, Model::II, 5000, 100, Mechanism::vgm, 0.094, 0.02},
    {2, Model::III, 500, 1, Mechanism::iid, 1.768, 0.13},
    {2, Model::III, 500, 10, Mechanism::iid, 1.540, 0.15},
    {2, Model::III, 500, 50, Mechanism::iid, 1.065, 0.25},
    {2, Model::III, 500, 100, Mechanism::iid, 0.713, 0.20},
    {2, Model::III, 500, 1, Mechanism::vgm, 1.724, 0.14},
    {2, Model::III, 500, 10, Mechanism::vgm, 1.296, 0.24},
    {2, Model::III, 500, 50, Mechanism::vgm, 0.453, 0.09},
    {2, Model::III, 500, 100, Mechanism::vgm, 0.291, 0.05},
    {2, Model::III, 1000, 1, Mechanism::iid, 1.558, 0.16},
    {2, Model::III, 1000, 10, Mechanism::iid, 1.062, 0.24},
    {2, Model::III, 1000, 50, Mechanism::iid, 0.489, 0.12},
    {2, Model::III, 1000, 100, Mechanism::iid, 0.323, 0.08},
    {2, Model::III, 1000, 1, Mechanism::vgm, 1.147, 0.23},
    {2, Model::III, 1000, 10, Mechanism::vgm, 0.365, 0.07},
    {2, Model::III, 1000, 50, Mechanism::vgm, 0.150, 0.03},
    {2, Model::III, 1000, 100, Mechanism::vgm, 0.105, 0.02},
    {2, Model::III, 2500, 1, Mechanism::iid, 1.355, 0.17},
    {2, Model::III, 2500, 10, Mechanism::iid, 0.823, 0.23},
    {2, Model::III, 2500, 50, Mechanism::iid, 0.345, 0.09},
    {2, Model::III, 2500, 100, Mechanism::iid, 0.230, 0.05},
    {2, Model::III, 2500, 1, Mechanism::vgm, 0.676, 0.12},
    {2, Model::III, 2500, 10, Mechanism::vgm, 0.226, 0.04},
    {2, Model::III, 2500, 50, Mechanism::vgm, 0.098, 0.02},
    {2, Model::III, 2500, 100, Mechanism::vgm, 0.067, 0.01},
    {2, Model::III, 5000, 1, Mechanism::iid, 1.133, 0.21},
    {2, Model::III, 5000, 10, Mechanism::iid, 0.527, 0.12},
    {2, Model::III, 5000, 50, Mechanism::iid, 0.218, 0.05},
    {2, Model::III, 5000, 100, Mechanism::iid, 0.149, 0.03},
    {2, Model::III, 5000, 1, Mechanism::vgm, 0.405, 0.08},
    {2, Model::III, 5000, 10, Mechanism::vgm, 0.135, 0.03},
    {2, Model::III, 5000, 50, Mechanism::vgm, 0.058, 0.01},
    {2, Model::III, 5000, 100, Mechanism::vgm, 0.039, 0.01},
    {2, Model::IV, 500, 1, Mechanism::iid, 1.755, 0.15},
    {2, Model::IV, 500, 10, Mechanism::iid, 1.626, 0.19},
    {2, Model::IV, 500, 50, Mechanism::iid, 0.799, 0.18},
    {2, Model::IV, 500, 100, Mechanism::iid, 0.511, 0.12},
    {2, Model::IV, 500, 1, Mechanism::vgm, 1.727, 0.15},
    {2, Model::IV, 500, 10, Mechanism::vgm, 1.548, 0.20},
    {2, Model::IV, 500, 50, Mechanism::vgm, 0.683, 0.16},
    {2, Model::IV, 500, 100, Mechanism::vgm, 0.440, 0.09},
    {2, Model::IV, 1000, 1, Mechanism::iid, 1.722, 0.14},
    {2, Model::IV, 1000, 10, Mechanism::iid, 0.835, 0.18},
    {2, Model::IV, 1000, 50, Mechanism::iid, 0.356, 0.07},
    {2, Model::IV, 1000, 100, Mechanism::iid, 0.266, 0.05},
    {2, Model::IV, 1000, 1, Mechanism::vgm, 1.533, 0.22},
    {2, Model::IV, 1000, 10, Mechanism::vgm, 0.567, 0.12},
    {2, Model::IV, 1000, 50, Mechanism::vgm, 0.250, 0.05},
    {2, Model::IV, 1000, 100, Mechanism::vgm, 0.193, 0.04},
    {2, Model::IV, 2500, 1, Mechanism::iid, 1.467, 0.21},
    {2, Model::IV, 2500, 10, Mechanism::iid, 0.612, 0.12},
    {2, Model::IV, 2500, 50, Mechanism::iid, 0.284, 0.06},
    {2, Model::IV, 2500, 100, Mechanism::iid, 0.205, 0.04},
    {2, Model::IV, 2500, 1, Mechanism::vgm, 1.115, 0.25},
    {2, Model::IV, 2500, 10, Mechanism::vgm, 0.356, 0.07},
    {2, Model::IV, 2500, 50, Mechanism::vgm, 0.176, 0.03},
    {2, Model::IV, 2500, 100, Mechanism::vgm, 0.146, 0.02},
    {2, Model::IV, 5000, 1, Mechanism::iid, 1.039, 0.14},
    {2, Model::IV, 5000, 10, Mechanism::iid, 0.425, 0.08},
    {2, Model::IV, 5000, 50, Mechanism::iid, 0.211, 0.04},
    {2, Model::IV, 5000, 100, Mechanism::iid, 0.164, 0.02},
    {2, Model::IV, 5000, 1, Mechanism::vgm, 0.521, 0.12},
    {2, Model::IV, 5000, 10, Mechanism::vgm, 0.211, 0.04},
    {2, Model::IV, 5000, 50, Mechanism::vgm, 0.136, 0.02},
    {2, Model::IV, 5000, 100, Mechanism::vgm, 0.125, 0.01},
    {2, Model::V, 500, 1, Mechanism::iid, 1.757, 0.14},
    {2, Model::V, 500, 10, Mechanism::iid, 1.370, 0.19},
    {2, Model::V, 500, 50, Mechanism::iid, 0.488, 0.10},
    {2, Model::V, 500, 100, Mechanism::iid, 0.322, 0.06},
    {2, Model::V, 500, 1, Mechanism::vgm, 1.717, 0.15},
    {2, Model::V, 500, 10, Mechanism::vgm, 1.360, 0.25},
    {2, Model::V, 500, 50, Mechanism::vgm, 0.441, 0.08},
    {2, Model::V, 500, 100, Mechanism::vgm, 0.283, 0.05},
    {2, Model::V, 1000, 1, Mechanism::iid, 1.467, 0.20},
    {2, Model::V, 1000, 10, Mechanism::iid, 0.528, 0.10},
    {2, Model::V, 1000, 50, Mechanism::iid, 0.210, 0.04},
    {2, Model::V, 1000, 100, Mechanism::iid, 0.144, 0.03},
    {2, Model::V, 1000, 1, Mechanism::vgm, 1.276, 0.25},
    {2, Model::V, 1000, 10, Mechanism::vgm, 0.373, 0.07},
    {2, Model::V, 1000, 50, Mechanism::vgm, 0.149, 0.03},
    {2, Model::V, 1000, 100, Mechanism::vgm, 0.098, 0.02},
    {2, Model::V, 2500, 1, Mechanism::iid, 1.008, 0.16},
    {2, Model::V, 2500, 10, Mechanism::iid, 0.369, 0.07},
    {2, Model::V, 2500, 50, Mechanism::iid, 0.152, 0.03},
    {2, Model::V, 2500, 100, Mechanism::iid, 0.103, 0.02},
    {2, Model::V, 2500, 1, Mechanism::vgm, 0.704, 0.15},
    {2, Model::V, 2500, 10, Mechanism::vgm, 0.224, 0.04},
    {2, Model::V, 2500, 50, Mechanism::vgm, 0.091, 0.02},
    {2, Model::V, 2500, 100, Mechanism::vgm, 0.063, 0.01},
    {2, Model::V, 5000, 1, Mechanism::iid, 0.677, 0.12},
    {2, Model::V, 5000, 10, Mechanism::iid, 0.238, 0.04},
    {2, Model::V, 5000, 50, Mechanism::iid, 0.100, 0.02},
    {2, Model::V, 5000, 100, Mechanism::iid, 0.069, 0.01},
    {2, Model::V, 5000, 1, Mechanism::vgm, 0.348, 0.06},
    {2, Model::V, 5000, 10, Mechanism::vgm, 0.114, 0.02},
    {2, Model::V, 5000, 50, Mechanism::vgm, 0.048, 0.01},
    {2, Model::V, 5000, 100, Mechanism::vgm, 0.034, 0.01},
    {3, Model::I, 500, 1, Mechanism::iid, 0.523, 0.20},
    {3, Model::I, 500, 10, Mechanism::iid, 0.192, 0.07},
    {3, Model::I, 500, 50, Mechanism::iid, 0.073, 0.02},
    {3, Model::I, 500, 100, Mechanism::iid, 0.049, 0.02},
    {3, Model::I, 500, 1, Mechanism::vgm, 0.308, 0.12},
    {3, Model::I, 500, 10, Mechanism::vgm, 0.106, 0.05},
    {3, Model::I, 500, 50, Mechanism::vgm, 0.051, 0.02},
    {3, Model::I, 500, 100, Mechanism::vgm, 0.033, 0.01},
    {3, Model::I, 1000, 1, Mechanism::iid, 1.301, 0.13},
    {3, Model::I, 1000, 10, Mechanism::iid, 0.914, 0.27},
    {3, Model::I, 1000, 50, Mechanism::iid, 0.301, 0.08},
    {3, Model::I, 1000, 100, Mechanism::iid, 0.192, 0.05},
    {3, Model::I, 1000, 1, Mechanism::vgm, 1.281, 0.13},
    {3, Model::I, 1000, 10, Mechanism::vgm, 0.915, 0.27},
    {3, Model::I, 1000, 50, Mechanism::vgm, 0.266, 0.07},
    {3, Model::I, 1000, 100, Mechanism::vgm, 0.185, 0.05},
    {3, Model::I, 2000, 1, Mechanism::iid, 1.318, 0.12},
    {3, Model::I, 2000, 10, Mechanism::iid, 0.926, 0.28},
    {3, Model::I, 2000, 50, Mechanism::iid, 0.298, 0.08},
    {3, Model::I, 2000, 100, Mechanism::iid, 0.197, 0.05},
    {3, Model::I, 2000, 1, Mechanism::vgm, 1.302, 0.13},
    {3, Model::I, 2000, 10, Mechanism::vgm, 0.894, 0.26},
    {3, Model::I, 2000, 50, Mechanism::vgm, 0.291, 0.07},
    {3, Model::I, 2000, 100, Mechanism::vgm, 0.191, 0.04},
    {3, Model::II, 500, 1, Mechanism::iid, 1.387, 0.04},
    {3, Model::II, 500, 10, Mechanism::iid, 0.734, 0.22},
    {3, Model::II, 500, 50, Mechanism::iid, 0.355, 0.12},
    {3, Model::II, 500, 100, Mechanism::iid, 0.245, 0.08},
    {3, Model::II, 500, 1, Mechanism::vgm, 1.375, 0.05},
    {3, Model::II, 500, 10, Mechanism::vgm, 0.389, 0.14},
    {3, Model::II, 500, 50, Mechanism::vgm, 0.198, 0.06},
    {3, Model::II, 500, 100, Mechanism::vgm, 0.176, 0.05},
    {3, Model::II, 1000, 1, Mechanism::iid, 1.400, 0.02},
    {3, Model::II, 1000, 10, Mechanism::iid, 1.314, 0.11},
    {3, Model::II, 1000, 50, Mechanism::iid, 0.766, 0.18},
    {3, Model::II, 1000, 100, Mechanism::iid, 0.482, 0.13},
    {3, Model::II, 1000, 1, Mechanism::vgm, 1.399, 0.02},
    {3, Model::II, 1000, 10, Mechanism::vgm, 1.170, 0.24},
    {3, Model::II, 1000, 50, Mechanism::vgm, 0.552, 0.17},
    {3, Model::II, 1000, 100, Mechanism::vgm, 0.344, 0.10},
    {3, Model::II, 2000, 1, Mechanism::iid, 1.402, 0.02},
    {3, Model::II, 2000, 10, Mechanism::iid, 1.294, 0.14},
    {3, Model::II, 2000, 50, Mechanism::iid, 0.752, 0.17},
    {3, Model::II, 2000, 100, Mechanism::iid, 0.516, 0.12},
    {3, Model::II, 2000, 1, Mechanism::vgm, 1.399, 0.02},
    {3, Model::II, 2000, 10, Mechanism::vgm, 1.170, 0.22},
    {3, Model::II, 2000, 50, Mechanism::vgm, 0.565, 0.18},
    {3, Model::II, 2000, 100, Mechanism::vgm, 0.354, 0.10},
    {3, Model::III, 500, 1, Mechanism::iid, 1.917, 0.06},
    {3, Model::III, 500, 10, Mechanism::iid, 0.516, 0.21},
    {3, Model::III, 500, 50, Mechanism::iid, 0.211, 0.08},
    {3, Model::III, 500, 100, Mechanism::iid, 0.132, 0.05},
    {3, Model::III, 500, 1, Mechanism::vgm, 1.908, 0.06},
    {3, Model::III, 500, 10, Mechanism::vgm, 0.205, 0.07},
    {3, Model::III, 500, 50, Mechanism::vgm, 0.079, 0.04},
    {3, Model::III, 500, 100, Mechanism::vgm, 0.049, 0.02},
    {3, Model::III, 1000, 1, Mechanism::iid, 1.961, 0.03},
    {3, Model::III, 1000, 10, Mechanism::iid, 1.277, 0.26},
    {3, Model::III, 1000, 50, Mechanism::iid, 0.565, 0.10},
    {3, Model::III, 1000, 100, Mechanism::iid, 0.424, 0.08},
    {3, Model::III, 1000, 1, Mechanism::vgm, 1.958, 0.03},
    {3, Model::III, 1000, 10, Mechanism::vgm, 1.122, 0.25},
    {3, Model::III, 1000, 50, Mechanism::vgm, 0.464, 0.07},
    {3, Model::III, 1000, 100, Mechanism::vgm, 0.353, 0.07},
    {3, Model::III, 2000, 1, Mechanism::iid, 1.962, 0.03},
    {3, Model::III, 2000, 10, Mechanism::iid, 1.206, 0.21},
    {3, Model::III, 2000, 50, Mechanism::iid, 0.611, 0.11},
    {3, Model::III, 2000, 100, Mechanism::iid, 0.501, 0.12},
    {3, Model::III, 2000, 1, Mechanism::vgm, 1.956, 0.03},
    {3, Model::III, 2000, 10, Mechanism::vgm, 1.008, 0.22},
    {3, Model::III, 2000, 50, Mechanism::vgm, 0.529, 0.10},
    {3, Model::III, 2000, 100, Mechanism::vgm, 0.450, 0.12},
    {3, Model::IV, 500, 1, Mechanism::iid, 1.912, 0.06},
    {3, Model::IV, 500, 10, Mechanism::iid, 0.888, 0.24},
    {3, Model::IV, 500, 50, Mechanism::iid, 0.407, 0.09},
    {3, Model::IV, 500, 100, Mechanism::iid, 0.311, 0.06},
    {3, Model::IV, 500, 1, Mechanism::vgm, 1.908, 0.06},
    {3, Model::IV, 500, 10, Mechanism::vgm, 0.692, 0.23},
    {3, Model::IV, 500, 50, Mechanism::vgm, 0.313, 0.07},
    {3, Model::IV, 500, 100, Mechanism::vgm, 0.260, 0.05},
    {3, Model::IV, 1000, 1, Mechanism::iid, 1.961, 0.03},
    {3, Model::IV, 1000, 10, Mechanism::iid, 1.728, 0.14},
    {3, Model::IV, 1000, 50, Mechanism::iid, 1.297, 0.27},
    {3, Model::IV, 1000, 100, Mechanism::iid, 0.801, 0.20},
    {3, Model::IV, 1000, 1, Mechanism::vgm, 1.954, 0.03},
    {3, Model::IV, 1000, 10, Mechanism::vgm, 1.680, 0.14},
    {3, Model::IV, 1000, 50, Mechanism::vgm, 1.228, 0.27},
    {3, Model::IV, 1000, 100, Mechanism::vgm, 0.762, 0.19},
    {3, Model::IV, 2000, 1, Mechanism::iid, 1.954, 0.03},
    {3, Model::IV, 2000, 10, Mechanism::iid, 1.731, 0.15},
    {3, Model::IV, 2000, 50, Mechanism::iid, 1.232, 0.26},
    {3, Model::IV, 2000, 100, Mechanism::iid, 0.755, 0.18},
    {3, Model::IV, 2000, 1, Mechanism::vgm, 1.950, 0.04},
    {3, Model::IV, 2000, 10, Mechanism::vgm, 1.699, 0.17},
    {3, Model::IV, 2000, 50, Mechanism::vgm, 1.112, 0.29},
    {3, Model::IV, 2000, 100, Mechanism::vgm, 0.702, 0.17},
    {3, Model::V, 500, 1, Mechanism::iid, 1.912, 0.06},
    {3, Model::V, 500, 10, Mechanism::iid, 0.340, 0.10},
    {3, Model::V, 500, 50, Mechanism::iid, 0.146, 0.04},
    {3, Model::V, 500, 100, Mechanism::iid, 0.090, 0.03},
    {3, Model::V, 500, 1, Mechanism::vgm, 1.902, 0.07},
    {3, Model::V, 500, 10, Mechanism::vgm, 0.201, 0.06},
    {3, Model::V, 500, 50, Mechanism::vgm, 0.080, 0.02},
    {3, Model::V, 500, 100, Mechanism::vgm, 0.054, 0.02},
    {3, Model::V, 1000, 1, Mechanism::iid, 1.957, 0.03},
    {3, Model::V, 1000, 10, Mechanism::iid, 1.444, 0.20},
    {3, Model::V, 1000, 50, Mechanism::iid, 0.510, 0.10},
    {3, Model::V, 1000, 100, Mechanism::iid, 0.334, 0.06},
    {3, Model::V, 1000, 1, Mechanism::vgm, 1.954, 0.03},
    {3, Model::V, 1000, 10, Mechanism::vgm, 1.333, 0.25},
    {3, Model::V, 1000, 50, Mechanism::vgm, 0.453, 0.08},
    {3, Model::V, 1000, 100, Mechanism::vgm, 0.294, 0.05},
    {3, Model::V, 2000, 1, Mechanism::iid, 1.958, 0.02},
    {3, Model::V, 2000, 10, Mechanism::iid, 1.402, 0.22},
    {3, Model::V, 2000, 50, Mechanism::iid, 0.509, 0.09},
    {3, Model::V, 2000, 100, Mechanism::iid, 0.340, 0.06},
    {3, Model::V, 2000, 1, Mechanism::vgm, 1.950, 0.03},
    {3, Model::V, 2000, 10, Mechanism::vgm, 1.315, 0.26},
    {3, Model::V, 2000, 50, Mechanism::vgm, 0.470, 0.08},
    {3, Model::V, 2000, 100, Mechanism::vgm, 0.303, 0.05},
    {4, Model::I, 500, 1, Mechanism::iid, 0.362, 0.13},
    {4, Model::I, 500, 10, Mechanism::iid, 0.123, 0.05},
    {4, Model::I, 500, 50, Mechanism::iid, 0.047, 0.01},
    {4, Model::I, 500, 100, Mechanism::iid, 0.037, 0.01},
    {4, Model::I, 500, 1, Mechanism::vgm, 0.167, 0.06},
    {4, Model::I, 500, 10, Mechanism::vgm, 0.069, 0.03},
    {4, Model::I, 500, 50, Mechanism::vgm, 0.029, 0.01},
    {4, Model::I, 500, 100, Mechanism::vgm, 0.025, 0.01},
    {4, Model::I, 1000, 1, Mechanism::iid, 1.228, 0.17},
    {4, Model::I, 1000, 10, Mechanism::iid, 0.375, 0.09},
    {4, Model::I, 1000, 50, Mechanism::iid, 0.161, 0.04},
    {4, Model::I, 1000, 100, Mechanism::iid, 0.108, 0.02},
    {4, Model::I, 1000, 1, Mechanism::vgm, 1.206, 0.20},
    {4, Model::I, 1000, 10, Mechanism::vgm, 0.348, 0.09},
    {4, Model::I, 1000, 50, Mechanism::vgm, 0.141, 0.03},
    {4, Model::I, 1000, 100, Mechanism::vgm, 0.096, 0.02},
    {4, Model::I, 2000, 1, Mechanism::iid, 1.209, 0.19},
    {4, Model::I, 2000, 10, Mechanism::iid, 0.386, 0.09},
    {4, Model::I, 2000, 50, Mechanism::iid, 0.160, 0.04},
    {4, Model::I, 2000, 100, Mechanism::iid, 0.109, 0.02},
    {4, Model::I, 2000, 1, Mechanism::vgm, 1.204, 0.19},
    {4, Model::I, 2000, 10, Mechanism::vgm, 0.337, 0.09},
    {4, Model::I, 2000, 50, Mechanism::vgm, 0.138, 0.03},
    {4, Model::I, 2000, 100, Mechanism::vgm, 0.094, 0.02},
    {4, Model::II, 500, 1, Mechanism::iid, 1.386, 0.04},
    {4, Model::II, 500, 10, Mechanism::iid, 0.511, 0.17},
    {4, Model::II, 500, 50, Mechanism::iid, 0.255, 0.08},
    {4, Model::II, 500, 100, Mechanism::iid, 0.199, 0.06},
    {4, Model::II, 500, 1, Mechanism::vgm, 1.370, 0.05},
    {4, Model::II, 500, 10, Mechanism::vgm, 0.220, 0.07},
    {4, Model::II, 500, 50, Mechanism::vgm, 0.161, 0.04},
    {4, Model::II, 500, 100, Mechanism::vgm, 0.156, 0.03},
    {4, Model::II, 1000, 1, Mechanism::iid, 1.397, 0.03},
    {4, Model::II, 1000, 10, Mechanism::iid, 1.063, 0.22},
    {4, Model::II, 1000, 50, Mechanism::iid, 0.474, 0.13},
    {4, Model::II, 1000, 100, Mechanism::iid, 0.323, 0.09},
    {4, Model::II, 1000, 1, Mechanism::vgm, 1.396, 0.03},
    {4, Model::II, 1000, 10, Mechanism::vgm, 0.760, 0.27},
    {4, Model::II, 1000, 50, Mechanism::vgm, 0.277, 0.08},
    {4, Model::II, 1000, 100, Mechanism::vgm, 0.183, 0.05},
    {4, Model::II, 2000, 1, Mechanism::iid, 1.401, 0.02},
    {4, Model::II, 2000, 10, Mechanism::iid, 1.003, 0.21},
    {4, Model::II, 2000, 50, Mechanism::iid, 0.467, 0.12},
    {4, Model::II, 2000, 100, Mechanism::iid, 0.328, 0.09},
    {4, Model::II, 2000, 1, Mechanism::vgm, 1.394, 0.03},
    {4, Model::II, 2000, 10, Mechanism::vgm, 0.692, 0.22},
    {4, Model::II, 2000, 50, Mechanism::vgm, 0.270, 0.08},
    {4, Model::II, 2000, 100, Mechanism::vgm, 0.190, 0.05},
    {4, Model::III, 500, 1, Mechanism::iid, 1.913, 0.06},
    {4, Model::III, 500, 10, Mechanism::iid, 0.317, 0.10},
    {4, Model::III, 500, 50, Mechanism::iid, 0.127, 0.05},
    {4, Model::III, 500, 100, Mechanism::iid, 0.087, 0.05},
    {4, Model::III, 500, 1, Mechanism::vgm, 1.906, 0.06},
    {4, Model::III, 500, 10, Mechanism::vgm, 0.113, 0.06},
    {4, Model::III, 500, 50, Mechanism::vgm, 0.045, 0.03},
    {4, Model::III, 500, 100, Mechanism::vgm, 0.035, 0.04},
    {4, Model::III, 1000, 1, Mechanism::iid, 1.958, 0.03},
    {4, Model::III, 1000, 10, Mechanism::iid, 0.776, 0.14},
    {4, Model::III, 1000, 50, Mechanism::iid, 0.393, 0.09},
    {4, Model::III, 1000, 100, Mechanism::iid, 0.314, 0.11},
    {4, Model::III, 1000, 1, Mechanism::vgm, 1.956, 0.03},
    {4, Model::III, 1000, 10, Mechanism::vgm, 0.525, 0.08},
    {4, Model::III, 1000, 50, Mechanism::vgm, 0.305, 0.11},
    {4, Model::III, 1000, 100, Mechanism::vgm, 0.265, 0.13},
    {4, Model::III, 2000, 1, Mechanism::iid, 1.963, 0.03},
    {4, Model::III, 2000, 10, Mechanism::iid, 0.813, 0.15},
    {4, Model::III, 2000, 50, Mechanism::iid, 0.489, 0.11},
    {4, Model::III, 2000, 100, Mechanism::iid, 0.425, 0.14},
    {4, Model::III, 2000, 1, Mechanism::vgm, 1.957, 0.02},
    {4, Model::III, 2000, 10, Mechanism::vgm, 0.582, 0.10},
    {4, Model::III, 2000, 50, Mechanism::vgm, 0.425, 0.14},
    {4, Model::III, 2000, 100, Mechanism::vgm, 0.394, 0.15},
    {4, Model::IV, 500, 1, Mechanism::iid, 1.913, 0.06},
    {4, Model::IV, 500, 10, Mechanism::iid, 0.556, 0.14},
    {4, Model::IV, 500, 50, Mechanism::iid, 0.288, 0.06},
    {4, Model::IV, 500, 100, Mechanism::iid, 0.247, 0.04},
    {4, Model::IV, 500, 1, Mechanism::vgm, 1.908, 0.06},
    {4, Model::IV, 500, 10, Mechanism::vgm, 0.372, 0.09},
    {4, Model::IV, 500, 50, Mechanism::vgm, 0.240, 0.04},
    {4, Model::IV, 500, 100, Mechanism::vgm, 0.226, 0.03},
    {4, Model::IV, 1000, 1, Mechanism::iid, 1.957, 0.03},
    {4, Model::IV, 1000, 10, Mechanism::iid, 1.517, 0.23},
    {4, Model::IV, 1000, 50, Mechanism::iid, 0.633, 0.14},
    {4, Model::IV, 1000, 100, Mechanism::iid, 0.428, 0.09},
    {4, Model::IV, 1000, 1, Mechanism::vgm, 1.951, 0.03},
    {4, Model::IV, 1000, 10, Mechanism::vgm, 1.431, 0.25},
    {4, Model::IV, 1000, 50, Mechanism::vgm, 0.544, 0.12},
    {4, Model::IV, 1000, 100, Mechanism::vgm, 0.382, 0.07},
    {4, Model::IV, 2000, 1, Mechanism::iid, 1.954, 0.03},
    {4, Model::IV, 2000, 10, Mechanism::iid, 1.434, 0.23},
    {4, Model::IV, 2000, 50, Mechanism::iid, 0.586, 0.13},
    {4, Model::IV, 2000, 100, Mechanism::iid, 0.409, 0.09},
    {4, Model::IV, 2000, 1, Mechanism::vgm, 1.954, 0.03},
    {4, Model::IV, 2000, 10, Mechanism::vgm, 1.389, 0.25},
    {4, Model::IV, 2000, 50, Mechanism::vgm, 0.505, 0.11},
    {4, Model::IV, 2000, 100, Mechanism::vgm, 0.345, 0.08},
    {4, Model::V, 500, 1, Mechanism::iid, 1.903, 0.07},
    {4, Model::V, 500, 10, Mechanism::iid, 0.230, 0.07},
    {4, Model::V, 500, 50, Mechanism::iid, 0.089, 0.03},
    {4, Model::V, 500, 100, Mechanism::iid, 0.062, 0.02},
    {4, Model::V, 500, 1, Mechanism::vgm, 1.901, 0.07},
    {4, Model::V, 500, 10, Mechanism::vgm, 0.103, 0.03},
    {4, Model::V, 500, 50, Mechanism::vgm, 0.041, 0.01},
    {4, Model::V, 500, 100, Mechanism::vgm, 0.027, 0.01},
    {4, Model::V, 1000, 1, Mechanism::iid, 1.952, 0.03},
    {4, Model::V, 1000, 10, Mechanism::iid, 0.697, 0.13},
    {4, Model::V, 1000, 50, Mechanism::iid, 0.274, 0.05},
    {4, Model::V, 1000, 100, Mechanism::iid, 0.181, 0.03},
    {4, Model::V, 1000, 1, Mechanism::vgm, 1.953, 0.03},
    {4, Model::V, 1000, 10, Mechanism::vgm, 0.577, 0.12},
    {4, Model::V, 1000, 50, Mechanism::vgm, 0.225, 0.04},
    {4, Model::V, 1000, 100, Mechanism::vgm, 0.150, 0.02},
    {4, Model::V, 2000, 1, Mechanism::iid, 1.955, 0.03},
    {4, Model::V, 2000, 10, Mechanism::iid, 0.708, 0.13},
    {4, Model::V, 2000, 50, Mechanism::iid, 0.275, 0.05},
    {4, Model::V, 2000, 100, Mechanism::iid, 0.184, 0.03},
    {4, Model::V, 2000, 1, Mechanism::vgm, 1.953, 0.03},
    {4, Model::V, 2000, 10, Mechanism::vgm, 0.578, 0.10},
    {4, Model::V, 2000, 50, Mechanism::vgm, 0.219, 0.04},
    {4, Model::V, 2000, 100, Mechanism::vgm, 0.151, 0.03},
    };
    return cells;
}

}  // namespace fsir
