#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsir/dp_mech.hpp"
#include "fsir/screening.hpp"
#include "fsir/sliced_data.hpp"
#include "fsir/trace.hpp"

namespace fsir {

enum class HighDim { automatic, on, off };

/// Everything a client needs to produce its upload.
struct ClientOptions {
    Mechanism mechanism = Mechanism::vgm;
    double epsilon_m = 1.0;
    double epsilon_x = 1.0;
    std::optional<double> delta;  ///< fixed delta; unset means n^(-delta_exponent) per client
    double delta_exponent = 1.1;
    double r = 3.0;
    double sigma0 = 1.0;
    VgmBound vgm_bound = VgmBound::approx;
    CovNoise cov_noise = CovNoise::rescaled;

    double delta_for(Eigen::Index n) const;
    PrivacyBudget m_budget(Eigen::Index n) const;
    PrivacyBudget x_budget(Eigen::Index n) const;
};

/// Returns nullopt when the client fails the minimal sample size check for
/// the dimension it would release. With Mechanism::none the raw estimates are
/// uploaded unperturbed (used to test the estimator in isolation).
std::optional<ClientUpload> client_pipeline(const LabeledDataset& d, const ClientOptions& opts,
                                            SeededRng& rng, std::uint64_t client_id = 0);

struct ServerState {
    Matrix merged_m;
    Matrix merged_sigma;
    Eigen::Index total_n = 0;
    std::size_t uploads = 0;
};

/// Sample-size weighted average of the uploads, accumulated in client id order.
ServerState server_merge(std::vector<ClientUpload> uploads);

struct SubspaceEstimate {
    Matrix beta;  ///< p x d, columns unnormalized
    int d = 0;
    int d_rule = 0;                     ///< what the eigengap rule picked
    double ridge = 0.0;                 ///< ridge used by the covariance solve
    std::optional<ActiveSet> embedding; ///< global coordinates of beta's rows
};

SubspaceEstimate estimate_subspace(const ServerState& state, std::optional<int> forced_d,
                                   double ridge = 0.0);

/// Places beta's rows at the embedded (1-based) coordinates of a p_global-row
/// matrix, zeros elsewhere. The result carries no embedding.
SubspaceEstimate embed(const SubspaceEstimate& est, Eigen::Index p_global);

struct FsirOptions {
    ClientOptions client;
    std::optional<int> forced_d;
    double ridge = 0.0;
    HighDim high_dim = HighDim::automatic;
    ScreeningParams screening;
    bool fallback_unscreened = false;  ///< on an empty active set, estimate without screening
    std::uint64_t seed = 0;
    std::uint64_t replication = 0;
    std::string run_id = "run";
    bool trace = false;
};

struct FsirResult {
    SubspaceEstimate estimate;  ///< always in global coordinates
    ServerState state;          ///< in the coordinates actually estimated on
    std::vector<ClientUpload> uploads;
    std::optional<ActiveSet> active;
    std::vector<std::uint64_t> excluded;
    bool screened = false;
    std::vector<std::string> trace;
};

/// Random stream of one client in one replication.
std::uint64_t client_stream(std::uint64_t replication, std::uint64_t client, std::uint64_t purpose);

enum StreamPurpose : std::uint64_t { kStreamData = 1, kStreamNoise = 2, kStreamBeta = 3 };

/// Full federated SIR protocol on labeled client datasets. Clients are processed in
/// order; client k draws its noise from SeededRng(seed, client_stream(rep, k, noise)).
FsirResult run_fsir(const std::vector<LabeledDataset>& clients, const FsirOptions& opts);

}  // namespace fsir
