#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fsir/federation.hpp"
#include "fsir/metrics.hpp"
#include "fsir/simgen.hpp"

namespace fsir {

/// How the structure dimension used by the server is chosen.
enum class DimChoice { known, automatic, fixed };

struct ExperimentConfig {
    // [data]
    Model model = Model::I;
    std::optional<std::filesystem::path> csv;
    std::string response = "y";
    bool categorical = false;
    Eigen::Index p = 10;
    Eigen::Index n = 1000;
    int clients = 10;
    int slices = 8;
    SlicingRule slicing;
    bool center = false;
    BinaryLaw model1 = BinaryLaw::bernoulli;
    double noise_scale = 1.0;

    // [privacy], [estimation], [screening]
    FsirOptions fsir = [] {
        FsirOptions o;
        o.client.cov_noise = CovNoise::unit;
        return o;
    }();
    DimChoice dim = DimChoice::known;
    int fixed_d = 1;

    // [run]
    int replications = 100;
    std::uint64_t seed = 1;
    int threads = 1;
    std::filesystem::path out = "fsir-out";

    /// Dimension forced on the server for a given model (nullopt = eigengap rule).
    std::optional<int> forced_d() const;
};

/// Applies one `section.key = value` setting; throws ConfigError on unknown
/// keys or malformed values.
void apply_setting(ExperimentConfig& cfg, const std::string& dotted_key, const std::string& value);

/// Built-in defaults, then `presets` (subcommand defaults), then the INI file
/// (if any), then `section.key=value` overrides.
ExperimentConfig load_config(const std::optional<std::filesystem::path>& path,
                             const std::vector<std::string>& overrides,
                             const std::vector<std::string>& presets = {});

/// INI text that reproduces `cfg` when loaded.
std::string to_ini(const ExperimentConfig& cfg);

struct ReplicationResult {
    int replication = 0;
    bool ok = false;
    std::string error;
    double loss = 0.0;
    double angle = 0.0;
    int d = 0;
    std::size_t excluded = 0;
    std::size_t active_size = 0;
    bool support_recovered = false;  ///< screened runs: true support inside the active set
    /// min over VGM uploads of lambda_min(Sigma_xi) * sigma2_vgm; NaN without VGM uploads
    double vgm_condition = 0.0;
};

struct RunRecord {
    ExperimentConfig config;
    std::vector<ReplicationResult> replications;
    std::size_t failed = 0;
    std::size_t excluded_total = 0;
    double mean_loss = 0.0;
    double se_loss = 0.0;
    double mean_angle = 0.0;
    double se_angle = 0.0;
    double wall_seconds = 0.0;
    std::vector<std::string> trace;
};

/// Sample mean and standard error (sample sd / sqrt(count)).
std::pair<double, double> mean_se(const std::vector<double>& values);

/// Runs every replication of a synthetic experiment, in parallel over
/// cfg.threads workers. Results do not depend on the thread count. Throws
/// RunError when more than 10% of the replications fail.
RunRecord run_experiment(const ExperimentConfig& cfg);

/// Writes config.ini, replications.csv, summary.csv, run_info.json and,
/// when traced, trace.jsonl into `dir`.
void write_run(const RunRecord& rec, const std::filesystem::path& dir);

/// The clients of one replication, sliced and ready for run_fsir, plus the
/// true directions (synthetic data only).
struct ClientData {
    std::vector<LabeledDataset> clients;
    std::optional<ModelSpec> spec;
};

ClientData make_clients(const ExperimentConfig& cfg, int replication);

/// Splits one dataset into k contiguous blocks; the first n mod k blocks get one extra row.
std::vector<LabeledDataset> split_clients(const LabeledDataset& d, int k);

struct PaperCell {
    int table;
    Model model;
    int size;  ///< n for presets 1-2, p for presets 3-4
    int clients;
    Mechanism mechanism;
    double mean;
    double se;
};

const std::vector<PaperCell>& paper_reference();

std::optional<PaperCell> find_paper_cell(int table, Model model, int size, int clients,
                                         Mechanism mechanism);

/// Settings shared by every cell of a reproduced table.
ExperimentConfig table_preset(int table, const ExperimentConfig& base);

struct TableFilter {
    std::vector<Model> models;    ///< empty = all
    std::vector<int> sizes;       ///< empty = all
    std::vector<int> clients;     ///< empty = all
    std::vector<Mechanism> mechanisms;
};

struct TableCell {
    PaperCell paper;
    std::optional<RunRecord> record;  ///< empty when the cell failed
    std::string error;
};

/// Runs the selected cells of a table. `overrides` are re-applied on top of
/// the table preset so explicit user settings win.
std::vector<TableCell> reproduce_table(int table, const ExperimentConfig& base,
                                       const TableFilter& filter,
                                       const std::vector<std::string>& overrides = {});

/// Columns: model,n,p,K,mechanism,mean,se,paper_mean,paper_se. Failed cells
/// carry NA in mean and se.
void write_table_csv(const std::filesystem::path& path, int table,
                     const std::vector<TableCell>& cells, const ExperimentConfig& base);

struct AttackArm {
    AttackEstimator estimator;
    std::vector<double> aucs;
    double mean_auc = 0.0;
    double se_auc = 0.0;
    RocCurve pooled;  ///< ROC over the scores of every replication together
};

struct AttackSummary {
    std::vector<AttackArm> arms;
    Eigen::Index n = 0;
    Eigen::Index p = 0;
};

/// Tracing attack on synthetic Gaussian data (cfg.p covariates, cfg.n
/// samples, exactly balanced 0/1 response) or on cfg.csv after whitening.
/// delta follows the config rule evaluated at the dataset size.
AttackSummary run_attack_demo(const ExperimentConfig& cfg,
                              const std::vector<AttackEstimator>& estimators);

void write_attack(const AttackSummary& summary, const std::filesystem::path& dir);

std::string_view estimator_name(AttackEstimator e);

struct EstimateOutput {
    FsirResult result;
    std::vector<std::string> names;  ///< covariate names in global order
};

/// One FSIR run on the configured data (CSV split into cfg.clients blocks,
/// or replication 0 of the synthetic model).
EstimateOutput run_estimate(const ExperimentConfig& cfg);

/// subspace.csv (covariate, beta1..betad) plus trace.jsonl when traced.
void write_estimate(const EstimateOutput& est, const std::filesystem::path& dir);

struct ScreenOutput {
    std::vector<ClientVote> votes;
    ActiveSet active;
    std::vector<std::string> names;
};

/// CCMD screening alone on the configured data.
ScreenOutput run_screen(const ExperimentConfig& cfg);

/// active_set.csv (index, covariate, multiplicity) and votes.csv
/// (client, index, multiplicity).
void write_screen(const ScreenOutput& out, const std::filesystem::path& dir);

}  // namespace fsir
