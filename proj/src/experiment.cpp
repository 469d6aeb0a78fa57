#include "fsir/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "fsir/csv.hpp"
#include "fsir/error.hpp"
#include "fsir/kernels.hpp"

namespace fsir {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool sparse_regime(const ExperimentConfig& cfg) {
    return cfg.fsir.high_dim == HighDim::on ||
           (cfg.fsir.high_dim == HighDim::automatic && cfg.p > cfg.n);
}

void prepare_client(LabeledDataset& d, const ExperimentConfig& cfg) {
    if (cfg.center) center_columns(d);
    assign_slices(d, cfg.slicing, cfg.slices);
}

/// Runs job(i) for i in [0, count) on up to `threads` workers. A non-library
/// exception in any job is rethrown after all workers finish.
template <typename Job>
void parallel_for(int count, int threads, Job job) {
    const int workers = std::max(1, std::min(threads, count));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                job(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

double vgm_condition(const FsirResult& res, const ClientOptions& opts) {
    double worst = kNaN;
    for (const auto& up : res.uploads) {
        if (!up.vgm) continue;
        const Eigen::Index p = up.m_tilde.rows();
        const double delta = opts.delta_for(up.n);
        const double nn = static_cast<double>(up.n);
        const double sigma2_vgm = nn * nn * opts.epsilon_m * opts.epsilon_m /
                                  (8.0 * opts.r * opts.r * static_cast<double>(p) *
                                   std::log(2.0 / delta));
        const double lambda_min = sym_eig(up.vgm->covariance()).values.minCoeff();
        const double ratio = lambda_min * sigma2_vgm;
        if (std::isnan(worst) || ratio < worst) worst = ratio;
    }
    return worst;
}

std::string fmt_or_na(bool ok, double v) { return ok ? csv::format_number(v) : "NA"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw RunError(fmt::format("cannot write {}", path.string()));
    out << text;
}

void write_trace(const std::filesystem::path& path, const std::vector<std::string>& lines) {
    std::string text;
    for (const auto& line : lines) text += line + "\n";
    write_text(path, text);
}

std::vector<std::string> covariate_names(const LabeledDataset& d) {
    if (static_cast<Eigen::Index>(d.names.size()) == d.p()) return d.names;
    std::vector<std::string> names;
    for (Eigen::Index j = 0; j < d.p(); ++j) names.push_back(fmt::format("x{}", j + 1));
    return names;
}

}  // namespace

std::pair<double, double> mean_se(const std::vector<double>& values) {
    if (values.empty()) return {kNaN, kNaN};
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) return {mean, kNaN};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    return {mean, sd / std::sqrt(static_cast<double>(values.size()))};
}

std::vector<LabeledDataset> split_clients(const LabeledDataset& d, int k) {
    if (k < 1) throw InvalidInput("split_clients: k must be positive");
    if (d.n() < k) throw InvalidInput(fmt::format("split_clients: {} rows for {} clients", d.n(), k));
    std::vector<LabeledDataset> out;
    const Eigen::Index base = d.n() / k;
    const Eigen::Index extra = d.n() % k;
    Eigen::Index start = 0;
    for (int c = 0; c < k; ++c) {
        const Eigen::Index rows = base + (c < extra ? 1 : 0);
        LabeledDataset part;
        part.x = d.x.middleRows(start, rows);
        part.names = d.names;
        part.slices = d.slices;
        if (!d.response.empty())
            part.response.assign(d.response.begin() + start, d.response.begin() + start + rows);
        if (!d.labels.empty())
            part.labels.assign(d.labels.begin() + start, d.labels.begin() + start + rows);
        out.push_back(std::move(part));
        start += rows;
    }
    return out;
}

ClientData make_clients(const ExperimentConfig& cfg, int replication) {
    ClientData out;
    const auto rep = static_cast<std::uint64_t>(replication);
    if (cfg.csv) {
        const LabeledDataset all = read_dataset_csv(*cfg.csv, cfg.response, cfg.categorical);
        out.clients = split_clients(all, cfg.clients);
    } else {
        SeededRng beta_rng(cfg.seed, client_stream(rep, 0, kStreamBeta));
        ModelSpec spec = make_spec(cfg.model, cfg.p, sparse_regime(cfg), beta_rng);
        spec.binary_law = cfg.model1;
        spec.noise_scale = cfg.noise_scale;
        out.clients.reserve(static_cast<std::size_t>(cfg.clients));
        for (int k = 0; k < cfg.clients; ++k) {
            SeededRng rng(cfg.seed, client_stream(rep, static_cast<std::uint64_t>(k), kStreamData));
            out.clients.push_back(generate(spec, cfg.n, rng));
        }
        out.spec = std::move(spec);
    }
    for (auto& c : out.clients) prepare_client(c, cfg);
    return out;
}

RunRecord run_experiment(const ExperimentConfig& cfg) {
    if (cfg.csv)
        throw ConfigError("simulate needs a synthetic model; use 'estimate' for CSV data");
    const auto start = std::chrono::steady_clock::now();

    RunRecord rec;
    rec.config = cfg;
    rec.replications.resize(static_cast<std::size_t>(cfg.replications));
    std::vector<std::vector<std::string>> traces(rec.replications.size());

    parallel_for(cfg.replications, cfg.threads, [&](int r) {
        ReplicationResult& out = rec.replications[static_cast<std::size_t>(r)];
        out.replication = r;
        try {
            ClientData data = make_clients(cfg, r);
            FsirOptions opts = cfg.fsir;
            opts.seed = cfg.seed;
            opts.replication = static_cast<std::uint64_t>(r);
            opts.forced_d = cfg.forced_d();
            const FsirResult res = run_fsir(data.clients, opts);
            const Matrix& truth = data.spec->true_beta;
            out.loss = projection_loss(res.estimate.beta, truth);
            out.angle = subspace_angle(res.estimate.beta, truth);
            out.d = res.estimate.d;
            out.excluded = res.excluded.size();
            if (res.active) {
                out.active_size = res.active->size();
                out.support_recovered = true;
                for (Eigen::Index j = 0; j < truth.rows(); ++j) {
                    if (truth.row(j).isZero(0.0)) continue;
                    const int idx = static_cast<int>(j) + 1;
                    if (!std::binary_search(res.active->indices.begin(),
                                            res.active->indices.end(), idx))
                        out.support_recovered = false;
                }
            }
            out.vgm_condition = vgm_condition(res, cfg.fsir.client);
            out.ok = true;
            traces[static_cast<std::size_t>(r)] = res.trace;
        } catch (const Error& e) {
            out.ok = false;
            out.error = e.what();
        }
    });

    std::vector<double> losses;
    std::vector<double> angles;
    for (std::size_t r = 0; r < rec.replications.size(); ++r) {
        const auto& rep = rec.replications[r];
        if (!rep.ok) {
            ++rec.failed;
            continue;
        }
        losses.push_back(rep.loss);
        angles.push_back(rep.angle);
        rec.excluded_total += rep.excluded;
        rec.trace.insert(rec.trace.end(), traces[r].begin(), traces[r].end());
    }
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rec.failed * 10 > rec.replications.size()) {
        const auto first = std::find_if(rec.replications.begin(), rec.replications.end(),
                                        [](const ReplicationResult& r) { return !r.ok; });
        throw RunError(fmt::format("{} of {} replications failed; first error: {}", rec.failed,
                                   rec.replications.size(), first->error));
    }
    std::tie(rec.mean_loss, rec.se_loss) = mean_se(losses);
    std::tie(rec.mean_angle, rec.se_angle) = mean_se(angles);
    return rec;
}

void write_run(const RunRecord& rec, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto& c = rec.config;
    write_text(dir / "config.ini", to_ini(c));

    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rec.replications)
        rows.push_back({std::to_string(r.replication), r.ok ? "ok" : "failed",
                        fmt_or_na(r.ok, r.loss), fmt_or_na(r.ok, r.angle),
                        std::to_string(r.d), std::to_string(r.excluded),
                        std::to_string(r.active_size), r.support_recovered ? "1" : "0",
                        fmt_or_na(r.ok && !std::isnan(r.vgm_condition), r.vgm_condition)});
    csv::write(dir / "replications.csv",
               {"replication", "status", "loss", "angle", "d", "excluded", "active_size",
                "support_recovered", "vgm_condition"},
               rows);

    const auto& o = c.fsir.client;
    csv::write(dir / "summary.csv",
               {"model", "p", "n", "K", "H", "mechanism", "epsilon_m", "epsilon_x",
                "replications", "failed", "mean_loss", "se_loss", "mean_angle", "se_angle",
                "excluded_total"},
               {{std::string(model_name(c.model)), std::to_string(c.p), std::to_string(c.n),
                 std::to_string(c.clients), std::to_string(c.slices),
                 std::string(mechanism_name(o.mechanism)), csv::format_number(o.epsilon_m),
                 csv::format_number(o.epsilon_x), std::to_string(rec.replications.size()),
                 std::to_string(rec.failed), csv::format_number(rec.mean_loss),
                 csv::format_number(rec.se_loss), csv::format_number(rec.mean_angle),
                 csv::format_number(rec.se_angle), std::to_string(rec.excluded_total)}});

    nlohmann::ordered_json info;
    info["seed"] = c.seed;
    info["threads"] = c.threads;
    info["wall_seconds"] = rec.wall_seconds;
    info["simd"] = kernels::name(kernels::active().isa);
    info["epsilon_total"] = o.epsilon_m + o.epsilon_x;
    info["delta"] = o.delta ? fmt::format("{}", *o.delta)
                            : fmt::format("n^-{}", csv::format_number(o.delta_exponent));
    info["failed_replications"] = rec.failed;
    write_text(dir / "run_info.json", info.dump(2) + "\n");

    if (c.fsir.trace) write_trace(dir / "trace.jsonl", rec.trace);
}

std::optional<PaperCell> find_paper_cell(int table, Model model, int size, int clients,
                                         Mechanism mechanism) {
    for (const auto& cell : paper_reference())
        if (cell.table == table && cell.model == model && cell.size == size &&
            cell.clients == clients && cell.mechanism == mechanism)
            return cell;
    return std::nullopt;
}

ExperimentConfig table_preset(int table, const ExperimentConfig& base) {
    if (table < 1 || table > 4) throw ConfigError(fmt::format("no table {}", table));
    ExperimentConfig cfg = base;
    cfg.csv.reset();
    cfg.slices = 8;
    cfg.dim = DimChoice::known;
    cfg.fsir.client.epsilon_m = cfg.fsir.client.epsilon_x = (table == 1 || table == 3) ? 1.0 : 2.0;
    cfg.fsir.client.delta.reset();
    cfg.fsir.client.delta_exponent = 1.1;
    if (table <= 2) {
        cfg.p = 10;
        cfg.fsir.high_dim = HighDim::automatic;
    } else {
        cfg.n = 1000;
        cfg.fsir.high_dim = HighDim::on;
    }
    return cfg;
}

std::vector<TableCell> reproduce_table(int table, const ExperimentConfig& base,
                                       const TableFilter& filter,
                                       const std::vector<std::string>& overrides) {
    const auto wanted = [](const auto& list, const auto& value) {
        return list.empty() || std::find(list.begin(), list.end(), value) != list.end();
    };
    std::vector<TableCell> cells;
    for (const auto& paper : paper_reference()) {
        if (paper.table != table) continue;
        if (!wanted(filter.models, paper.model) || !wanted(filter.sizes, paper.size) ||
            !wanted(filter.clients, paper.clients) || !wanted(filter.mechanisms, paper.mechanism))
            continue;
        ExperimentConfig cfg = table_preset(table, base);
        for (const auto& item : overrides) {
            const auto eq = item.find('=');
            apply_setting(cfg, item.substr(0, eq), item.substr(eq + 1));
        }
        cfg.model = paper.model;
        if (table <= 2)
            cfg.n = paper.size;
        else
            cfg.p = paper.size;
        cfg.clients = paper.clients;
        cfg.fsir.client.mechanism = paper.mechanism;
        cfg.fsir.run_id = fmt::format("table{}-{}-{}-{}-{}", table, model_name(paper.model),
                                      paper.size, paper.clients, mechanism_name(paper.mechanism));

        TableCell cell{paper, std::nullopt, {}};
        try {
            cell.record = run_experiment(cfg);
        } catch (const Error& e) {
            cell.error = e.what();
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

void write_table_csv(const std::filesystem::path& path, int table,
                     const std::vector<TableCell>& cells, const ExperimentConfig& base) {
    const ExperimentConfig preset = table_preset(table, base);
    std::vector<std::vector<std::string>> rows;
    for (const auto& cell : cells) {
        const auto& pc = cell.paper;
        const bool ok = cell.record.has_value();
        const Eigen::Index n = table <= 2 ? pc.size : preset.n;
        const Eigen::Index p = table <= 2 ? preset.p : pc.size;
        rows.push_back({std::string(model_name(pc.model)), std::to_string(n), std::to_string(p),
                        std::to_string(pc.clients), std::string(mechanism_name(pc.mechanism)),
                        fmt_or_na(ok, ok ? cell.record->mean_loss : 0.0),
                        fmt_or_na(ok, ok ? cell.record->se_loss : 0.0),
                        csv::format_number(pc.mean), csv::format_number(pc.se)});
    }
    csv::write(path, {"model", "n", "p", "K", "mechanism", "mean", "se", "paper_mean", "paper_se"},
               rows);
}

std::string_view estimator_name(AttackEstimator e) {
    switch (e) {
        case AttackEstimator::raw: return "raw";
        case AttackEstimator::iid: return "iid";
        case AttackEstimator::vgm: return "vgm";
        case AttackEstimator::fixed: return "fixed";
    }
    return "unknown";
}

AttackSummary run_attack_demo(const ExperimentConfig& cfg,
                              const std::vector<AttackEstimator>& estimators) {
    if (estimators.empty()) throw InvalidInput("run_attack_demo: no estimators");
    std::optional<LabeledDataset> user;
    if (cfg.csv) {
        user = read_dataset_csv(*cfg.csv, cfg.response, false);
        whiten(*user);
    }

    AttackSummary summary;
    summary.n = user ? user->n() : cfg.n;
    summary.p = user ? user->p() : cfg.p;
    const auto& o = cfg.fsir.client;
    const PrivacyBudget budget{o.epsilon_m, o.delta_for(summary.n), o.r};

    const auto reps = static_cast<std::size_t>(cfg.replications);
    std::vector<std::vector<TracingRun>> runs(reps);
    parallel_for(cfg.replications, cfg.threads, [&](int r) {
        const auto rep = static_cast<std::uint64_t>(r);
        LabeledDataset synthetic;
        if (!user) {
            SeededRng data_rng(cfg.seed, client_stream(rep, 0, kStreamData));
            synthetic.x = RowMatrix(cfg.n, cfg.p);
            for (Eigen::Index i = 0; i < cfg.n; ++i)
                for (Eigen::Index j = 0; j < cfg.p; ++j) synthetic.x(i, j) = data_rng.normal();
            synthetic.response.assign(static_cast<std::size_t>(cfg.n), 0.0);
            for (Eigen::Index i = 0; i < cfg.n / 2; ++i) synthetic.response[static_cast<std::size_t>(i)] = 1.0;
            for (std::size_t i = synthetic.response.size() - 1; i > 0; --i)
                std::swap(synthetic.response[i],
                          synthetic.response[static_cast<std::size_t>(data_rng.below(i + 1))]);
        }
        const LabeledDataset& d = user ? *user : synthetic;
        auto& out = runs[static_cast<std::size_t>(r)];
        for (const auto e : estimators) {
            SeededRng rng(cfg.seed, client_stream(rep, 0, kStreamNoise));
            out.push_back(tracing_experiment(d, e, budget, rng));
        }
    });

    for (std::size_t a = 0; a < estimators.size(); ++a) {
        AttackArm arm;
        arm.estimator = estimators[a];
        std::vector<double> scores;
        std::vector<bool> member;
        for (const auto& rep : runs) {
            const TracingRun& run = rep[a];
            arm.aucs.push_back(run.roc.auc);
            scores.insert(scores.end(), run.scores.begin(), run.scores.end());
            member.insert(member.end(), run.member.begin(), run.member.end());
        }
        std::tie(arm.mean_auc, arm.se_auc) = mean_se(arm.aucs);
        arm.pooled = roc_curve(scores, member);
        summary.arms.push_back(std::move(arm));
    }
    return summary;
}

void write_attack(const AttackSummary& summary, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"replication"};
    for (const auto& arm : summary.arms) {
        write_roc_csv(dir / fmt::format("roc_{}.csv", estimator_name(arm.estimator)), arm.pooled);
        rows.push_back({std::string(estimator_name(arm.estimator)),
                        std::to_string(arm.aucs.size()), csv::format_number(arm.mean_auc),
                        csv::format_number(arm.se_auc), csv::format_number(arm.pooled.auc)});
        header.push_back(fmt::format("auc_{}", estimator_name(arm.estimator)));
    }
    csv::write(dir / "attack_summary.csv",
               {"estimator", "replications", "mean_auc", "se_auc", "pooled_auc"}, rows);

    std::vector<std::vector<std::string>> per_rep;
    const std::size_t reps = summary.arms.front().aucs.size();
    for (std::size_t r = 0; r < reps; ++r) {
        std::vector<std::string> row{std::to_string(r)};
        for (const auto& arm : summary.arms) row.push_back(csv::format_number(arm.aucs[r]));
        per_rep.push_back(std::move(row));
    }
    csv::write(dir / "attack_replications.csv", header, per_rep);
}

EstimateOutput run_estimate(const ExperimentConfig& cfg) {
    ClientData data = make_clients(cfg, 0);
    FsirOptions opts = cfg.fsir;
    opts.seed = cfg.seed;
    opts.replication = 0;
    opts.forced_d = cfg.forced_d();
    EstimateOutput out;
    out.names = covariate_names(data.clients.front());
    out.result = run_fsir(data.clients, opts);
    return out;
}

void write_estimate(const EstimateOutput& est, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const Matrix& beta = est.result.estimate.beta;
    std::vector<std::string> header{"covariate"};
    for (Eigen::Index c = 0; c < beta.cols(); ++c) header.push_back(fmt::format("beta{}", c + 1));
    std::vector<std::vector<std::string>> rows;
    for (Eigen::Index j = 0; j < beta.rows(); ++j) {
        std::vector<std::string> row{est.names[static_cast<std::size_t>(j)]};
        for (Eigen::Index c = 0; c < beta.cols(); ++c) row.push_back(csv::format_number(beta(j, c)));
        rows.push_back(std::move(row));
    }
    csv::write(dir / "subspace.csv", header, rows);

    nlohmann::ordered_json info;
    info["d"] = est.result.estimate.d;
    info["d_rule"] = est.result.estimate.d_rule;
    info["ridge"] = est.result.estimate.ridge;
    info["uploads"] = est.result.state.uploads;
    info["excluded"] = est.result.excluded;
    info["total_n"] = est.result.state.total_n;
    info["screened"] = est.result.screened;
    if (est.result.active) info["active_set"] = est.result.active->indices;
    write_text(dir / "estimate_info.json", info.dump(2) + "\n");
    if (!est.result.trace.empty()) write_trace(dir / "trace.jsonl", est.result.trace);
}

ScreenOutput run_screen(const ExperimentConfig& cfg) {
    ClientData data = make_clients(cfg, 0);
    ScreenOutput out;
    out.names = covariate_names(data.clients.front());
    for (const auto& c : data.clients)
        out.votes.push_back(ccmd_client(c, cfg.fsir.client.r, cfg.fsir.screening));
    out.active = ccmd_aggregate(out.votes, static_cast<int>(out.votes.size()));
    return out;
}

void write_screen(const ScreenOutput& out, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::map<int, long> pooled;
    std::vector<std::vector<std::string>> vote_rows;
    for (std::size_t k = 0; k < out.votes.size(); ++k)
        for (const auto& [index, count] : out.votes[k].multiplicity) {
            pooled[index] += count;
            vote_rows.push_back({std::to_string(k), std::to_string(index), std::to_string(count)});
        }
    csv::write(dir / "votes.csv", {"client", "index", "multiplicity"}, vote_rows);

    std::vector<std::vector<std::string>> rows;
    for (int index : out.active.indices)
        rows.push_back({std::to_string(index), out.names[static_cast<std::size_t>(index - 1)],
                        std::to_string(pooled[index])});
    csv::write(dir / "active_set.csv", {"index", "covariate", "multiplicity"}, rows);
}

}  // namespace fsir
