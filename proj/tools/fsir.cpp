#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "fsir/csv.hpp"
#include "fsir/error.hpp"
#include "fsir/experiment.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kRunError = 3;

struct CommonArgs {
    std::optional<std::string> config;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<std::string> out;
    std::vector<std::string> set;
    std::map<std::string, std::string> fields;  ///< convenience flags -> setting key
};

void add_common(CLI::App* app, CommonArgs& a) {
    app->add_option("--config", a.config, "INI configuration file");
    app->add_option("--seed", a.seed, "Master seed");
    app->add_option("--threads", a.threads, "Worker threads");
    app->add_option("--out", a.out, "Output directory");
    app->add_option("--set", a.set, "Override a setting: section.key=value (repeatable)");
    static const std::vector<std::pair<std::string, std::string>> fields = {
        {"model", "data.model"},       {"p", "data.p"},
        {"n", "data.n"},               {"clients", "data.clients"},
        {"slices", "data.slices"},     {"csv", "data.csv"},
        {"response", "data.response"}, {"mechanism", "privacy.mechanism"},
        {"epsilon", "privacy.epsilon"}, {"delta", "privacy.delta"},
        {"r", "privacy.r"},            {"d", "estimation.d"},
        {"high-dim", "estimation.high_dim"}, {"replications", "run.replications"},
    };
    for (const auto& [flag, key] : fields) {
        app->add_option_function<std::string>(
            "--" + flag, [&a, key = key](const std::string& v) { a.fields[key] = v; },
            "Shortcut for --set " + key + "=VALUE");
    }
    app->add_flag_function(
        "--trace", [&a](std::int64_t) { a.fields["run.trace"] = "true"; },
        "Write the protocol trace");
}

std::vector<std::string> overrides(const CommonArgs& a) {
    std::vector<std::string> out;
    for (const auto& [key, value] : a.fields) out.push_back(key + "=" + value);
    out.insert(out.end(), a.set.begin(), a.set.end());
    if (a.seed) out.push_back(fmt::format("run.seed={}", *a.seed));
    if (a.threads) out.push_back(fmt::format("run.threads={}", *a.threads));
    if (a.out) out.push_back("run.out=" + *a.out);
    return out;
}

fsir::ExperimentConfig load(const CommonArgs& a, const std::vector<std::string>& presets = {}) {
    std::optional<std::filesystem::path> path;
    if (a.config) path = *a.config;
    return fsir::load_config(path, overrides(a), presets);
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::vector<std::string>& items, Parse parse) {
    std::vector<T> out;
    for (const auto& s : items) out.push_back(parse(s));
    return out;
}

fsir::Mechanism parse_mechanism(const std::string& s) {
    if (s == "iid") return fsir::Mechanism::iid;
    if (s == "vgm") return fsir::Mechanism::vgm;
    if (s == "none") return fsir::Mechanism::none;
    throw fsir::ConfigError(fmt::format("unknown mechanism '{}'", s));
}

fsir::AttackEstimator parse_estimator(const std::string& s) {
    if (s == "raw") return fsir::AttackEstimator::raw;
    if (s == "iid") return fsir::AttackEstimator::iid;
    if (s == "vgm") return fsir::AttackEstimator::vgm;
    if (s == "fixed") return fsir::AttackEstimator::fixed;
    throw fsir::ConfigError(fmt::format("unknown estimator '{}'", s));
}

int cmd_simulate(const CommonArgs& a) {
    const auto cfg = load(a);
    const auto rec = fsir::run_experiment(cfg);
    fsir::write_run(rec, cfg.out);
    fmt::print("model {} p={} n={} K={} {}: mean loss {:.4f} (se {:.4f}), mean angle {:.4f}, "
               "{} failed, {} excluded clients, {:.1f}s -> {}\n",
               fsir::model_name(cfg.model), cfg.p, cfg.n, cfg.clients,
               fsir::mechanism_name(cfg.fsir.client.mechanism), rec.mean_loss, rec.se_loss,
               rec.mean_angle, rec.failed, rec.excluded_total, rec.wall_seconds,
               cfg.out.string());
    return 0;
}

int cmd_tables(const CommonArgs& a, const std::vector<int>& tables,
               const std::vector<std::string>& models, const std::vector<int>& sizes,
               const std::vector<int>& clients, const std::vector<std::string>& mechanisms) {
    const auto base = load(a);
    fsir::TableFilter filter;
    filter.models = parse_list<fsir::Model>(models, [](const std::string& s) {
        try {
            return fsir::parse_model(s);
        } catch (const fsir::InvalidInput& e) {
            throw fsir::ConfigError(e.what());
        }
    });
    filter.sizes = sizes;
    filter.clients = clients;
    filter.mechanisms = parse_list<fsir::Mechanism>(mechanisms, parse_mechanism);

    std::size_t failed = 0;
    for (int t : tables) {
        const auto cells = fsir::reproduce_table(t, base, filter, overrides(a));
        const auto path = base.out / fmt::format("table{}.csv", t);
        fsir::write_table_csv(path, t, cells, base);
        fmt::print("Table {} ({} cells) -> {}\n", t, cells.size(), path.string());
        fmt::print("  {:<5} {:>5} {:>4} {:<4} {:>8} {:>7} {:>8}\n", "model", "size", "K", "mech",
                   "mean", "se", "paper");
        for (const auto& c : cells) {
            if (!c.record) {
                ++failed;
                fmt::print("  {:<5} {:>5} {:>4} {:<4} failed: {}\n", fsir::model_name(c.paper.model),
                           c.paper.size, c.paper.clients, fsir::mechanism_name(c.paper.mechanism),
                           c.error);
                continue;
            }
            fmt::print("  {:<5} {:>5} {:>4} {:<4} {:>8.3f} {:>7.3f} {:>8.3f}\n",
                       fsir::model_name(c.paper.model), c.paper.size, c.paper.clients,
                       fsir::mechanism_name(c.paper.mechanism), c.record->mean_loss,
                       c.record->se_loss, c.paper.mean);
        }
    }
    return failed == 0 ? 0 : kRunError;
}

int cmd_attack(const CommonArgs& a, const std::vector<std::string>& estimators) {
    const auto cfg = load(a, {"data.p=13", "data.n=250", "privacy.mechanism=vgm"});
    const auto summary =
        fsir::run_attack_demo(cfg, parse_list<fsir::AttackEstimator>(estimators, parse_estimator));
    fsir::write_attack(summary, cfg.out);
    for (const auto& arm : summary.arms)
        fmt::print("AUC {:<5} mean {:.4f} (se {:.4f}) over {} replications\n",
                   fsir::estimator_name(arm.estimator), arm.mean_auc, arm.se_auc, arm.aucs.size());
    return 0;
}

int cmd_screen(const CommonArgs& a) {
    const auto cfg = load(a);
    const auto out = fsir::run_screen(cfg);
    fsir::write_screen(out, cfg.out);
    std::vector<std::string> names;
    for (int i : out.active.indices) names.push_back(out.names[static_cast<std::size_t>(i - 1)]);
    fmt::print("active set ({} of {}): {}\n", out.active.size(), out.names.size(),
               fmt::join(names, " "));
    return 0;
}

int cmd_estimate(const CommonArgs& a) {
    const auto cfg = load(a);
    const auto est = fsir::run_estimate(cfg);
    fsir::write_estimate(est, cfg.out);
    fmt::print("estimated d = {} (eigengap rule {}), {} uploads, {} excluded -> {}\n",
               est.result.estimate.d, est.result.estimate.d_rule, est.result.state.uploads,
               est.result.excluded.size(), (cfg.out / "subspace.csv").string());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Federated sliced inverse regression with differential privacy"};
    app.require_subcommand(1);

    CommonArgs sim_args, tab_args, att_args, scr_args, est_args;
    auto* sim = app.add_subcommand("simulate", "Run one synthetic experiment");
    add_common(sim, sim_args);

    auto* tab = app.add_subcommand("tables", "Reproduce the published simulation tables");
    add_common(tab, tab_args);
    std::vector<int> tables{1};
    std::vector<std::string> models, mechanisms;
    std::vector<int> sizes, ks;
    tab->add_option("--table", tables, "Table numbers 1-4")->check(CLI::Range(1, 4));
    tab->add_option("--models", models, "Restrict to these models (I..V)");
    tab->add_option("--sizes", sizes, "Restrict to these n (tables 1-2) or p (tables 3-4)");
    tab->add_option("--K", ks, "Restrict to these client counts");
    tab->add_option("--mechanisms", mechanisms, "Restrict to iid and/or vgm");

    auto* att = app.add_subcommand("attack", "Tracing attack ROC curves");
    add_common(att, att_args);
    std::vector<std::string> estimators{"raw", "iid", "vgm"};
    att->add_option("--estimators", estimators, "raw, iid, vgm and/or fixed");

    auto* scr = app.add_subcommand("screen", "CCMD variable screening only");
    add_common(scr, scr_args);

    auto* est = app.add_subcommand("estimate", "Estimate the subspace from CSV data");
    add_common(est, est_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (*sim) return cmd_simulate(sim_args);
        if (*tab) return cmd_tables(tab_args, tables, models, sizes, ks, mechanisms);
        if (*att) return cmd_attack(att_args, estimators);
        if (*scr) return cmd_screen(scr_args);
        if (*est) return cmd_estimate(est_args);
    } catch (const fsir::ConfigError& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kConfigError;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kRunError;
    }
    return kRunError;
}
