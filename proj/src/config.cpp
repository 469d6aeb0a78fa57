#include <algorithm>
#include <charconv>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "fsir/csv.hpp"
#include "fsir/error.hpp"
#include "fsir/experiment.hpp"

namespace fsir {
namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, std::string_view want) {
    throw ConfigError(fmt::format("{}: invalid value '{}' (expected {})", key, value, want));
}

double to_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) bad_value(key, value, "a number");
    return v;
}

template <typename Int>
Int to_int(const std::string& key, const std::string& value) {
    Int v = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end) bad_value(key, value, "an integer");
    return v;
}

bool to_bool(const std::string& key, const std::string& value) {
    const std::string v = lower(value);
    if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "off" || v == "no" || v == "0") return false;
    bad_value(key, value, "true or false");
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) bad_value(key, value, "a comma-separated list of numbers");
        out.push_back(to_double(key, item.substr(first, last - first + 1)));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n\"");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n\"");
    return s.substr(first, last - first + 1);
}

void validate(const ExperimentConfig& c) {
    auto fail = [](std::string_view what) { throw ConfigError(std::string(what)); };
    if (c.p < 1) fail("data.p must be positive");
    if (c.n < 2) fail("data.n must be at least 2");
    if (c.clients < 1) fail("data.clients must be positive");
    if (c.slices < 2) fail("data.slices must be at least 2");
    if (c.noise_scale < 0.0) fail("data.noise_scale must be non-negative");
    if (!std::is_sorted(c.slicing.breaks.begin(), c.slicing.breaks.end()))
        fail("data.breaks must be ascending");
    if (c.slicing.kind == SlicingRule::Kind::fixed_breaks && c.slicing.breaks.empty())
        fail("data.slicing = fixed needs data.breaks");
    const auto& o = c.fsir.client;
    if (!(o.epsilon_m > 0.0) || !(o.epsilon_x > 0.0)) fail("privacy.epsilon must be positive");
    if (o.delta && !(*o.delta > 0.0 && *o.delta < 1.0)) fail("privacy.delta must lie in (0,1)");
    if (!(o.delta_exponent > 0.0)) fail("privacy.delta_exponent must be positive");
    if (!(o.r > 0.0)) fail("privacy.r must be positive");
    if (!(o.sigma0 > 0.0)) fail("privacy.sigma0 must be positive");
    if (c.fsir.ridge < 0.0) fail("estimation.ridge must be non-negative");
    if (c.dim == DimChoice::fixed && c.fixed_d < 1) fail("estimation.d must be positive");
    if (c.fsir.screening.threshold && !(*c.fsir.screening.threshold > 0.0))
        fail("screening.threshold must be positive");
    if (!(c.fsir.screening.gamma > 0.0 && c.fsir.screening.gamma < 1.0))
        fail("screening.gamma must lie in (0,1)");
    if (c.replications < 1) fail("run.replications must be positive");
    if (c.threads < 1) fail("run.threads must be positive");
}

}  // namespace

std::optional<int> ExperimentConfig::forced_d() const {
    switch (dim) {
        case DimChoice::known:
            if (csv) return std::nullopt;
            return structure_dimension(model);
        case DimChoice::automatic: return std::nullopt;
        case DimChoice::fixed: return fixed_d;
    }
    return std::nullopt;
}

void apply_setting(ExperimentConfig& c, const std::string& dotted_key, const std::string& raw) {
    const std::string key = lower(trim(dotted_key));
    const std::string value = trim(raw);
    const std::string v = lower(value);
    auto& o = c.fsir.client;

    if (key == "data.model") {
        try {
            c.model = parse_model(value);
        } catch (const InvalidInput&) {
            bad_value(key, value, "I, II, III, IV or V");
        }
    } else if (key == "data.csv") {
        if (value.empty()) c.csv.reset(); else c.csv = value;
    } else if (key == "data.response") {
        c.response = value;
    } else if (key == "data.categorical") {
        c.categorical = to_bool(key, value);
    } else if (key == "data.p") {
        c.p = to_int<Eigen::Index>(key, value);
    } else if (key == "data.n") {
        c.n = to_int<Eigen::Index>(key, value);
    } else if (key == "data.clients") {
        c.clients = to_int<int>(key, value);
    } else if (key == "data.slices") {
        c.slices = to_int<int>(key, value);
    } else if (key == "data.slicing") {
        if (v == "local") c.slicing.kind = SlicingRule::Kind::local;
        else if (v == "fixed" || v == "fixed-breaks") c.slicing.kind = SlicingRule::Kind::fixed_breaks;
        else bad_value(key, value, "local or fixed");
    } else if (key == "data.breaks") {
        c.slicing.breaks = value.empty() ? std::vector<double>{} : to_list(key, value);
    } else if (key == "data.center") {
        if (v == "client-mean") c.center = true;
        else if (v == "none") c.center = false;
        else c.center = to_bool(key, value);
    } else if (key == "data.model1") {
        if (v == "bernoulli") c.model1 = BinaryLaw::bernoulli;
        else if (v == "threshold") c.model1 = BinaryLaw::threshold;
        else bad_value(key, value, "bernoulli or threshold");
    } else if (key == "data.noise_scale") {
        c.noise_scale = to_double(key, value);
    } else if (key == "privacy.mechanism") {
        if (v == "none") o.mechanism = Mechanism::none;
        else if (v == "iid") o.mechanism = Mechanism::iid;
        else if (v == "vgm") o.mechanism = Mechanism::vgm;
        else bad_value(key, value, "none, iid or vgm");
    } else if (key == "privacy.epsilon") {
        o.epsilon_m = o.epsilon_x = to_double(key, value);
    } else if (key == "privacy.epsilon_m") {
        o.epsilon_m = to_double(key, value);
    } else if (key == "privacy.epsilon_x") {
        o.epsilon_x = to_double(key, value);
    } else if (key == "privacy.delta") {
        if (v == "rule") o.delta.reset(); else o.delta = to_double(key, value);
    } else if (key == "privacy.delta_exponent") {
        o.delta_exponent = to_double(key, value);
    } else if (key == "privacy.r") {
        o.r = to_double(key, value);
    } else if (key == "privacy.sigma0") {
        o.sigma0 = to_double(key, value);
    } else if (key == "privacy.vgm_bound") {
        if (v == "approx") o.vgm_bound = VgmBound::approx;
        else if (v == "exact") o.vgm_bound = VgmBound::exact;
        else bad_value(key, value, "approx or exact");
    } else if (key == "privacy.cov_noise") {
        if (v == "rescaled") o.cov_noise = CovNoise::rescaled;
        else if (v == "unit") o.cov_noise = CovNoise::unit;
        else bad_value(key, value, "rescaled or unit");
    } else if (key == "estimation.d") {
        if (v == "known") c.dim = DimChoice::known;
        else if (v == "auto") c.dim = DimChoice::automatic;
        else {
            c.dim = DimChoice::fixed;
            c.fixed_d = to_int<int>(key, value);
        }
    } else if (key == "estimation.ridge") {
        c.fsir.ridge = to_double(key, value);
    } else if (key == "estimation.high_dim") {
        if (v == "auto") c.fsir.high_dim = HighDim::automatic;
        else if (v == "on") c.fsir.high_dim = HighDim::on;
        else if (v == "off") c.fsir.high_dim = HighDim::off;
        else bad_value(key, value, "auto, on or off");
    } else if (key == "screening.threshold") {
        if (v == "auto") c.fsir.screening.threshold.reset();
        else c.fsir.screening.threshold = to_double(key, value);
    } else if (key == "screening.gamma") {
        c.fsir.screening.gamma = to_double(key, value);
    } else if (key == "screening.vote_unit") {
        if (v == "client") c.fsir.screening.vote_unit = VoteUnit::client;
        else if (v == "slice") c.fsir.screening.vote_unit = VoteUnit::slice;
        else bad_value(key, value, "client or slice");
    } else if (key == "screening.on_empty") {
        if (v == "abort") c.fsir.fallback_unscreened = false;
        else if (v == "unscreened") c.fsir.fallback_unscreened = true;
        else bad_value(key, value, "abort or unscreened");
    } else if (key == "run.replications") {
        c.replications = to_int<int>(key, value);
    } else if (key == "run.seed") {
        c.seed = to_int<std::uint64_t>(key, value);
    } else if (key == "run.threads") {
        c.threads = to_int<int>(key, value);
    } else if (key == "run.out") {
        c.out = value;
    } else if (key == "run.trace") {
        c.fsir.trace = to_bool(key, value);
    } else if (key == "run.id") {
        c.fsir.run_id = value;
    } else {
        throw ConfigError(fmt::format("unknown setting '{}'", dotted_key));
    }
}

namespace {

void apply_overrides(ExperimentConfig& cfg, const std::vector<std::string>& items) {
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || item.find('.') > eq)
            throw ConfigError(fmt::format("override '{}' is not section.key=value", item));
        apply_setting(cfg, item.substr(0, eq), item.substr(eq + 1));
    }
}

}  // namespace

ExperimentConfig load_config(const std::optional<std::filesystem::path>& path,
                             const std::vector<std::string>& overrides,
                             const std::vector<std::string>& presets) {
    ExperimentConfig cfg;
    apply_overrides(cfg, presets);
    if (path) {
        boost::property_tree::ptree tree;
        try {
            boost::property_tree::ini_parser::read_ini(path->string(), tree);
        } catch (const boost::property_tree::ini_parser_error& e) {
            throw ConfigError(fmt::format("cannot read config: {}", e.what()));
        }
        for (const auto& [section, body] : tree) {
            if (body.empty())
                throw ConfigError(fmt::format("config: '{}' is outside any section", section));
            for (const auto& [key, leaf] : body)
                apply_setting(cfg, section + "." + key, leaf.get_value<std::string>());
        }
    }
    apply_overrides(cfg, overrides);
    validate(cfg);
    return cfg;
}

std::string to_ini(const ExperimentConfig& c) {
    const auto& o = c.fsir.client;
    const auto num = [](double x) { return csv::format_number(x); };
    std::string dim;
    switch (c.dim) {
        case DimChoice::known: dim = "known"; break;
        case DimChoice::automatic: dim = "auto"; break;
        case DimChoice::fixed: dim = std::to_string(c.fixed_d); break;
    }
    std::vector<std::string> breaks;
    for (double b : c.slicing.breaks) breaks.push_back(num(b));
    const char* high_dim = c.fsir.high_dim == HighDim::on    ? "on"
                           : c.fsir.high_dim == HighDim::off ? "off"
                                                             : "auto";

    std::string s;
    s += "[data]\n";
    s += fmt::format("model = {}\n", model_name(c.model));
    s += fmt::format("csv = {}\n", c.csv ? c.csv->string() : "");
    s += fmt::format("response = {}\n", c.response);
    s += fmt::format("categorical = {}\n", c.categorical);
    s += fmt::format("p = {}\n", c.p);
    s += fmt::format("n = {}\n", c.n);
    s += fmt::format("clients = {}\n", c.clients);
    s += fmt::format("slices = {}\n", c.slices);
    s += fmt::format("slicing = {}\n", c.slicing.kind == SlicingRule::Kind::local ? "local" : "fixed");
    s += fmt::format("breaks = {}\n", fmt::join(breaks, ","));
    s += fmt::format("center = {}\n", c.center);
    s += fmt::format("model1 = {}\n", c.model1 == BinaryLaw::bernoulli ? "bernoulli" : "threshold");
    s += fmt::format("noise_scale = {}\n", num(c.noise_scale));
    s += "\n[privacy]\n";
    s += fmt::format("mechanism = {}\n", mechanism_name(o.mechanism));
    s += fmt::format("epsilon_m = {}\n", num(o.epsilon_m));
    s += fmt::format("epsilon_x = {}\n", num(o.epsilon_x));
    s += fmt::format("delta = {}\n", o.delta ? num(*o.delta) : "rule");
    s += fmt::format("delta_exponent = {}\n", num(o.delta_exponent));
    s += fmt::format("r = {}\n", num(o.r));
    s += fmt::format("sigma0 = {}\n", num(o.sigma0));
    s += fmt::format("vgm_bound = {}\n", o.vgm_bound == VgmBound::approx ? "approx" : "exact");
    s += fmt::format("cov_noise = {}\n", o.cov_noise == CovNoise::rescaled ? "rescaled" : "unit");
    s += "\n[estimation]\n";
    s += fmt::format("d = {}\n", dim);
    s += fmt::format("ridge = {}\n", num(c.fsir.ridge));
    s += fmt::format("high_dim = {}\n", high_dim);
    s += "\n[screening]\n";
    s += fmt::format("threshold = {}\n",
                     c.fsir.screening.threshold ? num(*c.fsir.screening.threshold) : "auto");
    s += fmt::format("gamma = {}\n", num(c.fsir.screening.gamma));
    s += fmt::format("vote_unit = {}\n",
                     c.fsir.screening.vote_unit == VoteUnit::client ? "client" : "slice");
    s += fmt::format("on_empty = {}\n", c.fsir.fallback_unscreened ? "unscreened" : "abort");
    s += "\n[run]\n";
    s += fmt::format("replications = {}\n", c.replications);
    s += fmt::format("seed = {}\n", c.seed);
    s += fmt::format("threads = {}\n", c.threads);
    s += fmt::format("out = {}\n", c.out.string());
    s += fmt::format("trace = {}\n", c.fsir.trace);
    s += fmt::format("id = {}\n", c.fsir.run_id);
    return s;
}

}  // namespace fsir
