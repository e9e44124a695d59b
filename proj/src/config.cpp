#include "gqnm/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include "json.hpp"

#include "gqnm/errors.hpp"
#include "gqnm/presets.hpp"

namespace gqnm {

std::string to_string(DetectorMode mode) {
    return mode == DetectorMode::Threshold ? "threshold" : "mean-compensated";
}

std::string to_string(MeanStatVariance mode) {
    return mode == MeanStatVariance::Averaged ? "averaged" : "per-draw";
}

std::string to_string(MomentFidelity fidelity) {
    return fidelity == MomentFidelity::Exact ? "exact" : "simplified";
}

std::string to_string(SweepVariable variable) {
    return variable == SweepVariable::SigmaW ? "sigma_w" : "samples_per_symbol";
}

DetectorMode detector_from_string(const std::string& s) {
    if (s == "threshold") return DetectorMode::Threshold;
    if (s == "mean-compensated") return DetectorMode::MeanCompensated;
    throw InvalidInput("unknown detector mode '" + s +
                       "' (expected threshold or mean-compensated)");
}

MeanStatVariance mean_stat_from_string(const std::string& s) {
    if (s == "averaged") return MeanStatVariance::Averaged;
    if (s == "per-draw") return MeanStatVariance::PerDraw;
    throw InvalidInput("unknown mean statistic variance mode '" + s +
                       "' (expected averaged or per-draw)");
}

MomentFidelity fidelity_from_string(const std::string& s) {
    if (s == "exact") return MomentFidelity::Exact;
    if (s == "simplified") return MomentFidelity::Simplified;
    throw InvalidInput("unknown moment fidelity '" + s +
                       "' (expected exact or simplified)");
}

SweepVariable sweep_variable_from_string(const std::string& s) {
    if (s == "sigma_w") return SweepVariable::SigmaW;
    if (s == "samples_per_symbol") return SweepVariable::SamplesN;
    throw InvalidInput("unknown sweep variable '" + s +
                       "' (expected sigma_w or samples_per_symbol)");
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw InvalidInput("config: " + msg);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (std::string_view a : allowed) {
            if (it.key() == a) {
                known = true;
                break;
            }
        }
        if (!known) fail("unknown key '" + join(path, it.key()) + "'");
    }
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double number_at(const json& obj, const std::string& path, const char* key,
                 std::optional<double> def = std::nullopt) {
    const json* v = find(obj, key);
    if (!v) {
        if (def) return *def;
        fail("missing required key '" + join(path, key) + "'");
    }
    if (!v->is_number()) fail("'" + join(path, key) + "' must be a number");
    return v->get<double>();
}

std::uint64_t uint_at(const json& obj, const std::string& path, const char* key,
                      std::optional<std::uint64_t> def = std::nullopt) {
    const json* v = find(obj, key);
    if (!v) {
        if (def) return *def;
        fail("missing required key '" + join(path, key) + "'");
    }
    if (!v->is_number_unsigned())
        fail("'" + join(path, key) + "' must be a non-negative integer");
    return v->get<std::uint64_t>();
}

std::string string_at(const json& obj, const std::string& path, const char* key,
                      std::optional<std::string> def = std::nullopt) {
    const json* v = find(obj, key);
    if (!v) {
        if (def) return *def;
        fail("missing required key '" + join(path, key) + "'");
    }
    if (!v->is_string()) fail("'" + join(path, key) + "' must be a string");
    return v->get<std::string>();
}

bool bool_at(const json& obj, const std::string& path, const char* key,
             std::optional<bool> def = std::nullopt) {
    const json* v = find(obj, key);
    if (!v) {
        if (def) return *def;
        fail("missing required key '" + join(path, key) + "'");
    }
    if (!v->is_boolean()) fail("'" + join(path, key) + "' must be a boolean");
    return v->get<bool>();
}

// Resolves the enum-valued keys; rewraps the helper's message with the path.
template <typename Fn>
auto enum_at(const json& obj, const std::string& path, const char* key, Fn from,
             decltype(from(std::string{})) def) {
    const json* v = find(obj, key);
    if (!v) return def;
    if (!v->is_string()) fail("'" + join(path, key) + "' must be a string");
    try {
        return from(v->get<std::string>());
    } catch (const InvalidInput& e) {
        fail("'" + join(path, key) + "': " + e.what());
    }
}

NamedScheme parse_scheme_object(const json& s, const RunConfig& cfg) {
    const std::string path = "scheme";
    const std::string family = string_at(s, path, "family");

    const double mean_low = number_at(s, path, "mean_low", presets::kMeanLow);
    const double mean_high = number_at(s, path, "mean_high", presets::kMeanHigh);
    const std::uint64_t n =
        uint_at(s, path, "samples_per_symbol", presets::kSamplesPerSymbol);
    if (n < 1) fail("'scheme.samples_per_symbol' must be >= 1");

    if (family == "gauss") {
        check_keys(s, path,
                   {"family", "mean_low", "mean_high", "samples_per_symbol",
                    "sigma_low", "sigma_high"});
        const double sigma_low = number_at(s, path, "sigma_low");
        const double sigma_high = number_at(s, path, "sigma_high");
        return {.name = family,
                .params = SchemeParams(mean_low, mean_high, Gaussian(sigma_low),
                                       Gaussian(sigma_high),
                                       static_cast<std::size_t>(n))};
    }
    if (family == "mixture") {
        check_keys(s, path,
                   {"family", "mean_low", "mean_high", "samples_per_symbol",
                    "weight", "sigma0_low", "sigma1_low", "sigma0_high",
                    "sigma1_high", "power_matched"});
        const double weight = number_at(s, path, "weight", cfg.mixture_weight);
        const double s0l = number_at(s, path, "sigma0_low");
        const double s1l = number_at(s, path, "sigma1_low");
        const double s0h = number_at(s, path, "sigma0_high");
        const bool has_high = find(s, "sigma1_high") != nullptr;
        const bool has_pm = find(s, "power_matched") != nullptr;
        if (has_high && has_pm)
            fail("'scheme.power_matched' conflicts with 'scheme.sigma1_high'");
        double s1h;
        if (has_high) {
            s1h = number_at(s, path, "sigma1_high");
        } else if (has_pm && bool_at(s, path, "power_matched")) {
            s1h = match_power_mixture(presets::reference_power(), weight, s0l,
                                      s1l, s0h, mean_low, mean_high);
        } else {
            fail("'scheme': give sigma1_high or power_matched = true");
        }
        return {.name = family,
                .params = SchemeParams(mean_low, mean_high,
                                       TwoGaussianMixture(weight, s0l, s1l),
                                       TwoGaussianMixture(weight, s0h, s1h),
                                       static_cast<std::size_t>(n))};
    }
    if (family == "laplace") {
        check_keys(s, path,
                   {"family", "mean_low", "mean_high", "samples_per_symbol",
                    "lambda_low", "lambda_high", "power_matched"});
        const double lambda_low = number_at(s, path, "lambda_low");
        const bool has_high = find(s, "lambda_high") != nullptr;
        const bool has_pm = find(s, "power_matched") != nullptr;
        if (has_high && has_pm)
            fail("'scheme.power_matched' conflicts with 'scheme.lambda_high'");
        double lambda_high;
        if (has_high) {
            lambda_high = number_at(s, path, "lambda_high");
        } else if (has_pm && bool_at(s, path, "power_matched")) {
            lambda_high = match_power_laplace(presets::reference_power(),
                                              lambda_low, mean_low, mean_high);
        } else {
            fail("'scheme': give lambda_high or power_matched = true");
        }
        return {.name = family,
                .params = SchemeParams(mean_low, mean_high, Laplacian(lambda_low),
                                       Laplacian(lambda_high),
                                       static_cast<std::size_t>(n))};
    }
    fail("'scheme.family' must be gauss, mixture, or laplace (got '" + family +
         "')");
}

SweepSection parse_sweep_section(const json& s) {
    const std::string path = "sweep";
    if (!s.is_object()) fail("'sweep' must be an object");
    check_keys(s, path,
               {"preset", "variable", "grid", "schemes", "symbols_per_point"});

    SweepSection out;
    const bool has_preset = find(s, "preset") != nullptr;
    const bool has_variable = find(s, "variable") != nullptr;
    const bool has_grid = find(s, "grid") != nullptr;

    if (has_preset) {
        if (has_variable || has_grid)
            fail("'sweep.preset' conflicts with 'sweep.variable'/'sweep.grid'");
        out.preset = string_at(s, path, "preset");
        if (out.preset != "sigma" && out.preset != "samples")
            fail("unknown sweep preset '" + out.preset +
                 "' (expected sigma or samples)");
    } else {
        if (!has_variable || !has_grid)
            fail("'sweep' needs a preset, or both variable and grid");
        out.variable = enum_at(s, path, "variable", sweep_variable_from_string,
                               SweepVariable::SigmaW);
        const json& g = *find(s, "grid");
        if (!g.is_array() || g.empty())
            fail("'sweep.grid' must be a non-empty array of numbers");
        for (const json& v : g) {
            if (!v.is_number())
                fail("'sweep.grid' must be a non-empty array of numbers");
            out.grid.push_back(v.get<double>());
        }
    }

    if (const json* sch = find(s, "schemes")) {
        if (!sch->is_array() || sch->empty())
            fail("'sweep.schemes' must be a non-empty array of scheme names");
        out.schemes.clear();
        for (const json& v : *sch) {
            if (!v.is_string())
                fail("'sweep.schemes' must be a non-empty array of scheme names");
            out.schemes.push_back(v.get<std::string>());
        }
    }
    out.symbols_per_point =
        uint_at(s, path, "symbols_per_point", out.symbols_per_point);
    if (out.symbols_per_point < 1)
        fail("'sweep.symbols_per_point' must be >= 1");
    return out;
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("top level must be an object");
    check_keys(j, "",
               {"schema_version", "master_seed", "workers", "sigma_w",
                "num_symbols", "detector", "mean_stat", "fidelity",
                "mixture_weight", "power_matched", "scheme", "sweep",
                "output_csv", "output_svg"});

    const json* ver = find(j, "schema_version");
    if (!ver) fail("missing required key 'schema_version'");
    if (!ver->is_number_integer() || ver->get<std::int64_t>() != 1)
        fail("'schema_version' must be the integer 1");

    RunConfig cfg;
    cfg.master_seed = uint_at(j, "", "master_seed", cfg.master_seed);
    const std::uint64_t workers = uint_at(j, "", "workers", cfg.workers);
    cfg.workers = static_cast<unsigned>(workers);
    cfg.sigma_w = number_at(j, "", "sigma_w", cfg.sigma_w);
    cfg.num_symbols = uint_at(j, "", "num_symbols", cfg.num_symbols);
    if (cfg.num_symbols < 1) fail("'num_symbols' must be >= 1");
    cfg.detector =
        enum_at(j, "", "detector", detector_from_string, cfg.detector);
    cfg.mean_stat =
        enum_at(j, "", "mean_stat", mean_stat_from_string, cfg.mean_stat);
    cfg.fidelity =
        enum_at(j, "", "fidelity", fidelity_from_string, cfg.fidelity);
    cfg.mixture_weight =
        number_at(j, "", "mixture_weight", cfg.mixture_weight);
    cfg.power_matched = bool_at(j, "", "power_matched", cfg.power_matched);
    cfg.output_csv = string_at(j, "", "output_csv", cfg.output_csv);
    cfg.output_svg = string_at(j, "", "output_svg", cfg.output_svg);

    if (const json* s = find(j, "scheme")) {
        if (s->is_string()) {
            cfg.scheme = presets::by_name(s->get<std::string>(),
                                          cfg.mixture_weight, cfg.power_matched);
        } else if (s->is_object()) {
            cfg.scheme = parse_scheme_object(*s, cfg);
        } else {
            fail("'scheme' must be a scheme name or an object");
        }
    }
    if (const json* s = find(j, "sweep")) cfg.sweep = parse_sweep_section(*s);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

SweepSpec make_sweep_spec(const RunConfig& cfg) {
    if (!cfg.sweep) fail("no sweep section");
    const SweepSection& s = *cfg.sweep;

    SweepVariable variable = SweepVariable::SigmaW;
    std::vector<double> grid;
    if (s.preset == "sigma") {
        grid = presets::sigma_grid();
    } else if (s.preset == "samples") {
        variable = SweepVariable::SamplesN;
        grid = presets::samples_grid();
    } else if (s.preset.empty()) {
        if (!s.variable) fail("'sweep' needs a preset, or both variable and grid");
        variable = *s.variable;
        grid = s.grid;
    } else {
        fail("unknown sweep preset '" + s.preset + "' (expected sigma or samples)");
    }

    std::vector<NamedScheme> schemes;
    schemes.reserve(s.schemes.size());
    for (const std::string& name : s.schemes) {
        schemes.push_back(
            presets::by_name(name, cfg.mixture_weight, cfg.power_matched));
    }
    return SweepSpec(variable, std::move(grid), std::move(schemes), cfg.sigma_w,
                     s.symbols_per_point, cfg.master_seed, cfg.detector,
                     cfg.mean_stat, cfg.fidelity);
}

} // namespace gqnm
