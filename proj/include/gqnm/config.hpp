#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqnm/experiments.hpp"

namespace gqnm {

// Enum <-> string helpers shared by the config file format and the CLI.
// from_string throws InvalidInput naming the accepted spellings.
std::string to_string(DetectorMode mode);
std::string to_string(MeanStatVariance mode);
std::string to_string(MomentFidelity fidelity);
std::string to_string(SweepVariable variable);
DetectorMode detector_from_string(const std::string& s);
MeanStatVariance mean_stat_from_string(const std::string& s);
MomentFidelity fidelity_from_string(const std::string& s);
SweepVariable sweep_variable_from_string(const std::string& s);

/// Sweep block of a run configuration. Either `preset` names a canned sweep
/// ("sigma" or "samples"), or `variable` + `grid` describe a custom one.
struct SweepSection {
    std::string preset;
    std::optional<SweepVariable> variable;
    std::vector<double> grid;
    std::vector<std::string> schemes = {"gauss", "laplace", "mixture"};
    std::uint64_t symbols_per_point = 100000;
};

/// A full run configuration: defaults here, optionally overlaid by a JSON
/// file (parse_config/load_config), then by CLI flags.
struct RunConfig {
    std::uint64_t master_seed = 1;
    unsigned workers = 0; // 0 = one per hardware thread
    double sigma_w = 2e-5;
    std::uint64_t num_symbols = 1000000;
    DetectorMode detector = DetectorMode::Threshold;
    MeanStatVariance mean_stat = MeanStatVariance::Averaged;
    MomentFidelity fidelity = MomentFidelity::Exact;
    double mixture_weight = 0.5;
    bool power_matched = true;
    std::optional<NamedScheme> scheme;
    std::optional<SweepSection> sweep;
    std::string output_csv;
    std::string output_svg;
};

/// Parses a JSON run configuration. The document must be an object with
/// integer schema_version == 1. Unknown keys are rejected by full path
/// ("sweep.grids"). The "scheme" entry is either a preset name or an object:
///   {"family": "gauss",   "sigma_low": .., "sigma_high": ..}
///   {"family": "mixture", "weight": .., "sigma0_low": .., "sigma1_low": ..,
///    "sigma0_high": .., "sigma1_high": ..}
///   {"family": "laplace", "lambda_low": .., "lambda_high": ..}
/// mean_low, mean_high, samples_per_symbol are optional in the object and
/// default to the study values. For mixture/laplace the explicit high
/// parameter may be replaced by "power_matched": true, which solves it so the
/// scheme's transmit power equals the Gaussian study scheme's; giving both or
/// neither is an error.
RunConfig parse_config(const std::string& json_text);

/// Reads `path` and parses it with parse_config.
RunConfig load_config(const std::string& path);

/// Builds the SweepSpec described by cfg.sweep (throws InvalidInput if the
/// config has no sweep section).
SweepSpec make_sweep_spec(const RunConfig& cfg);

} // namespace gqnm
