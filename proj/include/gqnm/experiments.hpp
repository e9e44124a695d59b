#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqnm/analytics.hpp"
#include "gqnm/modem.hpp"
#include "gqnm/montecarlo.hpp"

namespace gqnm {

enum class SweepVariable {
    SigmaW,
    SamplesN,
};

/// Scheme plus the label used for it in exported tables and plots.
struct NamedScheme {
    std::string name;
    SchemeParams params;
};

/// Declarative description of one sweep experiment. Validated on
/// construction: non-empty strictly increasing grid (positive for SigmaW,
/// integers >= 2 for SamplesN), at least one scheme, unique scheme names.
class SweepSpec {
public:
    SweepSpec(SweepVariable variable, std::vector<double> grid,
              std::vector<NamedScheme> schemes, double sigma_w,
              std::uint64_t symbols_per_point, std::uint64_t master_seed,
              DetectorMode detector = DetectorMode::Threshold,
              MeanStatVariance mean_stat = MeanStatVariance::Averaged,
              MomentFidelity fidelity = MomentFidelity::Exact);

    SweepVariable variable() const noexcept { return variable_; }
    const std::vector<double>& grid() const noexcept { return grid_; }
    const std::vector<NamedScheme>& schemes() const noexcept { return schemes_; }
    /// Channel noise level used when the sweep variable is SamplesN.
    double sigma_w() const noexcept { return sigma_w_; }
    std::uint64_t symbols_per_point() const noexcept { return symbols_per_point_; }
    std::uint64_t master_seed() const noexcept { return master_seed_; }
    DetectorMode detector() const noexcept { return detector_; }
    MeanStatVariance mean_stat() const noexcept { return mean_stat_; }
    MomentFidelity fidelity() const noexcept { return fidelity_; }

private:
    SweepVariable variable_;
    std::vector<double> grid_;
    std::vector<NamedScheme> schemes_;
    double sigma_w_;
    std::uint64_t symbols_per_point_;
    std::uint64_t master_seed_;
    DetectorMode detector_;
    MeanStatVariance mean_stat_;
    MomentFidelity fidelity_;
};

/// One (grid value, scheme) cell: the simulation estimate and, where a
/// closed form exists for the family, the matching theory values.
struct SweepRow {
    SweepVariable variable;
    double value;
    std::string scheme;
    BepEstimate sim;
    std::optional<TheoryBep> theory;
};

struct SweepResult {
    SweepVariable variable;
    std::vector<SweepRow> rows; // sorted by (scheme, value)
};

/// Run every (grid value, scheme) cell. Pure function of the spec: all
/// cells share the spec's master seed, so reruns and any worker count
/// reproduce identical rows.
SweepResult sweep(const SweepSpec& spec, unsigned workers = 0);

/// Render the result as CSV: a fixed 11-column header, scientific notation
/// with 9 significant digits, "n/a" in theory columns for families without
/// closed forms, rows sorted by (scheme, value). Byte-deterministic.
std::string to_csv(const SweepResult& result);

/// Render the result as a self-contained SVG 1.1 chart: log error-probability
/// axis, log x for SigmaW and linear x for SamplesN, solid markers for
/// simulation, dashed lines for theory, one legend entry per (scheme,
/// sub-bit, kind). Byte-deterministic. Rows must share one variable.
std::string to_svg(const SweepResult& result);

} // namespace gqnm
