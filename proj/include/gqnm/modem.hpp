#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gqnm/noise.hpp"
#include "gqnm/rng.hpp"

namespace gqnm {

/// The two information bits carried by one symbol: b0 selects the mean
/// bias, b1 selects the variance class.
struct BitPair {
    bool b0;
    bool b1;

    friend bool operator==(const BitPair&, const BitPair&) = default;
};

/// One modulation scheme: two mean biases, a low- and a high-variance
/// noise class, and the number of samples per symbol.
class SchemeParams {
public:
    /// Standard scheme: requires mean_low < mean_high and
    /// variance(low) < variance(high).
    SchemeParams(double mean_low, double mean_high, NoiseModel low,
                 NoiseModel high, std::size_t samples_per_symbol);

    /// Variance-only binary mode: both biases collapse to `mean`, so only
    /// b1 is recoverable. Kept separate from the standard constructor so
    /// equal means are always an explicit choice.
    static SchemeParams degenerate(double mean, NoiseModel low, NoiseModel high,
                                   std::size_t samples_per_symbol);

    double mean_low() const noexcept { return mean_low_; }
    double mean_high() const noexcept { return mean_high_; }
    const NoiseModel& low() const noexcept { return low_; }
    const NoiseModel& high() const noexcept { return high_; }
    std::size_t samples_per_symbol() const noexcept { return samples_per_symbol_; }
    bool degenerate_means() const noexcept { return mean_low_ == mean_high_; }

    /// Same scheme with a different symbol length (used by sample-count
    /// sweeps).
    SchemeParams with_samples(std::size_t samples_per_symbol) const;

private:
    struct DegenerateTag {};
    SchemeParams(DegenerateTag, double mean, NoiseModel low, NoiseModel high,
                 std::size_t samples_per_symbol);

    void check_common() const;

    double mean_low_;
    double mean_high_;
    NoiseModel low_;
    NoiseModel high_;
    std::size_t samples_per_symbol_;
};

using Symbol = std::vector<double>;

/// Decision thresholds: midpoints of the design means and variances.
struct Thresholds {
    double mean;
    double variance;
};

/// Detection statistics of one received symbol. second_moment is the raw
/// (1/N) sum of r^2, not a mean-centered variance.
struct SymbolStats {
    double sample_mean;
    double raw_second_moment;
};

enum class DetectorMode {
    /// Compare the raw second moment against the variance threshold.
    Threshold,
    /// Extension: subtract the squared sample mean from the second moment
    /// before the variance comparison (threshold unchanged).
    MeanCompensated,
};

/// Mean bias transmitted for this bit pair (selected by b0 alone).
double case_mean(const SchemeParams& scheme, BitPair bits);

/// Noise class transmitted for this bit pair (selected by b1 alone).
const NoiseModel& case_model(const SchemeParams& scheme, BitPair bits);

/// Transmit-side variance of one sample for this bit pair; excludes any
/// channel noise.
double case_tx_variance(const SchemeParams& scheme, BitPair bits);

/// Generate one symbol: samples_per_symbol draws of the selected noise
/// class, each offset by the selected mean bias.
Symbol modulate(const SchemeParams& scheme, BitPair bits, RngStream& rng);

/// Same, writing into a caller-owned buffer of exactly
/// scheme.samples_per_symbol() entries (hot-loop variant; no allocation).
void modulate_into(const SchemeParams& scheme, BitPair bits, RngStream& rng,
                   std::span<double> out);

Thresholds thresholds(const SchemeParams& scheme);

/// Sample mean and raw second moment of a received symbol.
SymbolStats statistics(std::span<const double> samples);

/// Threshold detector. Strict-greater convention: a statistic exactly on
/// its threshold decodes as 0.
BitPair detect(const SymbolStats& stats, const Thresholds& th,
               DetectorMode mode = DetectorMode::Threshold);

} // namespace gqnm
