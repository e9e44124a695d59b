#include "gqnm/modem.hpp"

#include <cmath>
#include <utility>

#include "gqnm/errors.hpp"

namespace gqnm {

SchemeParams::SchemeParams(double mean_low, double mean_high, NoiseModel low,
                           NoiseModel high, std::size_t samples_per_symbol)
    : mean_low_(mean_low),
      mean_high_(mean_high),
      low_(std::move(low)),
      high_(std::move(high)),
      samples_per_symbol_(samples_per_symbol) {
    if (!(std::isfinite(mean_low_) && std::isfinite(mean_high_))) {
        throw InvalidInput("SchemeParams: mean biases must be finite");
    }
    if (!(mean_low_ < mean_high_)) {
        throw InvalidInput(
            "SchemeParams: requires mean_low < mean_high (use degenerate() for the "
            "equal-mean binary mode)");
    }
    check_common();
}

SchemeParams::SchemeParams(DegenerateTag, double mean, NoiseModel low,
                           NoiseModel high, std::size_t samples_per_symbol)
    : mean_low_(mean),
      mean_high_(mean),
      low_(std::move(low)),
      high_(std::move(high)),
      samples_per_symbol_(samples_per_symbol) {
    if (!std::isfinite(mean)) {
        throw InvalidInput("SchemeParams: mean bias must be finite");
    }
    check_common();
}

SchemeParams SchemeParams::degenerate(double mean, NoiseModel low, NoiseModel high,
                                      std::size_t samples_per_symbol) {
    return SchemeParams(DegenerateTag{}, mean, std::move(low), std::move(high),
                        samples_per_symbol);
}

void SchemeParams::check_common() const {
    if (samples_per_symbol_ == 0) {
        throw InvalidInput("SchemeParams: samples_per_symbol must be >= 1");
    }
    if (!(variance(low_) < variance(high_))) {
        throw InvalidInput("SchemeParams: requires variance(low) < variance(high)");
    }
}

SchemeParams SchemeParams::with_samples(std::size_t samples_per_symbol) const {
    SchemeParams copy = *this;
    if (samples_per_symbol == 0) {
        throw InvalidInput("SchemeParams: samples_per_symbol must be >= 1");
    }
    copy.samples_per_symbol_ = samples_per_symbol;
    return copy;
}

double case_mean(const SchemeParams& scheme, BitPair bits) {
    return bits.b0 ? scheme.mean_high() : scheme.mean_low();
}

const NoiseModel& case_model(const SchemeParams& scheme, BitPair bits) {
    return bits.b1 ? scheme.high() : scheme.low();
}

double case_tx_variance(const SchemeParams& scheme, BitPair bits) {
    return variance(case_model(scheme, bits));
}

void modulate_into(const SchemeParams& scheme, BitPair bits, RngStream& rng,
                   std::span<double> out) {
    if (out.size() != scheme.samples_per_symbol()) {
        throw InvalidInput("modulate_into: buffer length must equal samples_per_symbol");
    }
    const double mean = case_mean(scheme, bits);
    const NoiseModel& model = case_model(scheme, bits);
    for (double& sample : out) {
        sample = mean + draw(model, rng);
    }
}

Symbol modulate(const SchemeParams& scheme, BitPair bits, RngStream& rng) {
    Symbol symbol(scheme.samples_per_symbol());
    modulate_into(scheme, bits, rng, symbol);
    return symbol;
}

Thresholds thresholds(const SchemeParams& scheme) {
    return Thresholds{
        .mean = 0.5 * (scheme.mean_low() + scheme.mean_high()),
        .variance = 0.5 * (variance(scheme.low()) + variance(scheme.high())),
    };
}

SymbolStats statistics(std::span<const double> samples) {
    if (samples.empty()) {
        throw InvalidInput("statistics: symbol must contain at least one sample");
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double r : samples) {
        sum += r;
        sum_sq += r * r;
    }
    const double inv_n = 1.0 / static_cast<double>(samples.size());
    return SymbolStats{.sample_mean = sum * inv_n, .raw_second_moment = sum_sq * inv_n};
}

BitPair detect(const SymbolStats& stats, const Thresholds& th, DetectorMode mode) {
    const double variance_stat =
        (mode == DetectorMode::MeanCompensated)
            ? stats.raw_second_moment - stats.sample_mean * stats.sample_mean
            : stats.raw_second_moment;
    return BitPair{
        .b0 = stats.sample_mean > th.mean,
        .b1 = variance_stat > th.variance,
    };
}

} // namespace gqnm
