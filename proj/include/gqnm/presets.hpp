#pragma once

#include <cstdint>
#include <vector>

#include "gqnm/experiments.hpp"
#include "gqnm/modem.hpp"

namespace gqnm::presets {

/// Reference operating point shared by the three study schemes.
inline constexpr double kMeanLow = 1e-3;
inline constexpr double kMeanHigh = 1e-2;
inline constexpr double kSigmaW = 2e-5;
inline constexpr std::size_t kSamplesPerSymbol = 10;

inline constexpr double kGaussSigmaLow = 1e-3;
inline constexpr double kGaussSigmaHigh = 20e-3;

inline constexpr double kMixtureSigma0Low = 5e-4;
inline constexpr double kMixtureSigma1Low = 1e-3;
inline constexpr double kMixtureSigma0High = 5e-3;
/// Published value of the remaining mixture parameter; not reproducible
/// from the power formulas at weight 1/2 (the solver gives ~2.79e-2), so
/// the power-matched preset solves it instead and this literal is opt-in.
inline constexpr double kMixtureSigma1HighLiteral = 21e-3;

inline constexpr double kLaplaceScaleLow = 1e-4;
/// Published rounded value; the exact solve gives ~1.41594e-2.
inline constexpr double kLaplaceScaleHighLiteral = 14.2e-3;

/// Average transmit power of the Gaussian scheme (2.51e-4), the matching
/// target for the other two families.
double reference_power();

SchemeParams gauss();

/// power_matched solves the wide high-class sigma against reference_power()
/// (exact-moment power formula); otherwise the published literal is used.
SchemeParams mixture(double weight = 0.5, bool power_matched = true);

/// power_matched solves the high-class scale against reference_power();
/// otherwise the published literal is used.
SchemeParams laplace(bool power_matched = true);

/// The three study schemes with their export names (gauss, laplace,
/// mixture).
std::vector<NamedScheme> reference_schemes(double weight = 0.5,
                                           bool power_matched = true);

/// One study scheme by its export name ("gauss", "laplace", "mixture").
NamedScheme by_name(const std::string& name, double weight = 0.5,
                    bool power_matched = true);

/// Grid of the channel-noise sweep: 12 log-spaced values in [10^-5.2, 10^-4].
std::vector<double> sigma_grid();

/// Grid of the symbol-length sweep: {5, 10, ..., 40}.
std::vector<double> samples_grid();

/// Channel-noise sweep: 12 log-spaced sigma_w values spanning
/// [10^-5.2, 10^-4] at the reference symbol length.
SweepSpec sigma_sweep(std::uint64_t symbols_per_point, std::uint64_t master_seed);

/// Symbol-length sweep: N in {5, 10, ..., 40} at the reference sigma_w.
SweepSpec samples_sweep(std::uint64_t symbols_per_point, std::uint64_t master_seed);

} // namespace gqnm::presets
