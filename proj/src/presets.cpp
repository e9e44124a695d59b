#include "gqnm/presets.hpp"

#include <cmath>

#include "gqnm/analytics.hpp"
#include "gqnm/errors.hpp"

namespace gqnm::presets {

double reference_power() {
    return transmit_power(gauss());
}

SchemeParams gauss() {
    return SchemeParams(kMeanLow, kMeanHigh, Gaussian(kGaussSigmaLow),
                        Gaussian(kGaussSigmaHigh), kSamplesPerSymbol);
}

SchemeParams mixture(double weight, bool power_matched) {
    const double sigma1_high =
        power_matched
            ? match_power_mixture(reference_power(), weight, kMixtureSigma0Low,
                                  kMixtureSigma1Low, kMixtureSigma0High, kMeanLow,
                                  kMeanHigh, MomentFidelity::Exact)
            : kMixtureSigma1HighLiteral;
    return SchemeParams(
        kMeanLow, kMeanHigh,
        TwoGaussianMixture(weight, kMixtureSigma0Low, kMixtureSigma1Low),
        TwoGaussianMixture(weight, kMixtureSigma0High, sigma1_high),
        kSamplesPerSymbol);
}

SchemeParams laplace(bool power_matched) {
    const double scale_high =
        power_matched
            ? match_power_laplace(reference_power(), kLaplaceScaleLow, kMeanLow,
                                  kMeanHigh)
            : kLaplaceScaleHighLiteral;
    return SchemeParams(kMeanLow, kMeanHigh, Laplacian(kLaplaceScaleLow),
                        Laplacian(scale_high), kSamplesPerSymbol);
}

std::vector<NamedScheme> reference_schemes(double weight, bool power_matched) {
    return {
        NamedScheme{.name = "gauss", .params = gauss()},
        NamedScheme{.name = "laplace", .params = laplace(power_matched)},
        NamedScheme{.name = "mixture", .params = mixture(weight, power_matched)},
    };
}

NamedScheme by_name(const std::string& name, double weight, bool power_matched) {
    if (name == "gauss") return {.name = name, .params = gauss()};
    if (name == "laplace") return {.name = name, .params = laplace(power_matched)};
    if (name == "mixture") return {.name = name, .params = mixture(weight, power_matched)};
    throw InvalidInput("unknown scheme '" + name +
                       "' (expected gauss, laplace, or mixture)");
}

std::vector<double> sigma_grid() {
    std::vector<double> grid;
    grid.reserve(12);
    for (int k = 0; k < 12; ++k) {
        grid.push_back(std::pow(10.0, -5.2 + 1.2 * k / 11.0));
    }
    return grid;
}

std::vector<double> samples_grid() {
    return {5, 10, 15, 20, 25, 30, 35, 40};
}

SweepSpec sigma_sweep(std::uint64_t symbols_per_point, std::uint64_t master_seed) {
    return SweepSpec(SweepVariable::SigmaW, sigma_grid(), reference_schemes(),
                     kSigmaW, symbols_per_point, master_seed);
}

SweepSpec samples_sweep(std::uint64_t symbols_per_point, std::uint64_t master_seed) {
    return SweepSpec(SweepVariable::SamplesN, samples_grid(), reference_schemes(),
                     kSigmaW, symbols_per_point, master_seed);
}

} // namespace gqnm::presets
