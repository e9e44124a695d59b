#pragma once

#include <variant>

#include "gqnm/rng.hpp"

namespace gqnm {

/// Fidelity of fourth-moment bookkeeping for the two-Gaussian mixture.
/// Exact weights the component fourth moments by their mixing
/// probabilities; Simplified drops the weights and sums the component
/// terms, reproducing a coarser approximation that is sometimes quoted
/// for the balanced mixture (the two coincide only at weight 1/2 up to
/// the overall factor of two).
enum class MomentFidelity {
    Exact,
    Simplified,
};

/// Zero-mean Gaussian noise, parameterized by its standard deviation.
struct Gaussian {
    double sigma;

    explicit Gaussian(double sigma_in);
};

/// Zero-mean mixture of two Gaussian components: with probability
/// `weight` a draw comes from the narrow component (sigma0), otherwise
/// from the wide one (sigma1). Requires 0 < weight < 1 and sigma0 < sigma1.
struct TwoGaussianMixture {
    double weight;
    double sigma0;
    double sigma1;

    TwoGaussianMixture(double weight_in, double sigma0_in, double sigma1_in);
};

/// Zero-mean Laplacian noise with density exp(-|x|/scale) / (2 scale);
/// variance 2 scale^2.
struct Laplacian {
    double scale;

    explicit Laplacian(double scale_in);
};

using NoiseModel = std::variant<Gaussian, TwoGaussianMixture, Laplacian>;

/// One sample from the model. Consumes a fixed number of stream draws per
/// call (Gaussian 1, mixture 2, Laplacian 1) so replaying a stream always
/// reproduces the same sequence.
double draw(const NoiseModel& model, RngStream& rng);

/// Population variance (second central moment).
double variance(const NoiseModel& model);

/// Fourth central moment. `fidelity` only affects the mixture family.
double fourth_moment(const NoiseModel& model,
                     MomentFidelity fidelity = MomentFidelity::Exact);

} // namespace gqnm
