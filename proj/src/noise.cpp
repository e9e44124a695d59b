#include "gqnm/noise.hpp"

#include <cmath>

#include "gqnm/errors.hpp"

namespace gqnm {

Gaussian::Gaussian(double sigma_in) : sigma(sigma_in) {
    if (!(std::isfinite(sigma) && sigma > 0.0)) {
        throw InvalidInput("Gaussian: sigma must be finite and > 0");
    }
}

TwoGaussianMixture::TwoGaussianMixture(double weight_in, double sigma0_in,
                                       double sigma1_in)
    : weight(weight_in), sigma0(sigma0_in), sigma1(sigma1_in) {
    if (!(std::isfinite(weight) && weight > 0.0 && weight < 1.0)) {
        throw InvalidInput("TwoGaussianMixture: weight must lie strictly in (0,1)");
    }
    if (!(std::isfinite(sigma0) && sigma0 > 0.0) ||
        !(std::isfinite(sigma1) && sigma1 > 0.0)) {
        throw InvalidInput("TwoGaussianMixture: sigmas must be finite and > 0");
    }
    if (!(sigma0 < sigma1)) {
        throw InvalidInput(
            "TwoGaussianMixture: requires sigma0 < sigma1 (narrow component first)");
    }
}

Laplacian::Laplacian(double scale_in) : scale(scale_in) {
    if (!(std::isfinite(scale) && scale > 0.0)) {
        throw InvalidInput("Laplacian: scale must be finite and > 0");
    }
}

double draw(const NoiseModel& model, RngStream& rng) {
    struct Visitor {
        RngStream& rng;

        double operator()(const Gaussian& g) const {
            return g.sigma * rng.next_normal();
        }

        double operator()(const TwoGaussianMixture& m) const {
            // Component selector first, then the variate: fixed two-draw
            // schedule regardless of which component is hit.
            const double u = rng.next_unit();
            const double sigma = (u < m.weight) ? m.sigma0 : m.sigma1;
            return sigma * rng.next_normal();
        }

        double operator()(const Laplacian& l) const {
            // Inverse CDF: median-split keeps both tails exact.
            const double u = rng.next_unit();
            return (u < 0.5) ? l.scale * std::log(2.0 * u)
                             : -l.scale * std::log(2.0 * (1.0 - u));
        }
    };
    return std::visit(Visitor{rng}, model);
}

double variance(const NoiseModel& model) {
    struct Visitor {
        double operator()(const Gaussian& g) const { return g.sigma * g.sigma; }

        double operator()(const TwoGaussianMixture& m) const {
            return m.weight * m.sigma0 * m.sigma0 +
                   (1.0 - m.weight) * m.sigma1 * m.sigma1;
        }

        double operator()(const Laplacian& l) const {
            return 2.0 * l.scale * l.scale;
        }
    };
    return std::visit(Visitor{}, model);
}

double fourth_moment(const NoiseModel& model, MomentFidelity fidelity) {
    struct Visitor {
        MomentFidelity fidelity;

        double operator()(const Gaussian& g) const {
            const double v = g.sigma * g.sigma;
            return 3.0 * v * v;
        }

        double operator()(const TwoGaussianMixture& m) const {
            const double s0_4 = m.sigma0 * m.sigma0 * m.sigma0 * m.sigma0;
            const double s1_4 = m.sigma1 * m.sigma1 * m.sigma1 * m.sigma1;
            if (fidelity == MomentFidelity::Simplified) {
                return 3.0 * (s0_4 + s1_4);
            }
            return 3.0 * (m.weight * s0_4 + (1.0 - m.weight) * s1_4);
        }

        double operator()(const Laplacian& l) const {
            const double s2 = l.scale * l.scale;
            return 24.0 * s2 * s2;
        }
    };
    return std::visit(Visitor{fidelity}, model);
}

} // namespace gqnm
