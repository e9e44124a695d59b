#pragma once

#include <cstddef>

#include "gqnm/modem.hpp"
#include "gqnm/noise.hpp"

namespace gqnm {

/// Variance assigned to the sample-mean statistic inside the mixture-family
/// closed form for the mean bit. Averaged divides the per-sample variance
/// by the symbol length (the distribution of an N-sample average, and the
/// only mode that matches simulation); PerDraw keeps the single-sample
/// variance. The Gaussian-family closed form always averages.
enum class MeanStatVariance {
    Averaged,
    PerDraw,
};

/// Received-signal moments for one bit case, including the distribution of
/// the raw second-moment detection statistic over an N-sample symbol.
struct CaseMoments {
    double mean;          // of one received sample
    double variance;      // of one received sample (channel noise included)
    double stat_mean;     // of the second-moment statistic; = mean^2 + variance
    double stat_variance; // of the second-moment statistic; scales as 1/N
};

/// Closed-form error probabilities; total is the mean of the two sub-bits.
struct TheoryBep {
    double p_b0;
    double p_b1;
    double p_b;
};

/// Gaussian tail probability Q(x) = P(Z > x) for standard normal Z.
/// Absolute error <= 1e-12 on [-8, 8]; relative error <= 1e-8 out to the
/// underflow edge of double (values below ~1e-308 flush to subnormals/zero).
double q(double x);

/// Moments for a scheme whose noise classes are both Gaussian.
CaseMoments gaussian_case_moments(const SchemeParams& scheme, double sigma_w,
                                  BitPair bits, std::size_t n);

/// Moments for a scheme whose noise classes are both two-Gaussian mixtures.
/// The second-moment statistic's variance is built from the mixture fourth
/// moment at the requested fidelity.
CaseMoments mixture_case_moments(const SchemeParams& scheme, double sigma_w,
                                 BitPair bits, std::size_t n,
                                 MomentFidelity fidelity = MomentFidelity::Exact);

/// True when closed-form error probabilities exist for the scheme's noise
/// family (both classes Gaussian, or both two-Gaussian mixtures).
bool closed_form_available(const SchemeParams& scheme);

/// Closed-form error probability of the mean bit. `mean_stat` only affects
/// the mixture family (see MeanStatVariance).
double bep_b0(const SchemeParams& scheme, double sigma_w, std::size_t n,
              MeanStatVariance mean_stat = MeanStatVariance::Averaged);

/// Closed-form error probability of the variance bit, from the Gaussian
/// approximation of the second-moment statistic.
double bep_b1(const SchemeParams& scheme, double sigma_w, std::size_t n,
              MomentFidelity fidelity = MomentFidelity::Exact);

TheoryBep bep_total(const SchemeParams& scheme, double sigma_w, std::size_t n,
                    MeanStatVariance mean_stat = MeanStatVariance::Averaged,
                    MomentFidelity fidelity = MomentFidelity::Exact);

/// Average transmit power E{x^2} over the four equiprobable bit cases.
/// Simplified fidelity reproduces a coarser printed form of the mixture
/// power that regroups the component weights by variance class; it
/// requires both classes to share one mixing weight and coincides with
/// Exact at weight 1/2 and for non-mixture families.
double transmit_power(const SchemeParams& scheme,
                      MomentFidelity fidelity = MomentFidelity::Exact);

/// Solve the Laplacian high-class scale so the scheme's transmit power hits
/// target_power. Throws InfeasiblePower when the target is at or below the
/// power already contributed by the fixed parameters.
double match_power_laplace(double target_power, double lambda0, double mean_low,
                           double mean_high);

/// Solve the mixture high-class wide sigma (the last free parameter) so the
/// scheme's transmit power hits target_power under the chosen fidelity's
/// power formula.
double match_power_mixture(double target_power, double weight, double sigma0_low,
                           double sigma1_low, double sigma0_high, double mean_low,
                           double mean_high,
                           MomentFidelity fidelity = MomentFidelity::Exact);

/// Diagnostic inverse: the mixing weight that would hit target_power with
/// every sigma fixed. The power is linear in the weight, so this is a
/// one-step solve; a target outside the reachable power interval throws
/// InfeasiblePower.
double match_weight_mixture(double target_power, double sigma0_low,
                            double sigma1_low, double sigma0_high,
                            double sigma1_high, double mean_low, double mean_high,
                            MomentFidelity fidelity = MomentFidelity::Exact);

} // namespace gqnm
