#include "gqnm/analytics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

#include "gqnm/errors.hpp"

namespace gqnm {

namespace {

void check_point(double sigma_w, std::size_t n) {
    if (!(std::isfinite(sigma_w) && sigma_w >= 0.0)) {
        throw InvalidInput("case moments: sigma_w must be finite and >= 0");
    }
    if (n == 0) {
        throw InvalidInput("case moments: n must be >= 1");
    }
}

bool all_gaussian(const SchemeParams& s) {
    return std::holds_alternative<Gaussian>(s.low()) &&
           std::holds_alternative<Gaussian>(s.high());
}

bool all_mixture(const SchemeParams& s) {
    return std::holds_alternative<TwoGaussianMixture>(s.low()) &&
           std::holds_alternative<TwoGaussianMixture>(s.high());
}

CaseMoments assemble(double mean, double var_r, double var_r_sq, std::size_t n) {
    return CaseMoments{
        .mean = mean,
        .variance = var_r,
        .stat_mean = mean * mean + var_r,
        .stat_variance = var_r_sq / static_cast<double>(n),
    };
}

// Shared two-case form for the mean bit. Thanks to the midpoint threshold,
// the printed two-case expression equals the four-case average exactly:
// 1 - Q((m_lo - th)/s) = Q((m_hi - th)/s) for each class s.
double mean_bit_bep(const SchemeParams& scheme, double sd_low_class,
                    double sd_high_class) {
    const double th = thresholds(scheme).mean;
    return 0.5 * (1.0 - q((scheme.mean_low() - th) / sd_low_class) +
                  q((scheme.mean_high() - th) / sd_high_class));
}

// Four-case quarter-weighted form for the variance bit.
template <typename CaseFn>
double variance_bit_bep(const SchemeParams& scheme, CaseFn&& moments_for) {
    const double th = thresholds(scheme).variance;
    auto z = [&](BitPair bits) {
        const CaseMoments cm = moments_for(bits);
        return (cm.stat_mean - th) / std::sqrt(cm.stat_variance);
    };
    return 0.25 * ((1.0 - q(z({false, false}))) + q(z({false, true})) +
                   (1.0 - q(z({true, false}))) + q(z({true, true})));
}

[[noreturn]] void throw_no_closed_form(const SchemeParams& scheme) {
    if (std::holds_alternative<Laplacian>(scheme.low()) ||
        std::holds_alternative<Laplacian>(scheme.high())) {
        throw UnsupportedTheory(
            "no closed-form error probabilities for Laplacian noise classes");
    }
    throw UnsupportedTheory(
        "closed-form error probabilities require both noise classes Gaussian or "
        "both two-Gaussian mixtures");
}

double mixture_weight_or_throw(const SchemeParams& scheme, const char* what) {
    const auto& lo = std::get<TwoGaussianMixture>(scheme.low());
    const auto& hi = std::get<TwoGaussianMixture>(scheme.high());
    if (lo.weight != hi.weight) {
        std::ostringstream msg;
        msg << what << ": the two mixture classes must share one weight (got "
            << lo.weight << " and " << hi.weight << ")";
        throw InvalidInput(msg.str());
    }
    return lo.weight;
}

void check_match_inputs(double target_power, double mean_low, double mean_high) {
    if (!(std::isfinite(target_power) && target_power > 0.0)) {
        throw InvalidInput("power match: target power must be finite and > 0");
    }
    if (!(std::isfinite(mean_low) && std::isfinite(mean_high))) {
        throw InvalidInput("power match: mean biases must be finite");
    }
}

[[noreturn]] void throw_infeasible(double min_power) {
    std::ostringstream msg;
    msg << "power match: target below the minimum achievable power " << min_power;
    throw InfeasiblePower(msg.str(), min_power);
}

} // namespace

double q(double x) {
    if (!std::isfinite(x)) {
        throw InvalidInput("q: argument must be finite");
    }
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

CaseMoments gaussian_case_moments(const SchemeParams& scheme, double sigma_w,
                                  BitPair bits, std::size_t n) {
    check_point(sigma_w, n);
    if (!all_gaussian(scheme)) {
        throw InvalidInput("gaussian_case_moments: both noise classes must be Gaussian");
    }
    const double m = case_mean(scheme, bits);
    const double var_r = sigma_w * sigma_w + case_tx_variance(scheme, bits);
    const double var_r_sq = 4.0 * m * m * var_r + 2.0 * var_r * var_r;
    return assemble(m, var_r, var_r_sq, n);
}

CaseMoments mixture_case_moments(const SchemeParams& scheme, double sigma_w,
                                 BitPair bits, std::size_t n,
                                 MomentFidelity fidelity) {
    check_point(sigma_w, n);
    if (!all_mixture(scheme)) {
        throw InvalidInput(
            "mixture_case_moments: both noise classes must be two-Gaussian mixtures");
    }
    const NoiseModel& model = case_model(scheme, bits);
    const double m = case_mean(scheme, bits);
    const double m2 = m * m;
    const double sw2 = sigma_w * sigma_w;
    const double y2 = variance(model);                  // E{Y^2}, transmit side
    const double y4 = fourth_moment(model, fidelity);   // E{Y^4}
    const double x2 = y2 + m2;                          // E{x^2}
    const double x4 = y4 + 6.0 * m2 * y2 + m2 * m2;     // E{x^4}, odd Y moments vanish
    const double r4 = x4 + 6.0 * x2 * sw2 + 3.0 * sw2 * sw2;
    const double var_r = sw2 + y2;
    const double stat_mean = m2 + var_r;
    const double var_r_sq = r4 - stat_mean * stat_mean;
    return assemble(m, var_r, var_r_sq, n);
}

bool closed_form_available(const SchemeParams& scheme) {
    return all_gaussian(scheme) || all_mixture(scheme);
}

double bep_b0(const SchemeParams& scheme, double sigma_w, std::size_t n,
              MeanStatVariance mean_stat) {
    check_point(sigma_w, n);
    if (all_gaussian(scheme)) {
        // The Gaussian form always averages over the symbol.
        const double s_lo =
            std::sqrt(gaussian_case_moments(scheme, sigma_w, {false, false}, n).variance /
                      static_cast<double>(n));
        const double s_hi =
            std::sqrt(gaussian_case_moments(scheme, sigma_w, {false, true}, n).variance /
                      static_cast<double>(n));
        return mean_bit_bep(scheme, s_lo, s_hi);
    }
    if (all_mixture(scheme)) {
        const double divisor =
            (mean_stat == MeanStatVariance::Averaged) ? static_cast<double>(n) : 1.0;
        const double s_lo = std::sqrt(
            mixture_case_moments(scheme, sigma_w, {false, false}, n).variance / divisor);
        const double s_hi = std::sqrt(
            mixture_case_moments(scheme, sigma_w, {false, true}, n).variance / divisor);
        return mean_bit_bep(scheme, s_lo, s_hi);
    }
    throw_no_closed_form(scheme);
}

double bep_b1(const SchemeParams& scheme, double sigma_w, std::size_t n,
              MomentFidelity fidelity) {
    check_point(sigma_w, n);
    if (all_gaussian(scheme)) {
        return variance_bit_bep(scheme, [&](BitPair bits) {
            return gaussian_case_moments(scheme, sigma_w, bits, n);
        });
    }
    if (all_mixture(scheme)) {
        return variance_bit_bep(scheme, [&](BitPair bits) {
            return mixture_case_moments(scheme, sigma_w, bits, n, fidelity);
        });
    }
    throw_no_closed_form(scheme);
}

TheoryBep bep_total(const SchemeParams& scheme, double sigma_w, std::size_t n,
                    MeanStatVariance mean_stat, MomentFidelity fidelity) {
    const double p0 = bep_b0(scheme, sigma_w, n, mean_stat);
    const double p1 = bep_b1(scheme, sigma_w, n, fidelity);
    return TheoryBep{.p_b0 = p0, .p_b1 = p1, .p_b = 0.5 * (p0 + p1)};
}

double transmit_power(const SchemeParams& scheme, MomentFidelity fidelity) {
    const double mean_part = 0.5 * (scheme.mean_low() * scheme.mean_low() +
                                    scheme.mean_high() * scheme.mean_high());
    if (fidelity == MomentFidelity::Simplified && all_mixture(scheme)) {
        const double w = mixture_weight_or_throw(scheme, "transmit_power(Simplified)");
        const auto& lo = std::get<TwoGaussianMixture>(scheme.low());
        const auto& hi = std::get<TwoGaussianMixture>(scheme.high());
        // Regrouped printed form: the weight multiplies the low-class pair.
        const double noise_part =
            0.5 * (w * (lo.sigma0 * lo.sigma0 + lo.sigma1 * lo.sigma1) +
                   (1.0 - w) * (hi.sigma0 * hi.sigma0 + hi.sigma1 * hi.sigma1));
        return mean_part + noise_part;
    }
    return mean_part + 0.5 * (variance(scheme.low()) + variance(scheme.high()));
}

double match_power_laplace(double target_power, double lambda0, double mean_low,
                           double mean_high) {
    check_match_inputs(target_power, mean_low, mean_high);
    if (!(std::isfinite(lambda0) && lambda0 > 0.0)) {
        throw InvalidInput("match_power_laplace: lambda0 must be finite and > 0");
    }
    const double min_power =
        0.5 * (mean_low * mean_low + mean_high * mean_high) + lambda0 * lambda0;
    if (!(target_power > min_power)) {
        throw_infeasible(min_power);
    }
    return std::sqrt(target_power - min_power);
}

double match_power_mixture(double target_power, double weight, double sigma0_low,
                           double sigma1_low, double sigma0_high, double mean_low,
                           double mean_high, MomentFidelity fidelity) {
    check_match_inputs(target_power, mean_low, mean_high);
    if (!(std::isfinite(weight) && weight > 0.0 && weight < 1.0)) {
        throw InvalidInput("match_power_mixture: weight must lie strictly in (0,1)");
    }
    for (double s : {sigma0_low, sigma1_low, sigma0_high}) {
        if (!(std::isfinite(s) && s > 0.0)) {
            throw InvalidInput("match_power_mixture: sigmas must be finite and > 0");
        }
    }
    const double mean_part =
        0.5 * (mean_low * mean_low + mean_high * mean_high);
    // Power with the free sigma at zero; what remains must come from it.
    const double fixed_noise_part =
        (fidelity == MomentFidelity::Simplified)
            ? 0.5 * (weight * (sigma0_low * sigma0_low + sigma1_low * sigma1_low) +
                     (1.0 - weight) * sigma0_high * sigma0_high)
            : 0.5 * (weight * sigma0_low * sigma0_low +
                     (1.0 - weight) * sigma1_low * sigma1_low +
                     weight * sigma0_high * sigma0_high);
    const double min_power = mean_part + fixed_noise_part;
    if (!(target_power > min_power)) {
        throw_infeasible(min_power);
    }
    return std::sqrt(2.0 * (target_power - min_power) / (1.0 - weight));
}

double match_weight_mixture(double target_power, double sigma0_low,
                            double sigma1_low, double sigma0_high,
                            double sigma1_high, double mean_low, double mean_high,
                            MomentFidelity fidelity) {
    check_match_inputs(target_power, mean_low, mean_high);
    for (double s : {sigma0_low, sigma1_low, sigma0_high, sigma1_high}) {
        if (!(std::isfinite(s) && s > 0.0)) {
            throw InvalidInput("match_weight_mixture: sigmas must be finite and > 0");
        }
    }
    const double mean_part =
        0.5 * (mean_low * mean_low + mean_high * mean_high);
    double at_zero;  // power as weight -> 0
    double at_one;   // power as weight -> 1
    if (fidelity == MomentFidelity::Simplified) {
        at_zero = mean_part +
                  0.5 * (sigma0_high * sigma0_high + sigma1_high * sigma1_high);
        at_one = mean_part +
                 0.5 * (sigma0_low * sigma0_low + sigma1_low * sigma1_low);
    } else {
        at_zero = mean_part +
                  0.5 * (sigma1_low * sigma1_low + sigma1_high * sigma1_high);
        at_one = mean_part +
                 0.5 * (sigma0_low * sigma0_low + sigma0_high * sigma0_high);
    }
    if (at_zero == at_one) {
        throw InvalidInput("match_weight_mixture: power does not depend on the weight "
                           "for these sigmas");
    }
    const double lo = std::min(at_zero, at_one);
    const double hi = std::max(at_zero, at_one);
    if (!(target_power > lo && target_power < hi)) {
        throw_infeasible(target_power <= lo ? lo : hi);
    }
    return (target_power - at_zero) / (at_one - at_zero);
}

} // namespace gqnm
