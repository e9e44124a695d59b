#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "gqnm/errors.hpp"

namespace gqnm {

namespace detail {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Stafford "mix13" finalizer. Bijective on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Inverse of the standard normal CDF (Wichura's PPND16 rational
/// approximation, |error| < 1e-15 over (0,1)).
inline double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw InvalidInput("inverse_normal_cdf: p must lie strictly in (0,1)");
    }
    const double q = p - 0.5;
    if (q >= -0.425 && q <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -x : x;
}

} // namespace detail

/// Counter-based pseudorandom stream.
///
/// The stream state is a 64-bit counter seeded by hashing
/// (master_seed, stream_index); each draw advances the counter by a fixed
/// odd constant and finalizes it with a strong bijective mixer. Distinct
/// stream indices under one master seed yield statistically independent
/// streams, so work can be partitioned per symbol without any coordination
/// between workers: stream k always produces the same values no matter
/// which thread consumes it.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0) noexcept
        : state_(detail::mix64(detail::mix64(master_seed + detail::kGoldenGamma) +
                               stream_index)) {}

    std::uint64_t next_u64() noexcept {
        state_ += detail::kGoldenGamma;
        return detail::mix64(state_);
    }

    /// Uniform draw strictly inside (0,1): 53-bit mantissa, half-ulp offset
    /// keeps both endpoints unreachable so inverse-CDF transforms never see
    /// log(0) or an infinite normal quantile.
    double next_unit() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw via the inverse CDF. One uniform per variate,
    /// which keeps the stream consumption schedule deterministic.
    double next_normal() noexcept {
        return detail::inverse_normal_cdf(next_unit());
    }

private:
    std::uint64_t state_;
};

} // namespace gqnm
