#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "gqnm/analytics.hpp"
#include "gqnm/errors.hpp"
#include "gqnm/modem.hpp"
#include "gqnm/noise.hpp"
#include "gqnm/presets.hpp"

#include "oracles.hpp"

using namespace gqnm;

namespace {

constexpr double kSigmaRef = 2e-5;

bool close_rel(double a, double b, double rel) {
    return std::fabs(a - b) <= rel * std::fabs(b);
}

SchemeParams mixed_families() {
    return SchemeParams(1e-3, 1e-2, NoiseModel{Gaussian(1e-3)},
                        NoiseModel{Laplacian(14.2e-3)}, 10);
}

} // namespace

TEST_CASE("q matches frozen high-precision values inside [-8, 8]") {
    struct Point {
        double x;
        double value;
    };
    const Point table[] = {
        {0.0, 0.5},
        {0.25, 0.40129367431707628},
        {0.5, 0.3085375387259869},
        {1.0, 0.15865525393145705},
        {3.7, 0.00010779973347738834},
        {-0.1, 0.53982783727702898},
        {-3.0, 0.99865010196836991},
        {5.5, 1.8989562465887719e-8},
        {8.0, 6.2209605742717841e-16},
    };
    for (const Point& p : table) {
        CHECK(std::fabs(q(p.x) - p.value) <= 1e-12);
    }
}

TEST_CASE("q dense comparison against the long double oracle") {
    // acceptance-grade grid inside [-8, 8]: absolute error <= 1e-12
    for (int i = 0; i <= 4000; ++i) {
        const double x = -8.0 + 16.0 * i / 4000.0;
        const double ref = static_cast<double>(oracle::q_reference(x));
        CHECK(std::fabs(q(x) - ref) <= 1e-12);
    }
}

TEST_CASE("q deep-tail relative accuracy down to the underflow edge") {
    // below ~1e-308 doubles go subnormal, so the relative contract stops at
    // x ~ 37.5; beyond that the function may only underflow gracefully
    const double frozen_x[] = {12.0, 25.0, 37.5};
    const double frozen_q[] = {1.776482112077679e-33, 3.0566967063825609e-138,
                               4.6053530095819548e-308};
    for (int i = 0; i < 3; ++i) {
        CHECK(close_rel(q(frozen_x[i]), frozen_q[i], 1e-12));
    }
    for (int i = 0; i <= 200; ++i) {
        const double x = 8.0 + (37.5 - 8.0) * i / 200.0;
        const double ref = static_cast<double>(oracle::q_reference(x));
        CHECK(close_rel(q(x), ref, 1e-8));
    }
    for (const double x : {38.0, 40.0, 100.0}) {
        const double v = q(x);
        CHECK(v >= 0.0);
        CHECK(v < 1e-300);
    }
    CHECK(q(40.0) == 0.0); // 3.66e-350 is not representable in double
}

TEST_CASE("q symmetry and monotonicity") {
    // Below x of about -8.2 the value saturates at 1.0 in double precision,
    // so strict decrease is only checkable once the tail is representable.
    double prev = q(-10.0);
    for (int i = 1; i <= 1000; ++i) {
        const double x = -10.0 + 20.0 * i / 1000.0;
        CHECK(std::fabs(q(x) + q(-x) - 1.0) <= 1e-12);
        const double v = q(x);
        CHECK(v <= prev);
        if (x > -7.5) CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(q(std::nan("")), InvalidInput);
    CHECK_THROWS_AS(q(std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST_CASE("Gaussian case moments at the study point") {
    const SchemeParams s = presets::gauss();
    const CaseMoments c00 =
        gaussian_case_moments(s, kSigmaRef, {false, false}, 10);
    CHECK(close_rel(c00.mean, 1e-3, 1e-15));
    CHECK(close_rel(c00.variance, 1.0004e-6, 1e-12));
    CHECK(close_rel(c00.stat_mean, 2.0004e-6, 1e-12));
    CHECK(close_rel(c00.stat_variance, 6.00320032e-13, 1e-12));

    const CaseMoments c01 =
        gaussian_case_moments(s, kSigmaRef, {false, true}, 10);
    CHECK(close_rel(c01.variance, 4.000004e-4, 1e-12));
    CHECK(close_rel(c01.stat_mean, 4.010004e-4, 1e-12));
    CHECK(close_rel(c01.stat_variance, 3.2160064160032e-8, 1e-12));

    const CaseMoments c10 = gaussian_case_moments(s, kSigmaRef, {true, false}, 10);
    CHECK(close_rel(c10.mean, 1e-2, 1e-15));
    CHECK(c10.variance == c00.variance);

    // n only rescales the statistic's variance
    const CaseMoments c00_40 =
        gaussian_case_moments(s, kSigmaRef, {false, false}, 40);
    CHECK(close_rel(c00_40.stat_variance, c00.stat_variance / 4.0, 1e-14));

    CHECK_THROWS_AS(gaussian_case_moments(s, -1.0, {false, false}, 10),
                    InvalidInput);
    CHECK_THROWS_AS(gaussian_case_moments(s, kSigmaRef, {false, false}, 0),
                    InvalidInput);
    CHECK_THROWS_AS(
        gaussian_case_moments(presets::mixture(), kSigmaRef, {false, false}, 10),
        InvalidInput);
}

TEST_CASE("mixture case moments at the catalogued point") {
    const SchemeParams s = presets::mixture(0.5, false);
    const CaseMoments c00 =
        mixture_case_moments(s, kSigmaRef, {false, false}, 10);
    CHECK(close_rel(c00.variance, 6.254e-7, 1e-12));
    CHECK(close_rel(c00.stat_mean, 1.6254e-6, 1e-12));
    CHECK(close_rel(c00.stat_variance, 3.70572532e-13, 1e-12));

    const CaseMoments c11 = mixture_case_moments(s, kSigmaRef, {true, true}, 10);
    CHECK(close_rel(c11.variance, 2.330004e-4, 1e-12));
    CHECK(close_rel(c11.stat_mean, 3.330004e-4, 1e-12));
    CHECK(close_rel(c11.stat_variance, 3.3157053280032e-8, 1e-12));

    const CaseMoments c00s = mixture_case_moments(
        s, kSigmaRef, {false, false}, 10, MomentFidelity::Simplified);
    CHECK(close_rel(c00s.stat_variance, 5.29947532e-13, 1e-12));
    CHECK(c00s.variance == c00.variance);
    CHECK(c00s.stat_mean == c00.stat_mean);

    CHECK_THROWS_AS(
        mixture_case_moments(presets::gauss(), kSigmaRef, {false, false}, 10),
        InvalidInput);
}

TEST_CASE("a near-degenerate mixture reproduces the Gaussian moments") {
    // weight ~ 1 and sigma1 ~ sigma0 squeeze the mixture onto one Gaussian
    const double sigma = 1e-3;
    const SchemeParams g(1e-3, 1e-2, NoiseModel{Gaussian(sigma)},
                         NoiseModel{Gaussian(20e-3)}, 10);
    const SchemeParams m(
        1e-3, 1e-2,
        NoiseModel{TwoGaussianMixture(1.0 - 1e-12, sigma, sigma * (1.0 + 1e-9))},
        NoiseModel{TwoGaussianMixture(1.0 - 1e-12, 20e-3, 20e-3 * (1.0 + 1e-9))},
        10);
    for (const bool b0 : {false, true}) {
        for (const bool b1 : {false, true}) {
            const CaseMoments a =
                gaussian_case_moments(g, kSigmaRef, {b0, b1}, 10);
            const CaseMoments b = mixture_case_moments(m, kSigmaRef, {b0, b1}, 10);
            CHECK(close_rel(b.variance, a.variance, 1e-6));
            CHECK(close_rel(b.stat_mean, a.stat_mean, 1e-6));
            CHECK(close_rel(b.stat_variance, a.stat_variance, 1e-6));
        }
    }
}

TEST_CASE("closed-form availability by family") {
    CHECK(closed_form_available(presets::gauss()));
    CHECK(closed_form_available(presets::mixture()));
    CHECK_FALSE(closed_form_available(presets::laplace()));
    CHECK_FALSE(closed_form_available(mixed_families()));
}

TEST_CASE("frozen closed-form error probabilities: Gaussian study point") {
    const SchemeParams s = presets::gauss();
    CHECK(close_rel(bep_b0(s, kSigmaRef, 10), 0.119191736093293, 1e-12));
    CHECK(close_rel(bep_b1(s, kSigmaRef, 10), 0.0543960020292529, 1e-12));
    const TheoryBep t = bep_total(s, kSigmaRef, 10);
    CHECK(close_rel(t.p_b, 0.086793869061273, 1e-12));
    CHECK(t.p_b == doctest::Approx(0.5 * (t.p_b0 + t.p_b1)).epsilon(1e-15));

    // the mean statistic of a Gaussian scheme is exactly normal, so the
    // per-draw/averaged distinction does not exist for it
    CHECK(bep_b0(s, kSigmaRef, 10, MeanStatVariance::Averaged) ==
          bep_b0(s, kSigmaRef, 10, MeanStatVariance::PerDraw));
    // and the mixture fidelity switch has nothing to act on
    CHECK(bep_b1(s, kSigmaRef, 10, MomentFidelity::Simplified) ==
          bep_b1(s, kSigmaRef, 10, MomentFidelity::Exact));
}

TEST_CASE("frozen closed-form error probabilities: catalogued mixture") {
    const SchemeParams s = presets::mixture(0.5, false);
    CHECK(close_rel(bep_b0(s, kSigmaRef, 10, MeanStatVariance::Averaged),
                    0.0878013393634425, 1e-12));
    CHECK(close_rel(bep_b0(s, kSigmaRef, 10, MeanStatVariance::PerDraw),
                    0.192035800992666, 1e-12));
    CHECK(close_rel(bep_b1(s, kSigmaRef, 10, MomentFidelity::Exact),
                    0.0856367636627426, 1e-12));
    CHECK(close_rel(bep_b1(s, kSigmaRef, 10, MomentFidelity::Simplified),
                    0.124944970709142, 1e-12));
}

TEST_CASE("frozen closed-form error probabilities: power-matched mixture") {
    const SchemeParams s = presets::mixture(0.5, true);
    CHECK(close_rel(bep_b0(s, kSigmaRef, 10), 0.11924335618736, 1e-12));
    CHECK(close_rel(bep_b0(s, kSigmaRef, 10, MeanStatVariance::PerDraw),
                    0.205515341548877, 1e-12));
    CHECK(close_rel(bep_b1(s, kSigmaRef, 10), 0.0975224986132473, 1e-12));
    CHECK(close_rel(bep_b1(s, kSigmaRef, 10, MomentFidelity::Simplified),
                    0.137666183622405, 1e-12));
}

TEST_CASE("equal mean biases give a coin-flip mean bit") {
    const SchemeParams d = SchemeParams::degenerate(
        1e-3, NoiseModel{Gaussian(1e-3)}, NoiseModel{Gaussian(20e-3)}, 10);
    CHECK(bep_b0(d, kSigmaRef, 10) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("theory declines with N and ignores sigma_w at study scale") {
    for (const SchemeParams& s : {presets::gauss(), presets::mixture()}) {
        double prev = 1.0;
        for (std::size_t n = 5; n <= 40; ++n) {
            const double v = bep_b1(s, kSigmaRef, n);
            CHECK(v < prev);
            prev = v;
        }
        double lo0 = 1.0, hi0 = 0.0, lo1 = 1.0, hi1 = 0.0;
        for (const double sw : presets::sigma_grid()) {
            const TheoryBep t = bep_total(s, sw, 10);
            lo0 = std::min(lo0, t.p_b0);
            hi0 = std::max(hi0, t.p_b0);
            lo1 = std::min(lo1, t.p_b1);
            hi1 = std::max(hi1, t.p_b1);
        }
        CHECK((hi0 - lo0) / lo0 < 0.01);
        CHECK((hi1 - lo1) / lo1 < 0.01);
    }
}

TEST_CASE("families without a closed form are refused") {
    CHECK_THROWS_AS(bep_b0(presets::laplace(), kSigmaRef, 10), UnsupportedTheory);
    CHECK_THROWS_AS(bep_b1(presets::laplace(), kSigmaRef, 10), UnsupportedTheory);
    CHECK_THROWS_AS(bep_total(presets::laplace(), kSigmaRef, 10),
                    UnsupportedTheory);
    CHECK_THROWS_AS(bep_total(mixed_families(), kSigmaRef, 10), UnsupportedTheory);
}

TEST_CASE("transmit power of the study schemes") {
    CHECK(close_rel(transmit_power(presets::gauss()), 2.51e-4, 1e-12));
    CHECK(close_rel(transmit_power(presets::laplace(false)), 2.5215e-4, 1e-12));
    // catalogued high parameters sit within 0.5% of the Gaussian power for
    // the Laplacian pair, but not for the mixture pair
    CHECK(std::fabs(transmit_power(presets::laplace(false)) - 2.51e-4) /
              2.51e-4 <
          0.005);
    CHECK(close_rel(transmit_power(presets::mixture(0.5, false)), 1.673125e-4,
                    1e-12));

    // power-matched variants land exactly on the Gaussian power
    CHECK(close_rel(transmit_power(presets::laplace()), 2.51e-4, 1e-12));
    CHECK(close_rel(transmit_power(presets::mixture()), 2.51e-4, 1e-12));
}

TEST_CASE("simplified power model groups per class and needs one weight") {
    // at weight 0.5 both groupings coincide
    const SchemeParams even = presets::mixture(0.5, false);
    CHECK(transmit_power(even, MomentFidelity::Simplified) ==
          doctest::Approx(transmit_power(even)).epsilon(1e-14));

    // away from 0.5 they differ in a known way
    const SchemeParams skew = presets::mixture(0.3, false);
    CHECK(close_rel(transmit_power(skew, MomentFidelity::Exact), 2.089875e-4,
                    1e-12));
    CHECK(close_rel(transmit_power(skew, MomentFidelity::Simplified),
                    2.137875e-4, 1e-12));

    // mismatched weights across the classes break the simplified grouping
    const SchemeParams mismatched(
        1e-3, 1e-2, NoiseModel{TwoGaussianMixture(0.3, 5e-4, 1e-3)},
        NoiseModel{TwoGaussianMixture(0.5, 5e-3, 21e-3)}, 10);
    CHECK_NOTHROW(transmit_power(mismatched, MomentFidelity::Exact));
    CHECK_THROWS_AS(transmit_power(mismatched, MomentFidelity::Simplified),
                    InvalidInput);
}

TEST_CASE("Laplacian power solve") {
    const double lambda1 = match_power_laplace(2.51e-4, 1e-4, 1e-3, 1e-2);
    CHECK(close_rel(lambda1, 0.0141594491418275167, 1e-12));
    // within 1% of the catalogued 14.2e-3
    CHECK(std::fabs(lambda1 - 14.2e-3) / 14.2e-3 < 0.01);

    // round trip to 1e-12 relative
    const SchemeParams solved(1e-3, 1e-2, NoiseModel{Laplacian(1e-4)},
                              NoiseModel{Laplacian(lambda1)}, 10);
    CHECK(close_rel(transmit_power(solved), 2.51e-4, 1e-12));
    const double again = match_power_laplace(transmit_power(solved), 1e-4, 1e-3, 1e-2);
    CHECK(close_rel(again, lambda1, 1e-12));

    CHECK_THROWS_AS(match_power_laplace(2.51e-4, -1e-4, 1e-3, 1e-2),
                    InvalidInput);
    CHECK_THROWS_AS(match_power_laplace(0.0, 1e-4, 1e-3, 1e-2), InvalidInput);
}

TEST_CASE("infeasible power targets carry the achievable floor") {
    // minimum power: mean part + lambda0^2 = 5.05e-5 + 1e-8
    try {
        match_power_laplace(1e-5, 1e-4, 1e-3, 1e-2);
        FAIL("expected InfeasiblePower");
    } catch (const InfeasiblePower& e) {
        CHECK(close_rel(e.achievable_power(), 5.05e-5 + 1e-8, 1e-12));
    }
    CHECK_THROWS_AS(
        match_power_mixture(1e-5, 0.5, 5e-4, 1e-3, 5e-3, 1e-3, 1e-2),
        InfeasiblePower);
}

TEST_CASE("mixture power solve") {
    const double s1h = match_power_mixture(2.51e-4, 0.5, 5e-4, 1e-3, 5e-3,
                                           1e-3, 1e-2);
    CHECK(close_rel(s1h, 0.02785228895441091, 1e-12));

    const SchemeParams solved(
        1e-3, 1e-2, NoiseModel{TwoGaussianMixture(0.5, 5e-4, 1e-3)},
        NoiseModel{TwoGaussianMixture(0.5, 5e-3, s1h)}, 10);
    CHECK(close_rel(transmit_power(solved), 2.51e-4, 1e-12));
    const double again = match_power_mixture(transmit_power(solved), 0.5, 5e-4,
                                             1e-3, 5e-3, 1e-3, 1e-2);
    CHECK(close_rel(again, s1h, 1e-12));

    CHECK_THROWS_AS(
        match_power_mixture(2.51e-4, 1.5, 5e-4, 1e-3, 5e-3, 1e-3, 1e-2),
        InvalidInput);
    CHECK_THROWS_AS(
        match_power_mixture(2.51e-4, 0.5, -5e-4, 1e-3, 5e-3, 1e-3, 1e-2),
        InvalidInput);
}

TEST_CASE("weight diagnostic for the catalogued mixture parameters") {
    const double w_simplified =
        match_weight_mixture(2.51e-4, 5e-4, 1e-3, 5e-3, 21e-3, 1e-3, 1e-2,
                             MomentFidelity::Simplified);
    CHECK(close_rel(w_simplified, 0.13986013986013986, 1e-12));

    const double w_exact = match_weight_mixture(2.51e-4, 5e-4, 1e-3, 5e-3,
                                                21e-3, 1e-3, 1e-2);
    CHECK(close_rel(w_exact, 0.09838032393521296, 1e-12));

    // round trip: power at the solved weight hits the target (power is
    // affine in the weight under both fidelities)
    for (const MomentFidelity fid :
         {MomentFidelity::Exact, MomentFidelity::Simplified}) {
        const double w = match_weight_mixture(2.51e-4, 5e-4, 1e-3, 5e-3, 21e-3,
                                              1e-3, 1e-2, fid);
        const SchemeParams s(1e-3, 1e-2,
                             NoiseModel{TwoGaussianMixture(w, 5e-4, 1e-3)},
                             NoiseModel{TwoGaussianMixture(w, 5e-3, 21e-3)}, 10);
        CHECK(close_rel(transmit_power(s, fid), 2.51e-4, 1e-12));
    }

    // targets outside the reachable power band are infeasible
    CHECK_THROWS_AS(
        match_weight_mixture(1e-3, 5e-4, 1e-3, 5e-3, 21e-3, 1e-3, 1e-2),
        InfeasiblePower);
    CHECK_THROWS_AS(
        match_weight_mixture(1e-5, 5e-4, 1e-3, 5e-3, 21e-3, 1e-3, 1e-2),
        InfeasiblePower);
}
