#pragma once

#include <cstdint>

#include "gqnm/modem.hpp"

namespace gqnm {

/// One simulated transmission experiment: a scheme, a channel noise level,
/// a symbol budget, and the seed that makes the run reproducible.
struct TrialPlan {
    SchemeParams scheme;
    double sigma_w;
    std::uint64_t num_symbols;
    std::uint64_t master_seed;
    DetectorMode detector = DetectorMode::Threshold;
};

/// Monte Carlo error counts and the derived per-sub-bit probabilities.
/// A symbol can contribute an error to both counters.
struct BepEstimate {
    std::uint64_t symbols;
    std::uint64_t errors_b0;
    std::uint64_t errors_b1;
    double p_b0;
    double p_b1;
    double p_b;   // (p_b0 + p_b1) / 2
    double se_b0; // binomial standard error of p_b0
    double se_b1;
};

/// Simulate the plan. Symbol k always consumes the stream
/// (master_seed, k) regardless of how the symbol range is partitioned, so
/// any worker count produces identical counts. workers == 0 picks the
/// hardware concurrency.
BepEstimate run(const TrialPlan& plan, unsigned workers = 0);

struct Interval {
    double lo;
    double hi;
};

/// Wilson score confidence interval for an error proportion. Valid at the
/// boundaries: zero errors pins lo to 0, all-errors pins hi to 1.
Interval wilson_ci(std::uint64_t errors, std::uint64_t trials, double level);

} // namespace gqnm
