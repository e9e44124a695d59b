#include "gqnm/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "gqnm/channel.hpp"
#include "gqnm/errors.hpp"

namespace gqnm {

namespace {

struct ErrorCounts {
    std::uint64_t b0 = 0;
    std::uint64_t b1 = 0;
};

/// Simulate the contiguous symbol range [first, last).
ErrorCounts run_range(const TrialPlan& plan, std::uint64_t first,
                      std::uint64_t last) {
    const Thresholds th = thresholds(plan.scheme);
    Symbol buffer(plan.scheme.samples_per_symbol());
    ErrorCounts counts;
    for (std::uint64_t k = first; k < last; ++k) {
        RngStream stream(plan.master_seed, k);
        const std::uint64_t word = stream.next_u64();
        const BitPair sent{.b0 = (word >> 63) != 0, .b1 = ((word >> 62) & 1) != 0};
        modulate_into(plan.scheme, sent, stream, buffer);
        awgn_inplace(buffer, plan.sigma_w, stream);
        const BitPair decoded = detect(statistics(buffer), th, plan.detector);
        counts.b0 += decoded.b0 != sent.b0;
        counts.b1 += decoded.b1 != sent.b1;
    }
    return counts;
}

} // namespace

BepEstimate run(const TrialPlan& plan, unsigned workers) {
    if (plan.num_symbols == 0) {
        throw InvalidInput("run: num_symbols must be >= 1");
    }
    if (!(std::isfinite(plan.sigma_w) && plan.sigma_w >= 0.0)) {
        throw InvalidInput("run: sigma_w must be finite and >= 0");
    }
    std::uint64_t n_workers = workers;
    if (n_workers == 0) {
        n_workers = std::max(1u, std::thread::hardware_concurrency());
    }
    n_workers = std::min<std::uint64_t>(n_workers, plan.num_symbols);

    std::vector<ErrorCounts> partials(n_workers);
    if (n_workers == 1) {
        partials[0] = run_range(plan, 0, plan.num_symbols);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        const std::uint64_t chunk = plan.num_symbols / n_workers;
        const std::uint64_t extra = plan.num_symbols % n_workers;
        std::uint64_t begin = 0;
        for (std::uint64_t w = 0; w < n_workers; ++w) {
            const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
            pool.emplace_back([&plan, &partials, w, begin, end] {
                partials[w] = run_range(plan, begin, end);
            });
            begin = end;
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    ErrorCounts total;
    for (const ErrorCounts& c : partials) {
        total.b0 += c.b0;
        total.b1 += c.b1;
    }
    const double n = static_cast<double>(plan.num_symbols);
    const double p0 = static_cast<double>(total.b0) / n;
    const double p1 = static_cast<double>(total.b1) / n;
    return BepEstimate{
        .symbols = plan.num_symbols,
        .errors_b0 = total.b0,
        .errors_b1 = total.b1,
        .p_b0 = p0,
        .p_b1 = p1,
        .p_b = 0.5 * (p0 + p1),
        .se_b0 = std::sqrt(p0 * (1.0 - p0) / n),
        .se_b1 = std::sqrt(p1 * (1.0 - p1) / n),
    };
}

Interval wilson_ci(std::uint64_t errors, std::uint64_t trials, double level) {
    if (trials == 0) {
        throw InvalidInput("wilson_ci: trials must be >= 1");
    }
    if (errors > trials) {
        throw InvalidInput("wilson_ci: errors must not exceed trials");
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw InvalidInput("wilson_ci: level must lie strictly in (0,1)");
    }
    const double z = detail::inverse_normal_cdf(0.5 * (1.0 + level));
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = (p + 0.5 * z2n) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
    // One-sided at the boundaries: the score interval touches 0 (or 1)
    // exactly there; pinning avoids rounding residue in center - half.
    return Interval{.lo = errors == 0 ? 0.0 : std::max(0.0, center - half),
                    .hi = errors == trials ? 1.0 : std::min(1.0, center + half)};
}

} // namespace gqnm
