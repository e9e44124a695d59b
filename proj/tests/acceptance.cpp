// Acceptance battery for the noise-modulation laboratory. Each numbered
// criterion prints exactly one [PASS]/[FAIL] line; the process exit code is
// the number of failed criteria. Simulation results at the 1e6-symbol
// budget are memoized so overlapping criteria reuse the same runs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "gqnm/analytics.hpp"
#include "gqnm/experiments.hpp"
#include "gqnm/modem.hpp"
#include "gqnm/montecarlo.hpp"
#include "gqnm/noise.hpp"
#include "gqnm/presets.hpp"
#include "gqnm/rng.hpp"

#include "oracles.hpp"

using namespace gqnm;

namespace {

std::string fmt(const char* f, ...) {
    char buf[768];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

int report(int idx, const char* title, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, title,
                detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    return ok ? 0 : 1;
}

const SchemeParams& gauss_params() {
    static const SchemeParams p = presets::gauss();
    return p;
}
const SchemeParams& mixture_params() {
    static const SchemeParams p = presets::mixture(); // power matched
    return p;
}
const SchemeParams& laplace_params() {
    static const SchemeParams p = presets::laplace(); // power matched
    return p;
}

const SchemeParams& params_by(const std::string& name) {
    if (name == "gauss") return gauss_params();
    if (name == "mixture") return mixture_params();
    return laplace_params();
}

constexpr std::uint64_t kBudget = 1000000;
constexpr std::uint64_t kSeed = 1;

// (scheme, sigma_w, N) -> estimate at the shared 1e6-symbol budget.
BepEstimate simulate(const std::string& name, double sigma_w, std::size_t n) {
    static std::map<std::tuple<std::string, double, std::size_t>, BepEstimate>
        cache;
    const auto key = std::make_tuple(name, sigma_w, n);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const BepEstimate est = run(TrialPlan{
        .scheme = params_by(name).with_samples(n),
        .sigma_w = sigma_w,
        .num_symbols = kBudget,
        .master_seed = kSeed,
        .detector = DetectorMode::Threshold,
    });
    cache.emplace(key, est);
    return est;
}

double wall_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Criteria 1 and 2: per-point simulation vs closed form on the 3x4 grid.
int check_agreement(int idx, const char* title, const std::string& name) {
    const double sigmas[3] = {std::pow(10.0, -5.2), 2e-5, 1e-4};
    const std::size_t ns[4] = {5, 10, 20, 40};
    const SchemeParams& base = params_by(name);

    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    int violations = 0;
    double worst_margin = 0.0; // excess beyond tolerance, in tolerance units
    std::string worst;
    for (double sigma : sigmas) {
        for (std::size_t n : ns) {
            const BepEstimate sim = simulate(name, sigma, n);
            const TheoryBep th = bep_total(base, sigma, n);
            const double sims[2] = {sim.p_b0, sim.p_b1};
            const double ses[2] = {sim.se_b0, sim.se_b1};
            const double ths[2] = {th.p_b0, th.p_b1};
            for (int bit = 0; bit < 2; ++bit) {
                if (ths[bit] < 1e-3) continue;
                ++checked;
                const double tol = 3.0 * ses[bit] + 0.25 * ths[bit];
                const double err = std::fabs(sims[bit] - ths[bit]);
                if (err > tol) {
                    ++violations;
                    const double margin = err / tol;
                    if (margin > worst_margin) {
                        worst_margin = margin;
                        worst = fmt("worst sigma_w=%.3e N=%zu b%d: "
                                    "|%.4e-%.4e|=%.3e > tol %.3e",
                                    sigma, n, bit, sims[bit], ths[bit], err, tol);
                    }
                }
            }
        }
    }
    const double elapsed = wall_seconds(t0);
    const bool ok = violations == 0 && elapsed < 120.0;
    std::string detail = fmt("%d/%d sub-bit checks within 3*SE+0.25*theory, "
                             "%.1fs of 120s",
                             checked - violations, checked, elapsed);
    if (!worst.empty()) detail += "; " + worst;
    return report(idx, title, ok, detail);
}

struct MergedBlocks {
    int count;
};

MergedBlocks merge_intervals(std::vector<Interval> iv) {
    std::sort(iv.begin(), iv.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    int blocks = 0;
    double cur_hi = -1.0;
    for (const Interval& i : iv) {
        if (blocks == 0 || i.lo > cur_hi) {
            ++blocks;
            cur_hi = i.hi;
        } else {
            cur_hi = std::max(cur_hi, i.hi);
        }
    }
    return {blocks};
}

int check_sigma_insensitivity() {
    const char* names[3] = {"gauss", "laplace", "mixture"};
    const std::vector<double> grid = presets::sigma_grid();
    std::string detail;
    bool ok = true;

    for (const char* name : names) {
        std::vector<BepEstimate> sims;
        sims.reserve(grid.size());
        for (double sigma : grid) {
            sims.push_back(run(TrialPlan{
                .scheme = params_by(name),
                .sigma_w = sigma,
                .num_symbols = 100000,
                .master_seed = kSeed,
                .detector = DetectorMode::Threshold,
            }));
        }
        for (int bit = 0; bit < 2; ++bit) {
            std::vector<Interval> iv;
            for (const BepEstimate& s : sims) {
                iv.push_back(wilson_ci(bit == 0 ? s.errors_b0 : s.errors_b1,
                                       s.symbols, 0.95));
            }
            const int blocks = merge_intervals(iv).count;
            if (blocks != 1) {
                ok = false;
                detail += fmt("%s b%d intervals split into %d blocks; ", name,
                              bit, blocks);
            }
        }
    }

    double worst_rel = 0.0;
    for (const char* name : {"gauss", "mixture"}) {
        const SchemeParams& base = params_by(name);
        double lo0 = 1.0, hi0 = 0.0, lo1 = 1.0, hi1 = 0.0;
        for (double sigma : grid) {
            const TheoryBep th =
                bep_total(base, sigma, base.samples_per_symbol());
            lo0 = std::min(lo0, th.p_b0);
            hi0 = std::max(hi0, th.p_b0);
            lo1 = std::min(lo1, th.p_b1);
            hi1 = std::max(hi1, th.p_b1);
        }
        worst_rel = std::max({worst_rel, (hi0 - lo0) / lo0, (hi1 - lo1) / lo1});
    }
    if (!(worst_rel < 0.01)) {
        ok = false;
        detail += fmt("theory varies %.3f%% across the grid; ", worst_rel * 100);
    }
    if (detail.empty()) {
        detail = fmt("36 simulated series form single CI blocks, worst theory "
                     "variation %.4f%%",
                     worst_rel * 100);
    }
    return report(3, "simulated and closed-form BEPs insensitive to sigma_w",
                  ok, detail);
}

int check_n_monotonicity() {
    bool ok = true;
    std::string detail;

    for (const char* name : {"gauss", "mixture"}) {
        const SchemeParams& base = params_by(name);
        for (std::size_t n = 5; n < 40; ++n) {
            const double a = bep_b1(base, presets::kSigmaW, n);
            const double b = bep_b1(base, presets::kSigmaW, n + 1);
            if (!(b < a)) {
                ok = false;
                detail += fmt("%s theory pb1 not decreasing at N=%zu; ", name, n);
                break;
            }
        }
    }

    const std::vector<double> ns = presets::samples_grid();
    for (const char* name : {"gauss", "laplace", "mixture"}) {
        for (std::size_t i = 1; i < ns.size(); ++i) {
            const auto na = static_cast<std::size_t>(ns[i - 1]);
            const auto nb = static_cast<std::size_t>(ns[i]);
            const BepEstimate a = simulate(name, presets::kSigmaW, na);
            const BepEstimate b = simulate(name, presets::kSigmaW, nb);
            if (b.p_b1 <= a.p_b1) continue;
            const Interval ia = wilson_ci(a.errors_b1, a.symbols, 0.95);
            const Interval ib = wilson_ci(b.errors_b1, b.symbols, 0.95);
            if (ib.lo > ia.hi) {
                ok = false;
                detail += fmt("%s sim pb1 rises with CI separation at "
                              "N=%zu->%zu (%.4e -> %.4e); ",
                              name, na, nb, a.p_b1, b.p_b1);
            }
        }
    }
    if (detail.empty()) {
        detail = "theory pb1 strictly decreasing on N in [5,40]; sim pb1 "
                 "non-increasing up to CI overlap for all three schemes";
    }
    return report(4, "error probabilities fall as N grows", ok, detail);
}

struct OrderingClause {
    bool ok;
    std::string note;
};

// Claim: `claimant` has the lowest value of the given sub-bit metric.
// Passes on a win with CI separation, or on a statistical tie (flagged);
// fails only when another scheme wins with CI separation.
OrderingClause check_lowest(const char* metric, const std::string& claimant,
                            const std::map<std::string, BepEstimate>& sims,
                            int bit) {
    std::string best;
    double best_p = 2.0;
    std::map<std::string, Interval> ci;
    std::map<std::string, double> p;
    for (const auto& [name, est] : sims) {
        p[name] = bit == 0 ? est.p_b0 : est.p_b1;
        ci[name] = wilson_ci(bit == 0 ? est.errors_b0 : est.errors_b1,
                             est.symbols, 0.95);
        if (p[name] < best_p) {
            best_p = p[name];
            best = name;
        }
    }
    if (best == claimant) {
        bool separated = true;
        for (const auto& [name, interval] : ci) {
            if (name != claimant && interval.lo <= ci[claimant].hi) {
                separated = false;
            }
        }
        if (separated) {
            return {true, fmt("%s lowest %s with CI separation (%.4e)",
                              claimant.c_str(), metric, best_p)};
        }
        return {true, fmt("TIE FLAGGED: %s lowest %s (%.4e) but CIs overlap "
                          "the runner-up",
                          claimant.c_str(), metric, best_p)};
    }
    if (ci[best].hi >= ci[claimant].lo) {
        return {true, fmt("TIE FLAGGED: %s %s (%.4e) statistically ties "
                          "leader %s (%.4e)",
                          claimant.c_str(), metric, p[claimant], best.c_str(),
                          best_p)};
    }
    return {false, fmt("%s %s (%.4e) beaten with CI separation by %s (%.4e)",
                       claimant.c_str(), metric, p[claimant], best.c_str(),
                       best_p)};
}

int check_sub_bit_ordering() {
    std::map<std::string, BepEstimate> sims;
    for (const char* name : {"gauss", "laplace", "mixture"}) {
        sims[name] = simulate(name, presets::kSigmaW, presets::kSamplesPerSymbol);
    }
    const OrderingClause c1 = check_lowest("pb1", "laplace", sims, 1);
    const OrderingClause c2 = check_lowest("pb0", "mixture", sims, 0);
    return report(5, "scheme ordering of the sub-bit error rates",
                  c1.ok && c2.ok, c1.note + "; " + c2.note);
}

int check_power_matching() {
    bool ok = true;
    std::string detail;

    const double p_gauss = transmit_power(gauss_params());
    const double p_lap = transmit_power(laplace_params());
    const double p_mix = transmit_power(mixture_params());
    const double lo = std::min({p_gauss, p_lap, p_mix});
    const double hi = std::max({p_gauss, p_lap, p_mix});
    const double spread = (hi - lo) / lo;
    if (!(spread < 0.005)) {
        ok = false;
        detail += fmt("powers spread %.3f%%; ", spread * 100);
    }

    const double lambda1 = match_power_laplace(2.51e-4, 1e-4, 1e-3, 1e-2);
    const double lambda_err = std::fabs(lambda1 - 14.2e-3) / 14.2e-3;
    if (!(lambda_err < 0.01)) {
        ok = false;
        detail += fmt("solved lambda1 %.6e is %.2f%% from 14.2e-3; ", lambda1,
                      lambda_err * 100);
    }

    const double target = presets::reference_power();
    const double rt_lap = std::fabs(p_lap - target) / target;
    const double rt_mix = std::fabs(p_mix - target) / target;
    if (!(rt_lap <= 1e-12 && rt_mix <= 1e-12)) {
        ok = false;
        detail += fmt("solver round-trip error lap %.2e mix %.2e; ", rt_lap,
                      rt_mix);
    }
    if (detail.empty()) {
        detail = fmt("power spread %.2e, lambda1 %.5e (%.3f%% from 14.2e-3), "
                     "round-trip %.1e/%.1e",
                     spread, lambda1, lambda_err * 100, rt_lap, rt_mix);
    }
    return report(6, "schemes share the reference transmit power", ok, detail);
}

int check_moment_oracles() {
    bool ok = true;
    std::string detail;

    struct Entry {
        const char* label;
        const NoiseModel* model;
    };
    const Entry entries[6] = {
        {"gauss low", &gauss_params().low()},
        {"gauss high", &gauss_params().high()},
        {"mixture low", &mixture_params().low()},
        {"mixture high", &mixture_params().high()},
        {"laplace low", &laplace_params().low()},
        {"laplace high", &laplace_params().high()},
    };
    for (int i = 0; i < 6; ++i) {
        RngStream rng(4242 + i, 0);
        oracle::MomentAccumulator acc;
        for (int k = 0; k < 1000000; ++k) acc.add(draw(*entries[i].model, rng));
        const double var_err = std::fabs(acc.m2() - variance(*entries[i].model));
        const double m4_err =
            std::fabs(acc.m4() - fourth_moment(*entries[i].model));
        if (var_err > 5.0 * acc.se_m2() || m4_err > 5.0 * acc.se_m4()) {
            ok = false;
            detail += fmt("%s moments off (%.2f se, %.2f se); ",
                          entries[i].label, var_err / acc.se_m2(),
                          m4_err / acc.se_m4());
        }
    }

    // Variance of the squared received sample, closed form vs brute force.
    double worst_se = 0.0;
    int case_idx = 0;
    for (const char* name : {"gauss", "mixture"}) {
        const SchemeParams& base = params_by(name);
        for (int b0 = 0; b0 < 2; ++b0) {
            for (int b1 = 0; b1 < 2; ++b1) {
                const BitPair bits{b0 != 0, b1 != 0};
                const CaseMoments cm =
                    std::holds_alternative<Gaussian>(base.low())
                        ? gaussian_case_moments(base, presets::kSigmaW, bits, 1)
                        : mixture_case_moments(base, presets::kSigmaW, bits, 1);
                const double mean = case_mean(base, bits);
                const NoiseModel& model = case_model(base, bits);
                RngStream rng(991000 + case_idx++, 0);
                oracle::MomentAccumulator acc;
                for (int k = 0; k < 10000000; ++k) {
                    acc.add(mean + draw(model, rng) +
                            presets::kSigmaW * rng.next_normal());
                }
                const double err =
                    std::fabs(cm.stat_variance - acc.var_of_square());
                const double se = acc.se_var_of_square();
                worst_se = std::max(worst_se, err / se);
                if (err > 3.0 * se) {
                    ok = false;
                    detail += fmt("%s case %d%d Var(r^2) off by %.2f se; ", name,
                                  b0, b1, err / se);
                }
            }
        }
    }
    if (detail.empty()) {
        detail = fmt("6 models within 5 SE at 1e6 draws; 8 Var(r^2) cases "
                     "within 3 SE at 1e7 draws (worst %.2f se)",
                     worst_se);
    }
    return report(7, "analytic moments match heavy sampling", ok, detail);
}

int check_q_accuracy() {
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = -8.0 + 16.0 * i / 9999.0;
        const double ref = static_cast<double>(oracle::q_reference(x));
        worst = std::max(worst, std::fabs(q(x) - ref));
    }
    const bool ok = worst <= 1e-12;
    return report(8, "tail probability matches the high-precision oracle", ok,
                  fmt("max abs error %.3e over 1e4 points in [-8,8]", worst));
}

int check_determinism() {
    const SweepSpec spec = presets::sigma_sweep(20000, 99);
    const std::string w1 = to_csv(sweep(spec, 1));
    const std::string w2 = to_csv(sweep(spec, 2));
    const std::string w8 = to_csv(sweep(spec, 8));
    const std::string rerun = to_csv(sweep(spec, 1));
    const bool ok = w1 == w2 && w1 == w8 && w1 == rerun;
    return report(9, "sweep CSV is byte-identical across reruns and workers",
                  ok,
                  ok ? fmt("%zu bytes stable for workers 1/2/8 and a rerun",
                           w1.size())
                     : "outputs diverged");
}

} // namespace

int main() {
    int failures = 0;
    failures += check_agreement(
        1, "Gaussian-family simulation matches the closed form", "gauss");
    failures += check_agreement(
        2, "mixture-family simulation matches the closed form", "mixture");
    failures += check_sigma_insensitivity();
    failures += check_n_monotonicity();
    failures += check_sub_bit_ordering();
    failures += check_power_matching();
    failures += check_moment_oracles();
    failures += check_q_accuracy();
    failures += check_determinism();
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures;
}
