// Command-line frontend. All computation lives in the library; this file
// only resolves configuration (defaults < config file < GQNM_WORKERS env <
// flags), dispatches subcommands, and formats output. Doubles print as
// %.8e to match the CSV export.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gqnm/analytics.hpp"
#include "gqnm/config.hpp"
#include "gqnm/errors.hpp"
#include "gqnm/experiments.hpp"
#include "gqnm/modem.hpp"
#include "gqnm/montecarlo.hpp"
#include "gqnm/noise.hpp"
#include "gqnm/presets.hpp"
#include "gqnm/rng.hpp"

namespace {

using namespace gqnm;

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

void write_whole_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot open output file '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw InvalidInput("failed while writing '" + path + "'");
}

unsigned parse_workers_env(const char* text) {
    const std::string s(text);
    errno = 0;
    char* end = nullptr;
    const unsigned long v = std::strtoul(s.c_str(), &end, 10);
    if (s.empty() || s[0] == '-' || errno != 0 || end == s.c_str() ||
        *end != '\0') {
        throw InvalidInput("GQNM_WORKERS must be a non-negative integer (got '" +
                           s + "')");
    }
    return static_cast<unsigned>(v);
}

struct Options {
    std::string config_path;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    double sigma_w = presets::kSigmaW;
    std::uint64_t symbols = 0;
    std::string family = "gauss";
    std::uint64_t samples = 0;
    double weight = 0.5;
    bool literal = false;
    std::string detector = "threshold";
    std::string mean_stat = "averaged";
    std::string fidelity = "exact";
    // sweep
    std::string preset;
    std::string variable;
    std::vector<double> grid;
    std::vector<std::string> schemes;
    std::string out_csv;
    std::string out_svg;
    // power-match
    double target = std::nan("");
    double lambda0 = presets::kLaplaceScaleLow;
    double mean_low = presets::kMeanLow;
    double mean_high = presets::kMeanHigh;
    double sigma0_low = presets::kMixtureSigma0Low;
    double sigma1_low = presets::kMixtureSigma1Low;
    double sigma0_high = presets::kMixtureSigma0High;
    double sigma1_high = std::nan("");
};

bool given(const CLI::App* sub, const std::string& name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

// Overlays config file, environment, and explicitly passed flags onto the
// built-in defaults.
RunConfig resolve_config(const CLI::App* sub, const Options& o) {
    RunConfig cfg;
    if (!o.config_path.empty()) cfg = load_config(o.config_path);
    if (const char* env = std::getenv("GQNM_WORKERS"))
        cfg.workers = parse_workers_env(env);

    if (given(sub, "--seed")) cfg.master_seed = o.seed;
    if (given(sub, "--workers")) cfg.workers = o.workers;
    if (given(sub, "--sigma-w")) cfg.sigma_w = o.sigma_w;
    if (given(sub, "--detector")) cfg.detector = detector_from_string(o.detector);
    if (given(sub, "--mean-stat"))
        cfg.mean_stat = mean_stat_from_string(o.mean_stat);
    if (given(sub, "--fidelity")) cfg.fidelity = fidelity_from_string(o.fidelity);
    if (given(sub, "--weight")) cfg.mixture_weight = o.weight;
    if (given(sub, "--literal") && o.literal) cfg.power_matched = false;
    return cfg;
}

NamedScheme resolve_scheme(const CLI::App* sub, const Options& o,
                           const RunConfig& cfg) {
    NamedScheme scheme =
        given(sub, "--family")
            ? presets::by_name(o.family, cfg.mixture_weight, cfg.power_matched)
        : cfg.scheme ? *cfg.scheme
                     : presets::by_name("gauss", cfg.mixture_weight,
                                        cfg.power_matched);
    if (given(sub, "--samples")) {
        if (o.samples < 1) throw InvalidInput("--samples must be >= 1");
        scheme.params = scheme.params.with_samples(
            static_cast<std::size_t>(o.samples));
    }
    return scheme;
}

void print_theory_lines(const SchemeParams& params, const RunConfig& cfg) {
    if (closed_form_available(params)) {
        const TheoryBep t =
            bep_total(params, cfg.sigma_w, params.samples_per_symbol(),
                      cfg.mean_stat, cfg.fidelity);
        std::printf("theory_pb0 = %s\n", sci(t.p_b0).c_str());
        std::printf("theory_pb1 = %s\n", sci(t.p_b1).c_str());
        std::printf("theory_pb = %s\n", sci(t.p_b).c_str());
    } else {
        std::printf("theory_pb0 = n/a\ntheory_pb1 = n/a\ntheory_pb = n/a\n");
    }
}

int run_theory(const CLI::App* sub, const Options& o) {
    const RunConfig cfg = resolve_config(sub, o);
    const NamedScheme scheme = resolve_scheme(sub, o, cfg);
    // Unlike sweep rows, an explicit theory request for a family without a
    // closed form is an error, not an n/a.
    const TheoryBep t = bep_total(scheme.params, cfg.sigma_w,
                                  scheme.params.samples_per_symbol(),
                                  cfg.mean_stat, cfg.fidelity);
    std::printf("scheme = %s\n", scheme.name.c_str());
    std::printf("sigma_w = %s\n", sci(cfg.sigma_w).c_str());
    std::printf("samples_per_symbol = %zu\n",
                scheme.params.samples_per_symbol());
    std::printf("theory_pb0 = %s\n", sci(t.p_b0).c_str());
    std::printf("theory_pb1 = %s\n", sci(t.p_b1).c_str());
    std::printf("theory_pb = %s\n", sci(t.p_b).c_str());
    return 0;
}

int run_simulate(const CLI::App* sub, const Options& o) {
    RunConfig cfg = resolve_config(sub, o);
    if (given(sub, "--symbols")) cfg.num_symbols = o.symbols;
    const NamedScheme scheme = resolve_scheme(sub, o, cfg);

    const TrialPlan plan{.scheme = scheme.params,
                         .sigma_w = cfg.sigma_w,
                         .num_symbols = cfg.num_symbols,
                         .master_seed = cfg.master_seed,
                         .detector = cfg.detector};
    const BepEstimate e = run(plan, cfg.workers);

    std::printf("scheme = %s\n", scheme.name.c_str());
    std::printf("sigma_w = %s\n", sci(cfg.sigma_w).c_str());
    std::printf("samples_per_symbol = %zu\n",
                scheme.params.samples_per_symbol());
    std::printf("symbols = %llu\n",
                static_cast<unsigned long long>(e.symbols));
    std::printf("detector = %s\n", to_string(cfg.detector).c_str());
    std::printf("errors_b0 = %llu\n",
                static_cast<unsigned long long>(e.errors_b0));
    std::printf("errors_b1 = %llu\n",
                static_cast<unsigned long long>(e.errors_b1));
    std::printf("sim_pb0 = %s\n", sci(e.p_b0).c_str());
    std::printf("sim_pb1 = %s\n", sci(e.p_b1).c_str());
    std::printf("sim_pb = %s\n", sci(e.p_b).c_str());
    std::printf("se_pb0 = %s\n", sci(e.se_b0).c_str());
    std::printf("se_pb1 = %s\n", sci(e.se_b1).c_str());
    if (cfg.detector == DetectorMode::Threshold) print_theory_lines(scheme.params, cfg);
    return 0;
}

int run_sweep(const CLI::App* sub, const Options& o) {
    RunConfig cfg = resolve_config(sub, o);
    if (!cfg.sweep) cfg.sweep = SweepSection{};
    SweepSection& s = *cfg.sweep;

    if (given(sub, "--preset")) {
        s.preset = o.preset;
        s.variable.reset();
        s.grid.clear();
    }
    if (given(sub, "--variable")) {
        s.variable = sweep_variable_from_string(o.variable);
        s.preset.clear();
    }
    if (given(sub, "--grid")) {
        s.grid = o.grid;
        s.preset.clear();
    }
    if (given(sub, "--schemes")) s.schemes = o.schemes;
    if (given(sub, "--symbols")) {
        if (o.symbols < 1) throw InvalidInput("--symbols must be >= 1");
        s.symbols_per_point = o.symbols;
    }
    if (given(sub, "--out")) cfg.output_csv = o.out_csv;
    if (given(sub, "--svg")) cfg.output_svg = o.out_svg;

    if (!s.preset.empty() && s.preset != "sigma" && s.preset != "samples")
        throw InvalidInput("unknown sweep preset '" + s.preset +
                           "' (expected sigma or samples)");
    if (s.preset.empty() && (!s.variable || s.grid.empty()))
        throw InvalidInput("sweep needs --preset, or --variable with --grid");

    const SweepSpec spec = make_sweep_spec(cfg);
    const SweepResult result = sweep(spec, cfg.workers);

    // Render everything before touching the filesystem so a failure leaves
    // no partial output files behind.
    const std::string csv = to_csv(result);
    const std::string svg = cfg.output_svg.empty() ? "" : to_svg(result);

    if (cfg.output_csv.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_whole_file(cfg.output_csv, csv);
        std::fprintf(stderr, "wrote %s\n", cfg.output_csv.c_str());
    }
    if (!cfg.output_svg.empty()) {
        write_whole_file(cfg.output_svg, svg);
        std::fprintf(stderr, "wrote %s\n", cfg.output_svg.c_str());
    }
    return 0;
}

int run_power_match(const CLI::App* sub, const Options& o) {
    const MomentFidelity fid = given(sub, "--fidelity")
                                   ? fidelity_from_string(o.fidelity)
                                   : MomentFidelity::Exact;
    const double target =
        std::isnan(o.target) ? presets::reference_power() : o.target;
    std::printf("target_power = %s\n", sci(target).c_str());

    if (o.family == "laplace") {
        const double lambda_high =
            match_power_laplace(target, o.lambda0, o.mean_low, o.mean_high);
        const SchemeParams solved(o.mean_low, o.mean_high, Laplacian(o.lambda0),
                                  Laplacian(lambda_high),
                                  presets::kSamplesPerSymbol);
        std::printf("lambda_high = %s\n", sci(lambda_high).c_str());
        std::printf("achieved_power = %s\n",
                    sci(transmit_power(solved, fid)).c_str());
        return 0;
    }
    if (o.family == "mixture") {
        if (!std::isnan(o.sigma1_high)) {
            // All four sigmas given: solve the weight instead.
            const double weight = match_weight_mixture(
                target, o.sigma0_low, o.sigma1_low, o.sigma0_high,
                o.sigma1_high, o.mean_low, o.mean_high, fid);
            const SchemeParams solved(
                o.mean_low, o.mean_high,
                TwoGaussianMixture(weight, o.sigma0_low, o.sigma1_low),
                TwoGaussianMixture(weight, o.sigma0_high, o.sigma1_high),
                presets::kSamplesPerSymbol);
            std::printf("weight = %s\n", sci(weight).c_str());
            std::printf("achieved_power = %s\n",
                        sci(transmit_power(solved, fid)).c_str());
            return 0;
        }
        const double sigma1_high = match_power_mixture(
            target, o.weight, o.sigma0_low, o.sigma1_low, o.sigma0_high,
            o.mean_low, o.mean_high, fid);
        const SchemeParams solved(
            o.mean_low, o.mean_high,
            TwoGaussianMixture(o.weight, o.sigma0_low, o.sigma1_low),
            TwoGaussianMixture(o.weight, o.sigma0_high, sigma1_high),
            presets::kSamplesPerSymbol);
        std::printf("sigma1_high = %s\n", sci(sigma1_high).c_str());
        std::printf("achieved_power = %s\n",
                    sci(transmit_power(solved, fid)).c_str());
        return 0;
    }
    throw InvalidInput("power-match: --family must be laplace or mixture (got '" +
                       o.family + "')");
}

int run_validate(const CLI::App* sub, const Options& o) {
    const std::uint64_t seed = given(sub, "--seed") ? o.seed : 1;
    int checks = 0;
    int failures = 0;
    auto report = [&](bool ok, const char* name) {
        ++checks;
        if (!ok) ++failures;
        std::printf("[%s] %s\n", ok ? "ok" : "FAIL", name);
    };

    // Tail probability function: frozen value, symmetry, monotonicity.
    {
        bool ok = std::fabs(q(0.0) - 0.5) <= 1e-15 &&
                  std::fabs(q(1.0) - 0.15865525393145705) <= 1e-12;
        double prev = q(-6.0);
        for (int i = 1; i <= 200; ++i) {
            const double x = -6.0 + 12.0 * i / 200.0;
            const double v = q(x);
            ok = ok && std::fabs(v + q(-x) - 1.0) <= 1e-12 && v < prev;
            prev = v;
        }
        report(ok, "tail probability: frozen value, symmetry, monotone");
    }

    // Detector thresholds sit midway between the design points and scale
    // with the scheme (mean threshold linearly, variance threshold
    // quadratically).
    {
        const SchemeParams ref = presets::gauss();
        const Thresholds th = thresholds(ref);
        bool ok = std::fabs(th.mean - 5.5e-3) <= 1e-15 &&
                  std::fabs(th.variance - 2.005e-4) <= 1e-15;
        const double c = 3.7;
        const SchemeParams scaled(c * presets::kMeanLow, c * presets::kMeanHigh,
                                  Gaussian(c * presets::kGaussSigmaLow),
                                  Gaussian(c * presets::kGaussSigmaHigh),
                                  presets::kSamplesPerSymbol);
        const Thresholds th2 = thresholds(scaled);
        ok = ok && std::fabs(th2.mean - c * th.mean) <= 1e-12 * c * th.mean;
        ok = ok &&
             std::fabs(th2.variance - c * c * th.variance) <=
                 1e-12 * c * c * th.variance;
        report(ok, "thresholds: midpoints and scale consistency");
    }

    // Decision rule: ties resolve to 0, strict exceedance to 1.
    {
        const Thresholds th{.mean = 5.5e-3, .variance = 2.005e-4};
        const BitPair at_tie = detect(
            SymbolStats{.sample_mean = th.mean, .raw_second_moment = th.variance},
            th);
        const BitPair above =
            detect(SymbolStats{.sample_mean = th.mean + 1e-9,
                               .raw_second_moment = th.variance + 1e-9},
                   th);
        report(!at_tie.b0 && !at_tie.b1 && above.b0 && above.b1,
               "detector: tie convention and strict exceedance");
    }

    // Replays and worker counts do not change simulation results.
    {
        const TrialPlan plan{.scheme = presets::gauss(),
                             .sigma_w = presets::kSigmaW,
                             .num_symbols = 20000,
                             .master_seed = seed};
        const BepEstimate a = run(plan, 1);
        const BepEstimate b = run(plan, 1);
        const BepEstimate c = run(plan, 3);
        report(a.errors_b0 == b.errors_b0 && a.errors_b1 == b.errors_b1 &&
                   a.errors_b0 == c.errors_b0 && a.errors_b1 == c.errors_b1,
               "simulation: replay and worker-count invariance");
    }

    // Sampled moments of every reference noise model agree with the
    // analytic variance within 5 standard errors.
    {
        bool ok = true;
        for (const NamedScheme& ns : presets::reference_schemes()) {
            for (const NoiseModel& model :
                 {ns.params.low(), ns.params.high()}) {
                RngStream rng(seed, 977);
                const std::size_t n = 200000;
                double sum = 0.0, sum2 = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double x = draw(model, rng);
                    sum += x;
                    sum2 += x * x;
                }
                const double mean = sum / n;
                const double var_hat = sum2 / n - mean * mean;
                const double se = std::sqrt(
                    (fourth_moment(model) - variance(model) * variance(model)) /
                    n);
                ok = ok && std::fabs(var_hat - variance(model)) <= 5.0 * se;
            }
        }
        report(ok, "noise models: sampled variance matches analytic variance");
    }

    // Power-matched schemes reproduce the study power; solver round-trips.
    {
        const double p_ref = presets::reference_power();
        const double p_lap = transmit_power(presets::laplace());
        const double p_mix = transmit_power(presets::mixture());
        bool ok = std::fabs(p_lap - p_ref) <= 1e-12 * p_ref &&
                  std::fabs(p_mix - p_ref) <= 1e-12 * p_ref;
        const double lambda_high = match_power_laplace(
            p_lap, presets::kLaplaceScaleLow, presets::kMeanLow,
            presets::kMeanHigh);
        const SchemeParams lap = presets::laplace();
        ok = ok && std::fabs(lambda_high -
                             std::get<Laplacian>(lap.high()).scale) <=
                       1e-12 * lambda_high;
        report(ok, "power matching: solved schemes hit the target power");
    }

    // Closed-form variance-bit error rate falls as symbols lengthen.
    {
        bool ok = true;
        double prev = 1.0;
        for (std::size_t n : {5, 10, 20, 40}) {
            const double v =
                bep_b1(presets::gauss(), presets::kSigmaW, n);
            ok = ok && v < prev;
            prev = v;
        }
        const double degenerate = bep_b0(
            SchemeParams::degenerate(presets::kMeanLow, Gaussian(1e-3),
                                     Gaussian(2e-3), 10),
            presets::kSigmaW, 10);
        ok = ok && std::fabs(degenerate - 0.5) <= 1e-12;
        report(ok, "closed forms: error rate monotone in N, degenerate midpoint");
    }

    // Wide variance separation with long symbols drives the variance bit
    // error rate to near zero.
    {
        const SchemeParams easy = SchemeParams::degenerate(
            presets::kMeanLow, Gaussian(1e-3), Gaussian(20e-3), 10000);
        const TrialPlan plan{.scheme = easy,
                             .sigma_w = 0.0,
                             .num_symbols = 1000,
                             .master_seed = seed};
        const BepEstimate e = run(plan, 0);
        report(e.p_b1 < 1e-2, "simulation: long-symbol variance detection");
    }

    // Confidence intervals: exact at the boundaries, inside [0, 1].
    {
        const Interval zero = wilson_ci(0, 100, 0.95);
        const Interval mid = wilson_ci(50, 1000, 0.95);
        report(zero.lo == 0.0 && zero.hi > 0.0 && zero.hi < 0.05 &&
                   mid.lo > 0.03 && mid.hi < 0.07,
               "confidence intervals: boundary and bulk behavior");
    }

    std::printf("%d/%d checks passed\n", checks - failures, checks);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Noise-modulation laboratory: closed-form and Monte Carlo "
        "bit-error studies"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    Options o;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--config", o.config_path,
                      "JSON run configuration file (flags override it)");
        s->add_option("--seed", o.seed, "master RNG seed");
        s->add_option("--workers", o.workers,
                      "worker threads, 0 = one per hardware thread");
    };
    auto add_scheme = [&](CLI::App* s) {
        s->add_option("--family", o.family,
                      "scheme family: gauss, mixture, or laplace");
        s->add_option("--sigma-w", o.sigma_w,
                      "channel noise standard deviation");
        s->add_option("--samples", o.samples, "samples per symbol");
        s->add_option("--weight", o.weight,
                      "mixture weight of the narrow component");
        s->add_flag("--literal", o.literal,
                    "use the catalogued high parameters instead of "
                    "power-matched solves");
        s->add_option("--mean-stat", o.mean_stat,
                      "mean-statistic variance model: averaged or per-draw");
        s->add_option("--fidelity", o.fidelity,
                      "fourth-moment model: exact or simplified");
    };

    CLI::App* theory_cmd = app.add_subcommand(
        "theory", "Closed-form bit-error probabilities for one scheme point");
    add_common(theory_cmd);
    add_scheme(theory_cmd);

    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Monte Carlo bit-error estimate for one scheme point");
    add_common(sim_cmd);
    add_scheme(sim_cmd);
    sim_cmd->add_option("--symbols", o.symbols, "number of symbols to simulate");
    sim_cmd->add_option("--detector", o.detector,
                        "detector mode: threshold or mean-compensated");

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Sweep a variable across a grid and export CSV/SVG");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--preset", o.preset, "canned sweep: sigma or samples");
    sweep_cmd->add_option("--variable", o.variable,
                          "swept variable: sigma_w or samples_per_symbol");
    sweep_cmd->add_option("--grid", o.grid, "comma-separated grid values")
        ->delimiter(',');
    sweep_cmd
        ->add_option("--schemes", o.schemes,
                     "comma-separated scheme names (gauss, laplace, mixture)")
        ->delimiter(',');
    sweep_cmd->add_option("--symbols", o.symbols, "symbols per grid point");
    sweep_cmd->add_option("--sigma-w", o.sigma_w,
                          "fixed channel noise for samples-per-symbol sweeps");
    sweep_cmd->add_option("--out", o.out_csv, "CSV output path (default stdout)");
    sweep_cmd->add_option("--svg", o.out_svg, "SVG plot output path");
    sweep_cmd->add_option("--detector", o.detector,
                          "detector mode: threshold or mean-compensated");
    sweep_cmd->add_option("--mean-stat", o.mean_stat,
                          "mean-statistic variance model: averaged or per-draw");
    sweep_cmd->add_option("--fidelity", o.fidelity,
                          "fourth-moment model: exact or simplified");
    sweep_cmd->add_option("--weight", o.weight,
                          "mixture weight of the narrow component");
    sweep_cmd->add_flag("--literal", o.literal,
                        "use the catalogued high parameters instead of "
                        "power-matched solves");

    CLI::App* match_cmd = app.add_subcommand(
        "power-match",
        "Solve a high-class noise parameter (or the mixture weight) for a "
        "target transmit power");
    match_cmd->add_option("--family", o.family, "mixture or laplace")
        ->required();
    match_cmd->add_option("--target", o.target,
                          "target transmit power (default: the Gaussian "
                          "study scheme's power)");
    match_cmd->add_option("--lambda0", o.lambda0, "low-class Laplacian scale");
    match_cmd->add_option("--mL", o.mean_low, "low mean bias");
    match_cmd->add_option("--mH", o.mean_high, "high mean bias");
    match_cmd->add_option("--weight", o.weight,
                          "mixture weight of the narrow component");
    match_cmd->add_option("--sigma0L", o.sigma0_low,
                          "low-class narrow component sigma");
    match_cmd->add_option("--sigma1L", o.sigma1_low,
                          "low-class wide component sigma");
    match_cmd->add_option("--sigma0H", o.sigma0_high,
                          "high-class narrow component sigma");
    match_cmd->add_option("--sigma1H", o.sigma1_high,
                          "high-class wide component sigma; giving it solves "
                          "the weight instead");
    match_cmd->add_option("--fidelity", o.fidelity,
                          "power model: exact or simplified");

    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "Run a quick battery of library invariant checks");
    validate_cmd->add_option("--seed", o.seed, "master RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(theory_cmd)) return run_theory(theory_cmd, o);
        if (app.got_subcommand(sim_cmd)) return run_simulate(sim_cmd, o);
        if (app.got_subcommand(sweep_cmd)) return run_sweep(sweep_cmd, o);
        if (app.got_subcommand(match_cmd)) return run_power_match(match_cmd, o);
        if (app.got_subcommand(validate_cmd))
            return run_validate(validate_cmd, o);
        std::fprintf(stderr, "error: no subcommand given\n");
        return 1;
    } catch (const InfeasiblePower& e) {
        std::fprintf(stderr, "error: %s\nachievable_power = %s\n", e.what(),
                     sci(e.achievable_power()).c_str());
        return 2;
    } catch (const UnsupportedTheory& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InvalidInput& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
