#include "gqnm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string_view>

#include "gqnm/errors.hpp"

namespace gqnm {

namespace {

constexpr std::string_view variable_name(SweepVariable v) {
    return v == SweepVariable::SigmaW ? "sigma_w" : "samples_per_symbol";
}

std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

// Plot coordinates; two decimals keep documents byte-stable and compact.
std::string fmt_px(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

} // namespace

SweepSpec::SweepSpec(SweepVariable variable, std::vector<double> grid,
                     std::vector<NamedScheme> schemes, double sigma_w,
                     std::uint64_t symbols_per_point, std::uint64_t master_seed,
                     DetectorMode detector, MeanStatVariance mean_stat,
                     MomentFidelity fidelity)
    : variable_(variable),
      grid_(std::move(grid)),
      schemes_(std::move(schemes)),
      sigma_w_(sigma_w),
      symbols_per_point_(symbols_per_point),
      master_seed_(master_seed),
      detector_(detector),
      mean_stat_(mean_stat),
      fidelity_(fidelity) {
    if (grid_.empty()) {
        throw InvalidInput("SweepSpec: grid must be non-empty");
    }
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        const double v = grid_[i];
        if (!std::isfinite(v)) {
            throw InvalidInput("SweepSpec: grid values must be finite");
        }
        if (i > 0 && !(grid_[i - 1] < v)) {
            throw InvalidInput("SweepSpec: grid must be strictly increasing");
        }
        if (variable_ == SweepVariable::SigmaW) {
            if (!(v > 0.0)) {
                throw InvalidInput("SweepSpec: sigma_w grid values must be > 0");
            }
        } else {
            if (!(v >= 2.0) || v != std::floor(v)) {
                throw InvalidInput(
                    "SweepSpec: sample-count grid values must be integers >= 2");
            }
        }
    }
    if (schemes_.empty()) {
        throw InvalidInput("SweepSpec: at least one scheme is required");
    }
    std::set<std::string_view> seen;
    for (const NamedScheme& ns : schemes_) {
        if (ns.name.empty() || ns.name.find_first_of(",\n\r") != std::string::npos) {
            throw InvalidInput(
                "SweepSpec: scheme names must be non-empty and free of commas/newlines");
        }
        if (!seen.insert(ns.name).second) {
            throw InvalidInput("SweepSpec: duplicate scheme name '" + ns.name + "'");
        }
    }
    if (!(std::isfinite(sigma_w_) && sigma_w_ >= 0.0)) {
        throw InvalidInput("SweepSpec: sigma_w must be finite and >= 0");
    }
    if (symbols_per_point_ == 0) {
        throw InvalidInput("SweepSpec: symbols_per_point must be >= 1");
    }
}

SweepResult sweep(const SweepSpec& spec, unsigned workers) {
    SweepResult result{.variable = spec.variable(), .rows = {}};
    result.rows.reserve(spec.grid().size() * spec.schemes().size());
    for (const NamedScheme& ns : spec.schemes()) {
        for (double value : spec.grid()) {
            try {
                const bool samples_sweep = spec.variable() == SweepVariable::SamplesN;
                const SchemeParams params =
                    samples_sweep
                        ? ns.params.with_samples(static_cast<std::size_t>(value))
                        : ns.params;
                const double sigma_w = samples_sweep ? spec.sigma_w() : value;
                const BepEstimate sim = run(
                    TrialPlan{
                        .scheme = params,
                        .sigma_w = sigma_w,
                        .num_symbols = spec.symbols_per_point(),
                        .master_seed = spec.master_seed(),
                        .detector = spec.detector(),
                    },
                    workers);
                std::optional<TheoryBep> theory;
                if (closed_form_available(params)) {
                    theory = bep_total(params, sigma_w, params.samples_per_symbol(),
                                       spec.mean_stat(), spec.fidelity());
                }
                result.rows.push_back(SweepRow{
                    .variable = spec.variable(),
                    .value = value,
                    .scheme = ns.name,
                    .sim = sim,
                    .theory = theory,
                });
            } catch (const InvalidInput& e) {
                std::ostringstream msg;
                msg << "sweep cell scheme='" << ns.name << "', "
                    << variable_name(spec.variable()) << "=" << fmt_sci(value) << ": "
                    << e.what();
                throw InvalidInput(msg.str());
            }
        }
    }
    std::sort(result.rows.begin(), result.rows.end(),
              [](const SweepRow& a, const SweepRow& b) {
                  if (a.scheme != b.scheme) return a.scheme < b.scheme;
                  return a.value < b.value;
              });
    return result;
}

std::string to_csv(const SweepResult& result) {
    std::string out =
        "variable_name,variable_value,scheme,sim_pb0,sim_pb1,sim_pb,"
        "se_pb0,se_pb1,theory_pb0,theory_pb1,theory_pb\n";
    for (const SweepRow& row : result.rows) {
        out += variable_name(row.variable);
        out += ',';
        out += fmt_sci(row.value);
        out += ',';
        out += row.scheme;
        out += ',';
        out += fmt_sci(row.sim.p_b0);
        out += ',';
        out += fmt_sci(row.sim.p_b1);
        out += ',';
        out += fmt_sci(row.sim.p_b);
        out += ',';
        out += fmt_sci(row.sim.se_b0);
        out += ',';
        out += fmt_sci(row.sim.se_b1);
        out += ',';
        if (row.theory) {
            out += fmt_sci(row.theory->p_b0);
            out += ',';
            out += fmt_sci(row.theory->p_b1);
            out += ',';
            out += fmt_sci(row.theory->p_b);
        } else {
            out += "n/a,n/a,n/a";
        }
        out += '\n';
    }
    return out;
}

namespace {

// Chart geometry (SVG user units).
constexpr double kWidth = 880;
constexpr double kHeight = 560;
constexpr double kPlotLeft = 84;
constexpr double kPlotRight = 640;
constexpr double kPlotTop = 40;
constexpr double kPlotBottom = 488;
constexpr double kLegendX = 660;

constexpr const char* kPalette[] = {"#1b6ca8", "#c23b22", "#2e8540",
                                    "#7d3c98", "#b7950b", "#148f77"};

struct AxisMap {
    double t_min, t_max;     // transformed data range
    bool log_x;

    double x(double value) const {
        const double t = log_x ? std::log10(value) : value;
        return kPlotLeft + (t - t_min) / (t_max - t_min) * (kPlotRight - kPlotLeft);
    }
};

struct YMap {
    int dec_min, dec_max;    // decade bounds of the log axis

    double y(double p) const {
        const double u = std::log10(p);
        return kPlotBottom -
               (u - dec_min) / (dec_max - dec_min) * (kPlotBottom - kPlotTop);
    }
};

struct SeriesPoint {
    double value;
    double p;
};

void append_markers(std::string& svg, const std::vector<SeriesPoint>& pts,
                    const AxisMap& ax, const YMap& ay, const char* color,
                    bool square) {
    for (const SeriesPoint& pt : pts) {
        if (!(pt.p > 0.0)) continue; // not representable on a log axis
        const std::string x = fmt_px(ax.x(pt.value));
        const std::string y = fmt_px(ay.y(pt.p));
        if (square) {
            svg += "<rect x=\"" + fmt_px(ax.x(pt.value) - 3.5) + "\" y=\"" +
                   fmt_px(ay.y(pt.p) - 3.5) +
                   "\" width=\"7\" height=\"7\" fill=\"" + color + "\"/>\n";
        } else {
            svg += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"4\" fill=\"" +
                   color + "\"/>\n";
        }
    }
}

void append_dashed_line(std::string& svg, const std::vector<SeriesPoint>& pts,
                        const AxisMap& ax, const YMap& ay, const char* color,
                        const char* dash) {
    // Break the polyline wherever a point cannot be plotted.
    std::vector<std::string> segment;
    auto flush = [&] {
        if (segment.size() >= 2) {
            svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"1.6\" stroke-dasharray=\"" + dash +
                   "\" points=\"";
            for (std::size_t i = 0; i < segment.size(); ++i) {
                if (i) svg += ' ';
                svg += segment[i];
            }
            svg += "\"/>\n";
        }
        segment.clear();
    };
    for (const SeriesPoint& pt : pts) {
        if (!(pt.p > 0.0)) {
            flush();
            continue;
        }
        segment.push_back(fmt_px(ax.x(pt.value)) + "," + fmt_px(ay.y(pt.p)));
    }
    flush();
}

void append_text(std::string& svg, double x, double y, const std::string& body,
                 const char* anchor = "start", const char* color = "#222222") {
    svg += "<text x=\"" + fmt_px(x) + "\" y=\"" + fmt_px(y) + "\" fill=\"" + color +
           "\" text-anchor=\"" + anchor + "\">" + body + "</text>\n";
}

double nice_step(double range) {
    const double raw = range / 7.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm < 1.5) return mag;
    if (norm < 3.5) return 2.0 * mag;
    if (norm < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

} // namespace

std::string to_svg(const SweepResult& result) {
    for (const SweepRow& row : result.rows) {
        if (row.variable != result.variable) {
            throw InvalidInput("to_svg: rows must all share one sweep variable");
        }
    }
    const bool log_x = result.variable == SweepVariable::SigmaW;

    // Gather per-scheme series in sorted row order.
    std::vector<std::string> scheme_names;
    for (const SweepRow& row : result.rows) {
        if (scheme_names.empty() || scheme_names.back() != row.scheme) {
            scheme_names.push_back(row.scheme);
        }
    }

    // Plottable range over every value that can appear on the chart.
    double t_min = 0.0, t_max = 0.0;
    double p_min = 0.0, p_max = 0.0;
    bool any_t = false, any_p = false;
    for (const SweepRow& row : result.rows) {
        const double t = log_x ? std::log10(row.value) : row.value;
        t_min = any_t ? std::min(t_min, t) : t;
        t_max = any_t ? std::max(t_max, t) : t;
        any_t = true;
        for (double p : {row.sim.p_b0, row.sim.p_b1,
                         row.theory ? row.theory->p_b0 : 0.0,
                         row.theory ? row.theory->p_b1 : 0.0}) {
            if (p > 0.0) {
                p_min = any_p ? std::min(p_min, p) : p;
                p_max = any_p ? std::max(p_max, p) : p;
                any_p = true;
            }
        }
    }
    if (!any_t) {
        t_min = log_x ? -6.0 : 0.0;
        t_max = log_x ? -4.0 : 1.0;
    }
    if (t_min == t_max) {
        t_min -= 1.0;
        t_max += 1.0;
    }
    if (!any_p) {
        p_min = 1e-6;
        p_max = 1.0;
    }
    YMap ay{.dec_min = static_cast<int>(std::floor(std::log10(p_min))),
            .dec_max = static_cast<int>(std::ceil(std::log10(p_max)))};
    if (ay.dec_min == ay.dec_max) {
        --ay.dec_min;
        ++ay.dec_max;
    }
    const AxisMap ax{.t_min = t_min, .t_max = t_max, .log_x = log_x};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt_px(kWidth) + "\" height=\"" + fmt_px(kHeight) + "\" viewBox=\"0 0 " +
           fmt_px(kWidth) + " " + fmt_px(kHeight) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    svg += "<g font-family=\"Helvetica, Arial, sans-serif\" font-size=\"13\">\n";

    // Gridlines and ticks: y at each decade.
    for (int d = ay.dec_min; d <= ay.dec_max; ++d) {
        const double y = ay.y(std::pow(10.0, d));
        svg += "<line x1=\"" + fmt_px(kPlotLeft) + "\" y1=\"" + fmt_px(y) +
               "\" x2=\"" + fmt_px(kPlotRight) + "\" y2=\"" + fmt_px(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        append_text(svg, kPlotLeft - 8, y + 4, "1e" + std::to_string(d), "end");
    }

    // X ticks: decades on a log axis (dense fallback when fewer than three
    // land inside), a rounded step on a linear axis.
    std::vector<double> ticks;
    if (log_x) {
        for (int d = static_cast<int>(std::ceil(t_min));
             d <= static_cast<int>(std::floor(t_max)); ++d) {
            ticks.push_back(std::pow(10.0, d));
        }
        if (ticks.size() < 3) {
            ticks.clear();
            for (int i = 0; i <= 4; ++i) {
                ticks.push_back(std::pow(10.0, t_min + (t_max - t_min) * i / 4.0));
            }
        }
    } else {
        const double step = nice_step(t_max - t_min);
        for (double v = std::ceil(t_min / step) * step; v <= t_max + 1e-9 * step;
             v += step) {
            ticks.push_back(v);
        }
    }
    for (double tick : ticks) {
        const double x = ax.x(tick);
        svg += "<line x1=\"" + fmt_px(x) + "\" y1=\"" + fmt_px(kPlotBottom) +
               "\" x2=\"" + fmt_px(x) + "\" y2=\"" + fmt_px(kPlotBottom + 6) +
               "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        append_text(svg, x, kPlotBottom + 22, fmt_tick(tick), "middle");
    }

    // Frame and axis labels.
    svg += "<rect x=\"" + fmt_px(kPlotLeft) + "\" y=\"" + fmt_px(kPlotTop) +
           "\" width=\"" + fmt_px(kPlotRight - kPlotLeft) + "\" height=\"" +
           fmt_px(kPlotBottom - kPlotTop) +
           "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
    append_text(svg, (kPlotLeft + kPlotRight) / 2, kHeight - 18,
                log_x ? "sigma_w (V)" : "samples per symbol", "middle");
    svg += "<text x=\"20\" y=\"" + fmt_px((kPlotTop + kPlotBottom) / 2) +
           "\" fill=\"#222222\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           fmt_px((kPlotTop + kPlotBottom) / 2) +
           ")\">bit error probability</text>\n";

    // Series and legend.
    double legend_y = kPlotTop + 10;
    std::size_t scheme_index = 0;
    for (const std::string& name : scheme_names) {
        const char* color =
            kPalette[scheme_index++ % (sizeof kPalette / sizeof kPalette[0])];
        std::vector<SeriesPoint> sim_b0, sim_b1, th_b0, th_b1;
        for (const SweepRow& row : result.rows) {
            if (row.scheme != name) continue;
            sim_b0.push_back({row.value, row.sim.p_b0});
            sim_b1.push_back({row.value, row.sim.p_b1});
            if (row.theory) {
                th_b0.push_back({row.value, row.theory->p_b0});
                th_b1.push_back({row.value, row.theory->p_b1});
            }
        }
        append_markers(svg, sim_b0, ax, ay, color, /*square=*/false);
        append_markers(svg, sim_b1, ax, ay, color, /*square=*/true);
        append_dashed_line(svg, th_b0, ax, ay, color, "6,3");
        append_dashed_line(svg, th_b1, ax, ay, color, "2,2");

        svg += "<circle cx=\"" + fmt_px(kLegendX + 8) + "\" cy=\"" +
               fmt_px(legend_y - 4) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
        append_text(svg, kLegendX + 20, legend_y, name + " pb0 sim");
        legend_y += 20;
        svg += "<rect x=\"" + fmt_px(kLegendX + 4.5) + "\" y=\"" +
               fmt_px(legend_y - 7.5) + "\" width=\"7\" height=\"7\" fill=\"" +
               color + "\"/>\n";
        append_text(svg, kLegendX + 20, legend_y, name + " pb1 sim");
        legend_y += 20;
        if (!th_b0.empty()) {
            svg += "<line x1=\"" + fmt_px(kLegendX) + "\" y1=\"" +
                   fmt_px(legend_y - 4) + "\" x2=\"" + fmt_px(kLegendX + 16) +
                   "\" y2=\"" + fmt_px(legend_y - 4) + "\" stroke=\"" + color +
                   "\" stroke-width=\"1.6\" stroke-dasharray=\"6,3\"/>\n";
            append_text(svg, kLegendX + 20, legend_y, name + " pb0 theory");
            legend_y += 20;
            svg += "<line x1=\"" + fmt_px(kLegendX) + "\" y1=\"" +
                   fmt_px(legend_y - 4) + "\" x2=\"" + fmt_px(kLegendX + 16) +
                   "\" y2=\"" + fmt_px(legend_y - 4) + "\" stroke=\"" + color +
                   "\" stroke-width=\"1.6\" stroke-dasharray=\"2,2\"/>\n";
            append_text(svg, kLegendX + 20, legend_y, name + " pb1 theory");
            legend_y += 20;
        }
        legend_y += 8;
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace gqnm
