/*
 Copyright 2026 The ppc-heli Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "ppc/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/core.h>

#include "ppc/errors.hpp"

namespace ppc {

namespace {

constexpr std::size_t kMaxPlotPoints = 2000;
constexpr std::array<const char*, 4> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string g17(double v)
{
    return fmt::format("{:.17g}", v);
}

std::string xml_escape(std::string_view text)
{
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out) {
        throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
    }
}

struct Curve {
    std::vector<std::pair<double, double>> points;
    std::string color;
    std::string label;
    bool dashed = false;
};

struct Panel {
    std::string title;
    double t0;
    double t1;
    std::vector<Curve> curves;
};

template <typename Field>
Curve sample_curve(const Trace& trace, double t0, double t1, Field field)
{
    Curve c;
    std::size_t first = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        if (trace.rows[i].t < t0) {
            first = i + 1;
        }
        if (trace.rows[i].t <= t1) {
            last = i + 1;
        }
    }
    if (last <= first) {
        return c;
    }
    const std::size_t stride = std::max<std::size_t>(1, (last - first) / kMaxPlotPoints);
    for (std::size_t i = first; i < last; i += stride) {
        c.points.emplace_back(trace.rows[i].t, field(trace.rows[i]));
    }
    if ((last - 1 - first) % stride != 0) {
        c.points.emplace_back(trace.rows[last - 1].t, field(trace.rows[last - 1]));
    }
    return c;
}

// Nice tick step covering `span` with roughly `target` intervals.
double tick_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            return m * mag;
        }
    }
    return 10.0 * mag;
}

void draw_panel(std::ostream& out, const Panel& panel, double x0, double y0, double w, double h)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& c : panel.curves) {
        for (const auto& [t, v] : c.points) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!std::isfinite(lo)) {
        lo = -1.0;
        hi = 1.0;
    }
    if (hi - lo < 1e-12) {
        lo -= 1e-3;
        hi += 1e-3;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
    const double t0 = panel.t0;
    const double t1 = panel.t1 > panel.t0 ? panel.t1 : panel.t0 + 1.0;

    auto px = [&](double t) { return x0 + (t - t0) / (t1 - t0) * w; };
    auto py = [&](double v) { return y0 + h - (v - lo) / (hi - lo) * h; };

    out << fmt::format(R"(<rect x="{:.2f}" y="{:.2f}" width="{:.2f}" height="{:.2f}" fill="none" stroke="#000"/>)",
                       x0, y0, w, h)
        << '\n';
    out << fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="14" text-anchor="middle">{}</text>)",
                       x0 + w / 2, y0 - 8, panel.title)
        << '\n';

    const double tstep = tick_step(t1 - t0, 8);
    for (double t = std::ceil(t0 / tstep) * tstep; t <= t1 + 1e-12; t += tstep) {
        out << fmt::format(R"(<line x1="{0:.2f}" y1="{1:.2f}" x2="{0:.2f}" y2="{2:.2f}" stroke="#ddd"/>)", px(t),
                           y0, y0 + h)
            << '\n';
        out << fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="10" text-anchor="middle">{:g}</text>)", px(t),
                           y0 + h + 14, t)
            << '\n';
    }
    const double vstep = tick_step(hi - lo, 6);
    for (double v = std::ceil(lo / vstep) * vstep; v <= hi; v += vstep) {
        out << fmt::format(R"(<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="#ddd"/>)", x0, py(v),
                           x0 + w, py(v))
            << '\n';
        out << fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="10" text-anchor="end">{:.3g}</text>)", x0 - 4,
                           py(v) + 3, std::abs(v) < vstep * 1e-6 ? 0.0 : v)
            << '\n';
    }
    out << fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="11" text-anchor="middle">t [s]</text>)",
                       x0 + w / 2, y0 + h + 30)
        << '\n';
    out << fmt::format(
               R"svg(<text x="{0:.2f}" y="{1:.2f}" font-size="11" text-anchor="middle" transform="rotate(-90 {0:.2f} {1:.2f})">e1 [rad]</text>)svg",
               x0 - 48, y0 + h / 2)
        << '\n';

    out << fmt::format(R"(<clipPath id="clip{0:.0f}"><rect x="{1:.2f}" y="{0:.2f}" width="{2:.2f}" height="{3:.2f}"/></clipPath>)",
                       y0, x0, w, h)
        << '\n';
    double legend_y = y0 + 14;
    for (const auto& c : panel.curves) {
        if (c.points.empty()) {
            continue;
        }
        out << fmt::format(R"svg(<polyline clip-path="url(#clip{:.0f})" fill="none" stroke="{}" stroke-width="1.2"{} points=")svg",
                           y0, c.color, c.dashed ? R"( stroke-dasharray="5,3")" : "");
        for (const auto& [t, v] : c.points) {
            out << fmt::format("{:.2f},{:.2f} ", px(t), py(v));
        }
        out << "\"/>\n";
        out << fmt::format(R"(<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="{}" stroke-width="2"{}/>)",
                           x0 + w - 150, legend_y - 4, x0 + w - 130, legend_y - 4, c.color,
                           c.dashed ? R"( stroke-dasharray="5,3")" : "")
            << '\n';
        out << fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="10">{}</text>)", x0 + w - 125, legend_y,
                           xml_escape(c.label))
            << '\n';
        legend_y += 14;
    }
}

double end_time(std::span<const PlotSeries> series)
{
    double t = 0.0;
    for (const auto& s : series) {
        if (!s.trace->rows.empty()) {
            t = std::max(t, s.trace->rows.back().t);
        }
    }
    return t;
}

std::vector<Curve> error_curves(std::span<const PlotSeries> series, double t0, double t1, bool with_bounds)
{
    std::vector<Curve> curves;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::string color = kPalette[i % kPalette.size()];
        Curve e = sample_curve(*series[i].trace, t0, t1, [](const TraceRow& r) { return r.e1; });
        e.color = color;
        e.label = series[i].label + " e1";
        curves.push_back(std::move(e));
        if (with_bounds) {
            Curve pu = sample_curve(*series[i].trace, t0, t1, [](const TraceRow& r) { return r.pu; });
            pu.color = color;
            pu.label = series[i].label + " Pu";
            pu.dashed = true;
            Curve pl = sample_curve(*series[i].trace, t0, t1, [](const TraceRow& r) { return r.pl; });
            pl.color = color;
            pl.label = series[i].label + " Pl";
            pl.dashed = true;
            curves.push_back(std::move(pu));
            curves.push_back(std::move(pl));
        }
    }
    return curves;
}

}  // namespace

void write_csv(const Trace& trace, std::ostream& out, std::size_t decimation)
{
    if (decimation == 0) {
        throw ParameterError("decimation must be >= 1");
    }
    out << kCsvHeader << '\n';
    for (std::size_t i = 0; i < trace.rows.size(); i += decimation) {
        const TraceRow& r = trace.rows[i];
        out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", g17(r.t), g17(r.alpha), g17(r.e1),
                           g17(r.e2), g17(r.pu), g17(r.pl), g17(r.z1), g17(r.z2), g17(r.s), g17(r.v), g17(r.d),
                           g17(r.m3), g17(r.a1est));
    }
}

void emit_csv(const Trace& trace, const std::filesystem::path& path, std::size_t decimation)
{
    std::ofstream out = open_output(path);
    write_csv(trace, out, decimation);
    finish(out, path);
}

void write_plot(std::span<const PlotSeries> series, std::ostream& out, double steady_start)
{
    if (series.empty()) {
        throw ParameterError("plot needs at least one trace");
    }
    const double t_end = end_time(series);

    std::vector<Panel> panels;
    if (series.size() == 1) {
        panels.push_back({"Tracking error and performance envelope", 0.0, t_end,
                          error_curves(series, 0.0, t_end, true)});
    } else {
        const double transient_end = std::min(5.0, t_end);
        panels.push_back({"(a) Tracking error", 0.0, t_end, error_curves(series, 0.0, t_end, false)});
        panels.push_back({"(b) Transient response", 0.0, transient_end,
                          error_curves(series, 0.0, transient_end, false)});
        const double s0 = std::min(steady_start, t_end);
        panels.push_back({"(c) Steady-state response", s0, t_end, error_curves(series, s0, t_end, false)});
    }

    constexpr double width = 900.0;
    constexpr double panel_h = 260.0;
    constexpr double margin_l = 80.0;
    constexpr double margin_r = 30.0;
    constexpr double margin_t = 40.0;
    constexpr double gap = 80.0;
    const double height = margin_t + panels.size() * (panel_h + gap);

    out << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
    out << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{0:.0f}" height="{1:.0f}" viewBox="0 0 {0:.0f} {1:.0f}" font-family="sans-serif">)",
                       width, height)
        << '\n';
    out << R"(<rect width="100%" height="100%" fill="#fff"/>)" << '\n';
    for (std::size_t i = 0; i < panels.size(); ++i) {
        draw_panel(out, panels[i], margin_l, margin_t + i * (panel_h + gap), width - margin_l - margin_r, panel_h);
    }
    out << "</svg>\n";
}

void emit_plot(std::span<const PlotSeries> series, const std::filesystem::path& path, double steady_start)
{
    if (series.empty()) {
        throw ParameterError("plot needs at least one trace");
    }
    std::ofstream out = open_output(path);
    write_plot(series, out, steady_start);
    finish(out, path);
}

std::string format_metrics(const std::string& title, const Trace& trace, const Metrics& m)
{
    std::string out;
    out += fmt::format("== {} ==\n", title);
    out += "# overshoot: largest excursion of e1 past zero on the side opposite e1(0)\n";
    out += "# settling time: first t after which |e1| < lambda_inf for the rest of the run\n";
    const char* status = trace.termination == Termination::completed            ? "completed"
                         : trace.termination == Termination::envelope_violation ? "envelope violation"
                                                                                : "diverged";
    out += fmt::format("status                  {}\n", status);
    if (!trace.diagnostic.empty()) {
        out += fmt::format("diagnostic              {}\n", trace.diagnostic);
    }
    out += fmt::format("rows                    {}\n", trace.rows.size());
    out += fmt::format("overshoot [rad]         {:.6e}\n", m.overshoot);
    out += m.settling_time ? fmt::format("settling time [s]       {:.6f}\n", *m.settling_time)
                           : std::string("settling time [s]       not settled\n");
    out += fmt::format("max |e1| after t_f      {:.6e}   (t_f = {:g} s, lambda_inf = {:g})\n",
                       m.max_abs_error_after_tf, trace.t_f, trace.lambda_inf);
    out += fmt::format("envelope violations     {}\n", m.envelope_violations);
    out += fmt::format("domain violations       {}\n", m.domain_violations);
    out += fmt::format("sup |d/dt(M3 d)|        {:.6e}\n", m.sup_assumption1);
    out += fmt::format("max |z1| |z2| |s|       {:.6e} {:.6e} {:.6e}\n", m.max_abs_z1, m.max_abs_z2, m.max_abs_s);
    return out;
}

std::string format_comparison(const std::string& label_a, const std::string& label_b,
                              const ComparisonReport& report)
{
    std::string out;
    out += fmt::format("{:<28}{:>18}{:>18}\n", "metric", label_a, label_b);
    out += fmt::format("{:<28}{:>18.6e}{:>18.6e}\n", "overshoot [rad]", report.a.overshoot, report.b.overshoot);
    auto settle = [](const Metrics& m) {
        return m.settling_time ? fmt::format("{:.4f}", *m.settling_time) : std::string("not settled");
    };
    out += fmt::format("{:<28}{:>18}{:>18}\n", "settling time [s]", settle(report.a), settle(report.b));
    out += fmt::format("{:<28}{:>18.6e}{:>18.6e}\n",
                       fmt::format("max |e1|, t >= {:g} s", report.steady_window_start), report.steady_max_a,
                       report.steady_max_b);
    out += fmt::format("{:<28}{:>18}{:>18}\n", "envelope violations", report.a.envelope_violations,
                       report.b.envelope_violations);
    out += fmt::format("{:<28}{:>18.6e}{:>18.6e}\n", "sup |d/dt(M3 d)|", report.a.sup_assumption1,
                       report.b.sup_assumption1);
    double max_delta = 0.0;
    for (double d : report.e1_delta) {
        max_delta = std::max(max_delta, std::abs(d));
    }
    out += fmt::format("max |e1_a - e1_b|           {:.6e}\n", max_delta);
    out += fmt::format("verdict: overshoot {} < {}      {}\n", label_a, label_b,
                       report.overshoot_a_lt_b ? "yes" : "no");
    out += fmt::format("verdict: steady error {} < {}   {}\n", label_a, label_b,
                       report.steady_error_a_lt_b ? "yes" : "no");
    return out;
}

}  // namespace ppc
