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
#include "ppc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "ppc/config.hpp"
#include "ppc/errors.hpp"
#include "ppc/report.hpp"

namespace ppc {

namespace fs = std::filesystem;

namespace {

struct Source {
    std::string case_name;
    std::string config_path;

    std::vector<Scenario> load() const
    {
        if (!config_path.empty()) {
            return {load_config(config_path)};
        }
        return builtin_case(case_name.empty() ? "case1" : case_name);
    }
};

struct Emit {
    std::string out_dir = "out";
    std::size_t decimation = 1;
    bool csv = true;
    bool svg = true;
    bool report = true;
};

void add_source(CLI::App* cmd, Source& src)
{
    auto* c = cmd->add_option("--case", src.case_name, "built-in case (case1 | case2)");
    auto* f = cmd->add_option("--config", src.config_path, "scenario config file");
    c->excludes(f);
}

void add_emit(CLI::App* cmd, Emit& emit)
{
    cmd->add_option("--out", emit.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--decimation", emit.decimation, "write every N-th trace row to CSV")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("!--no-csv", emit.csv, "skip the CSV trace");
    cmd->add_flag("!--no-svg", emit.svg, "skip the SVG plot");
    cmd->add_flag("!--no-report", emit.report, "skip the text report");
}

fs::path prepare_dir(const std::string& dir)
{
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) {
        throw std::runtime_error(fmt::format("cannot create output directory '{}': {}", dir, ec.message()));
    }
    return p;
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
    }
}

bool failed(const Trace& trace)
{
    return trace.termination != Termination::completed;
}

int cmd_simulate(const Source& src, const Emit& emit, std::ostream& out)
{
    const std::vector<Scenario> scenarios = src.load();
    const fs::path dir = prepare_dir(emit.out_dir);
    int code = kExitOk;
    for (const Scenario& s : scenarios) {
        const Trace trace = run(s);
        const std::string text = format_metrics(s.name, trace, metrics(trace));
        out << text;
        if (emit.csv) {
            emit_csv(trace, dir / (s.name + ".csv"), emit.decimation);
        }
        if (emit.svg && !trace.rows.empty()) {
            const PlotSeries series[] = {{&trace, s.name}};
            emit_plot(series, dir / (s.name + ".svg"));
        }
        if (emit.report) {
            write_text(dir / (s.name + "_report.txt"), text);
        }
        if (failed(trace)) {
            code = kExitSimulationFailed;
        }
    }
    return code;
}

int cmd_compare(const Source& src, const std::string& baseline_path, double steady_start, const Emit& emit,
                std::ostream& out)
{
    std::vector<Scenario> pair;
    if (!src.config_path.empty() || !baseline_path.empty()) {
        if (src.config_path.empty() || baseline_path.empty()) {
            throw ConfigError("", "compare needs both --config and --baseline-config");
        }
        pair = {load_config(src.config_path), load_config(baseline_path)};
    } else {
        pair = builtin_case(src.case_name.empty() ? "case2" : src.case_name);
    }
    if (pair.size() != 2) {
        throw ConfigError("case", "compare needs a paired case (case2)");
    }
    if (pair[0].name == pair[1].name) {
        pair[1].name += "-b";
    }

    const std::vector<Trace> traces = run_all(pair, 2);
    const fs::path dir = prepare_dir(emit.out_dir);
    std::string text;
    for (std::size_t i = 0; i < 2; ++i) {
        text += format_metrics(pair[i].name, traces[i], metrics(traces[i]));
    }
    if (failed(traces[0]) || failed(traces[1])) {
        out << text;
        return kExitSimulationFailed;
    }

    const ComparisonReport report = compare(traces[0], traces[1], steady_start);
    text += format_comparison(pair[0].name, pair[1].name, report);
    out << text;
    for (std::size_t i = 0; i < 2 && emit.csv; ++i) {
        emit_csv(traces[i], dir / (pair[i].name + ".csv"), emit.decimation);
    }
    if (emit.svg) {
        const PlotSeries series[] = {{&traces[0], pair[0].name}, {&traces[1], pair[1].name}};
        emit_plot(series, dir / "compare.svg", steady_start);
    }
    if (emit.report) {
        write_text(dir / "compare_report.txt", text);
    }
    return kExitOk;
}

struct Axis {
    std::string key;
    std::vector<std::string> values;
};

Axis parse_axis(const std::string& spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
        throw ConfigError(spec, fmt::format("--set expects section.key=v1,v2,... got '{}'", spec));
    }
    Axis axis{spec.substr(0, eq), {}};
    std::string rest = spec.substr(eq + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
        const auto comma = rest.find(',', start);
        const std::string v = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (v.empty()) {
            throw ConfigError(axis.key, fmt::format("empty value in --set '{}'", spec));
        }
        axis.values.push_back(v);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return axis;
}

int cmd_sweep(const Source& src, const std::vector<std::string>& sets, unsigned threads, const std::string& out_dir,
              std::ostream& out)
{
    const Scenario base = src.load().front();
    std::vector<Axis> axes;
    for (const auto& s : sets) {
        axes.push_back(parse_axis(s));
    }

    // Cartesian product, last axis varying fastest.
    std::vector<Scenario> grid{base};
    std::vector<std::vector<std::string>> labels{{}};
    for (const Axis& axis : axes) {
        std::vector<Scenario> next;
        std::vector<std::vector<std::string>> next_labels;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (const auto& v : axis.values) {
                next.push_back(with_override(grid[i], axis.key, v));
                next_labels.push_back(labels[i]);
                next_labels.back().push_back(v);
            }
        }
        grid = std::move(next);
        labels = std::move(next_labels);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i].name = fmt::format("{}-{:04d}", base.name, i);
    }

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::string csv = "id";
    for (const Axis& axis : axes) {
        csv += "," + axis.key;
    }
    csv += ",status,overshoot,settling_time,max_abs_error_after_tf,envelope_violations,domain_violations,"
           "sup_assumption1\n";

    int code = kExitOk;
    out << fmt::format("{:<6}{:<14}{:>16}{:>14}{:>16}\n", "id", "status", "overshoot", "settling", "max|e1|>t_f");
    const std::span<const Scenario> all(grid);
    for (std::size_t first = 0; first < grid.size(); first += threads) {
        const std::size_t count = std::min<std::size_t>(threads, grid.size() - first);
        const std::vector<Trace> traces = run_all(all.subspan(first, count), threads);
        for (std::size_t j = 0; j < count; ++j) {
            const std::size_t id = first + j;
            const Trace& tr = traces[j];
            const Metrics m = metrics(tr);
            const char* status = tr.termination == Termination::completed            ? "ok"
                                 : tr.termination == Termination::envelope_violation ? "violation"
                                                                                     : "diverged";
            if (failed(tr)) {
                code = kExitSimulationFailed;
            }
            const std::string settle = m.settling_time ? fmt::format("{:.17g}", *m.settling_time) : "";
            csv += fmt::format("{}", id);
            for (const auto& v : labels[id]) {
                csv += "," + v;
            }
            csv += fmt::format(",{},{:.17g},{},{:.17g},{},{},{:.17g}\n", status, m.overshoot, settle,
                               m.max_abs_error_after_tf, m.envelope_violations, m.domain_violations,
                               m.sup_assumption1);
            out << fmt::format("{:<6}{:<14}{:>16.6e}{:>14}{:>16.6e}\n", id, status, m.overshoot,
                               m.settling_time ? fmt::format("{:.4f}", *m.settling_time) : "-",
                               m.max_abs_error_after_tf);
        }
    }
    write_text(prepare_dir(out_dir) / "sweep.csv", csv);
    return code;
}

int cmd_validate(const Source& src, bool print, std::ostream& out)
{
    for (const Scenario& s : src.load()) {
        out << fmt::format("{}: ok\n", s.name);
        if (print) {
            out << write_config(s);
        }
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Prescribed-performance attitude tracking simulator", "ppc_sim"};
    app.require_subcommand(1);

    Source src;
    Emit emit;
    std::string baseline_path;
    double steady_start = 10.0;
    std::vector<std::string> sets;
    unsigned threads = 0;
    std::string sweep_out = "out";
    bool print = false;

    auto* simulate = app.add_subcommand("simulate", "run one scenario (or each scenario of a built-in case)");
    add_source(simulate, src);
    add_emit(simulate, emit);

    auto* cmp = app.add_subcommand("compare", "run a proposed/baseline pair and print the verdict table");
    add_source(cmp, src);
    cmp->add_option("--baseline-config", baseline_path, "baseline scenario config (with --config)");
    cmp->add_option("--steady-start", steady_start, "start of the steady-state window [s]")->capture_default_str();
    add_emit(cmp, emit);

    auto* sweep = app.add_subcommand("sweep", "run a parameter grid");
    add_source(sweep, src);
    sweep->add_option("--set", sets, "section.key=v1,v2,... (repeatable; grid is the cartesian product)")
        ->required();
    sweep->add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
    sweep->add_option("--out", sweep_out, "output directory")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "parse and check a config without running it");
    add_source(validate, src);
    validate->add_flag("--print", print, "print the canonical form");

    std::vector<const char*> cargv;
    cargv.reserve(argv.size());
    for (const auto& a : argv) {
        cargv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(src, emit, out);
        }
        if (cmp->parsed()) {
            return cmd_compare(src, baseline_path, steady_start, emit, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(src, sets, threads, sweep_out, out);
        }
        return cmd_validate(src, print, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitConfigError;
}

}  // namespace ppc
