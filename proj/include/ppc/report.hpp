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
#ifndef PPC_REPORT_HPP
#define PPC_REPORT_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ppc/simulator.hpp"

namespace ppc {

inline constexpr const char* kCsvHeader = "t,alpha,e1,e2,pu,pl,z1,z2,s,v,d,m3,a1est";

/// Header plus every `decimation`-th row (row 0 always included), 17 significant digits.
void write_csv(const Trace& trace, std::ostream& out, std::size_t decimation = 1);

/// Throws std::runtime_error on I/O failure.
void emit_csv(const Trace& trace, const std::filesystem::path& path, std::size_t decimation = 1);

struct PlotSeries {
    const Trace* trace;
    std::string label;
};

/**
 * Self-contained SVG. One series: e1 with its envelope bounds. Two or more:
 * overlaid error curves in three panels (full run, transient zoom over the
 * first 5 s, steady-state zoom from `steady_start`).
 */
void write_plot(std::span<const PlotSeries> series, std::ostream& out, double steady_start = 10.0);

/// Throws ParameterError on an empty list, std::runtime_error on I/O failure.
void emit_plot(std::span<const PlotSeries> series, const std::filesystem::path& path,
               double steady_start = 10.0);

std::string format_metrics(const std::string& title, const Trace& trace, const Metrics& m);
std::string format_comparison(const std::string& label_a, const std::string& label_b,
                              const ComparisonReport& report);

}  // namespace ppc

#endif  // PPC_REPORT_HPP
