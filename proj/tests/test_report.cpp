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
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ppc/config.hpp"
#include "ppc/errors.hpp"
#include "ppc/report.hpp"

using namespace ppc;

namespace {

Trace rows(std::size_t n)
{
    Trace trace;
    trace.dt = 0.01;
    trace.lambda_inf = 0.01;
    trace.t_f = 0.01;
    for (std::size_t i = 0; i < n; ++i) {
        TraceRow r;
        r.t = 0.01 * static_cast<double>(i);
        r.e1 = -0.1 / static_cast<double>(i + 1);
        r.pu = 0.2;
        r.pl = -0.2;
        trace.rows.push_back(r);
    }
    return trace;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::string csv(const Trace& trace, std::size_t decimation = 1)
{
    std::ostringstream out;
    write_csv(trace, out, decimation);
    return out.str();
}

}  // namespace

TEST_CASE("csv layout")
{
    const std::string empty = csv(Trace{});
    CHECK(empty == std::string(kCsvHeader) + "\n");

    const std::string three = csv(rows(3));
    const auto ls = lines(three);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "t,alpha,e1,e2,pu,pl,z1,z2,s,v,d,m3,a1est");
    CHECK(std::count(ls[1].begin(), ls[1].end(), ',') == 12);
    CHECK(three.find('\r') == std::string::npos);
    CHECK(three.back() == '\n');
    CHECK(ls[2].rfind("0.01,", 0) == 0);
}

TEST_CASE("csv values keep 17 significant digits")
{
    Trace t = rows(1);
    t.rows[0].e1 = 0.1;
    t.rows[0].v = 1.0 / 3.0;
    const auto ls = lines(csv(t));
    CHECK(ls[1].find("0.10000000000000001") != std::string::npos);
    CHECK(ls[1].find("0.33333333333333331") != std::string::npos);
    std::istringstream fields(ls[1]);
    std::string first;
    std::getline(fields, first, ',');
    CHECK(std::stod(first) == 0.0);
}

TEST_CASE("csv decimation")
{
    CHECK(lines(csv(rows(11), 5)).size() == 1 + 3);
    CHECK(lines(csv(rows(12), 5)).size() == 1 + 3);
    CHECK(lines(csv(rows(1), 10)).size() == 2);
    std::ostringstream sink;
    CHECK_THROWS_AS(write_csv(rows(3), sink, 0), ParameterError);
}

TEST_CASE("case 1 csv at decimation 10 has 6001 data rows")
{
    const Trace trace = run(case1_scenario());
    const std::string text = csv(trace, 10);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6002);
    CHECK(text == csv(run(case1_scenario()), 10));
}

TEST_CASE("single trace plot")
{
    const Trace t = rows(50);
    const PlotSeries one[] = {{&t, "case <1> & co"}};
    std::ostringstream out;
    write_plot(one, out);
    const std::string svg = out.str();
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    const auto ls = lines(svg);
    CHECK(std::count_if(ls.begin(), ls.end(),
                        [](const std::string& l) { return l.find("<polyline") != std::string::npos; }) == 3);
    CHECK(svg.find("case &lt;1&gt; &amp; co") != std::string::npos);
    CHECK(svg.find("t [s]") != std::string::npos);
    CHECK(svg.find("[rad]") != std::string::npos);
}

TEST_CASE("comparison plot has three panels")
{
    const Trace a = rows(50);
    const Trace b = rows(50);
    const PlotSeries two[] = {{&a, "proposed"}, {&b, "baseline"}};
    std::ostringstream out;
    write_plot(two, out, 0.2);
    const std::string svg = out.str();
    const auto ls = lines(svg);
    CHECK(std::count_if(ls.begin(), ls.end(),
                        [](const std::string& l) { return l.find("<polyline") != std::string::npos; }) == 6);
    CHECK(svg.find("Transient response") != std::string::npos);
    CHECK(svg.find("Steady-state response") != std::string::npos);
}

TEST_CASE("plot errors")
{
    std::ostringstream out;
    CHECK_THROWS_AS(write_plot({}, out), ParameterError);
    CHECK_THROWS_AS(emit_plot({}, "unused.svg"), ParameterError);
    const Trace t = rows(5);
    const PlotSeries one[] = {{&t, "x"}};
    CHECK_THROWS(emit_plot(one, "/nonexistent/dir/plot.svg"));
    CHECK_THROWS(emit_csv(t, "/nonexistent/dir/trace.csv"));
}

TEST_CASE("text reports")
{
    const Trace t = rows(20);
    const std::string m = format_metrics("demo", t, metrics(t));
    CHECK(m.find("demo") != std::string::npos);
    CHECK(m.find("overshoot") != std::string::npos);
    CHECK(m.find("settling") != std::string::npos);

    const std::string c = format_comparison("a", "b", compare(t, t, 0.1));
    CHECK(c.find("overshoot") != std::string::npos);
    CHECK(c.find("no") != std::string::npos);
}
