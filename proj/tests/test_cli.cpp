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

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ppc/cli.hpp"
#include "ppc/config.hpp"

using namespace ppc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("ppc_cli_" + tag + "_" + std::to_string(::getpid())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "ppc_sim");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("simulate case1 writes csv, plot and report")
{
    TempDir dir("sim");
    const Result r = cli({"simulate", "--case", "case1", "--out", dir.path.string(), "--decimation", "100"});
    CHECK(r.code == kExitOk);
    CHECK(fs::exists(dir.path / "case1.csv"));
    CHECK(fs::exists(dir.path / "case1.svg"));
    CHECK(fs::exists(dir.path / "case1_report.txt"));
    CHECK(r.out.find("overshoot") != std::string::npos);
    const std::string csv = read_file(dir.path / "case1.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 602);
}

TEST_CASE("emit flags suppress outputs")
{
    TempDir dir("flags");
    Scenario s = case1_scenario();
    s.duration = 1.0;
    write_file(dir.path / "short.ini", write_config(s));
    const Result r = cli({"simulate", "--config", (dir.path / "short.ini").string(), "--out",
                          (dir.path / "o").string(), "--no-svg", "--no-report"});
    CHECK(r.code == kExitOk);
    CHECK(fs::exists(dir.path / "o" / "case1.csv"));
    CHECK_FALSE(fs::exists(dir.path / "o" / "case1.svg"));
    CHECK_FALSE(fs::exists(dir.path / "o" / "case1_report.txt"));
}

TEST_CASE("validate exit codes")
{
    TempDir dir("validate");
    write_file(dir.path / "good.ini", write_config(case1_scenario()));
    std::string bad = write_config(case1_scenario());
    bad.replace(bad.find("delta = 0.10000000000000001"), 27, "delta = 0.001");
    write_file(dir.path / "bad.ini", bad);

    CHECK(cli({"validate", "--config", (dir.path / "good.ini").string()}).code == kExitOk);
    const Result r = cli({"validate", "--config", (dir.path / "bad.ini").string()});
    CHECK(r.code == kExitConfigError);
    CHECK(r.err.find("delta > lambda_inf") != std::string::npos);
    CHECK(cli({"validate", "--config", (dir.path / "missing.ini").string()}).code == kExitConfigError);

    const Result printed = cli({"validate", "--case", "case2", "--print"});
    CHECK(printed.code == kExitOk);
    CHECK(printed.out.find("kind = exponential") != std::string::npos);
}

TEST_CASE("zero-gain sabotage exits with the simulation failure code")
{
    TempDir dir("sabotage");
    Scenario s = case1_scenario();
    s.controller.gains = {0.0, 0.0, 0.0, 0.0, 3.0};
    write_file(dir.path / "zero.ini", write_config(s));
    const Result r = cli({"simulate", "--config", (dir.path / "zero.ini").string(), "--out", dir.path.string()});
    CHECK(r.code == kExitSimulationFailed);
    CHECK(fs::exists(dir.path / "case1.csv"));
}

TEST_CASE("usage errors")
{
    CHECK(cli({}).code == kExitConfigError);
    CHECK(cli({"launch"}).code == kExitConfigError);
    CHECK(cli({"simulate", "--case", "case9", "--no-csv", "--no-svg", "--no-report"}).code == kExitConfigError);
    CHECK(cli({"simulate", "--case", "case1", "--config", "x.ini"}).code == kExitConfigError);
    CHECK(cli({"simulate", "--decimation", "0"}).code == kExitConfigError);
    CHECK(cli({"sweep", "--set", "controller.l2"}).code == kExitConfigError);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("compare prints the verdict table")
{
    TempDir dir("compare");
    Scenario a = case1_scenario();
    a.duration = 12.0;
    Scenario b = case2_baseline_scenario();
    b.duration = 12.0;
    write_file(dir.path / "a.ini", write_config(a));
    write_file(dir.path / "b.ini", write_config(b));
    const Result r = cli({"compare", "--config", (dir.path / "a.ini").string(), "--baseline-config",
                          (dir.path / "b.ini").string(), "--out", dir.path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("verdict") != std::string::npos);
    CHECK(fs::exists(dir.path / "compare.svg"));
    CHECK(fs::exists(dir.path / "compare_report.txt"));
    CHECK(cli({"compare", "--config", (dir.path / "a.ini").string()}).code == kExitConfigError);
    CHECK(cli({"compare", "--case", "case1"}).code == kExitConfigError);
}

TEST_CASE("sweep runs the cartesian product")
{
    TempDir dir("sweep");
    Scenario s = case1_scenario();
    s.duration = 2.0;
    write_file(dir.path / "base.ini", write_config(s));
    const Result r = cli({"sweep", "--config", (dir.path / "base.ini").string(), "--set", "controller.l2=40,50",
                          "--set", "envelope.t_f=1.5,2,2.5", "--threads", "3", "--out", dir.path.string()});
    CHECK(r.code == kExitOk);
    const std::string csv = read_file(dir.path / "sweep.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    CHECK(csv.rfind("id,controller.l2,envelope.t_f,status", 0) == 0);
    CHECK(csv.find("\n5,50,2.5,ok,") != std::string::npos);

    const Result failing = cli({"sweep", "--config", (dir.path / "base.ini").string(), "--set",
                                "controller.l1=0", "--set", "controller.l2=0", "--set", "controller.l3=0", "--set",
                                "controller.l4=0", "--out", dir.path.string()});
    CHECK(failing.code == kExitSimulationFailed);
    CHECK(cli({"sweep", "--set", "controller.q=1", "--out", dir.path.string()}).code == kExitConfigError);
}
