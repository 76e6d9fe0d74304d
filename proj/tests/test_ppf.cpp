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
#include <cmath>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "ppc/errors.hpp"
#include "ppc/plant.hpp"
#include "ppc/ppf.hpp"

using namespace ppc;

namespace {

// alpha(0) - x_d(0) for the Case 1 settings.
const double kCase1E0 = deg_to_rad(-24.0) + 0.2;

NovelPpfParams case1_params()
{
    return {kCase1E0, 0.1, 0.01, 1.5};
}

using oracle::close_relative;

}  // namespace

TEST_CASE("novel envelope starts at e0 +/- delta")
{
    const EnvelopeSample s = eval_novel(case1_params(), 0.0);
    CHECK(std::abs(s.pu - (kCase1E0 + 0.1)) <= 1e-12);
    CHECK(std::abs(s.pl - (kCase1E0 - 0.1)) <= 1e-12);
    CHECK(s.pu == doctest::Approx(-0.118879).epsilon(1e-6));
    CHECK(s.pl == doctest::Approx(-0.318879).epsilon(1e-6));
}

TEST_CASE("novel envelope is terminal after t_f")
{
    for (double t : {1.5, 2.0, 10.0, 1e6}) {
        const EnvelopeSample s = eval_novel(case1_params(), t);
        CHECK(s.pu == 0.01);
        CHECK(s.pl == -0.01);
        CHECK(s.pu_dot == 0.0);
        CHECK(s.pl_dot == 0.0);
        CHECK(s.pu_ddot == 0.0);
        CHECK(s.pl_ddot == 0.0);
    }
}

TEST_CASE("novel envelope at half the settling time")
{
    // Frozen from a 40-digit evaluation of the closed form.
    const EnvelopeSample s = eval_novel(case1_params(), 0.75);
    CHECK(s.pu == doctest::Approx(-0.013705971016202311).epsilon(1e-13));
    CHECK(s.pl == doctest::Approx(-0.066815120721632120).epsilon(1e-13));
    CHECK(s.pu_dot == doctest::Approx(0.094823884064809245).epsilon(1e-12));
    CHECK(s.pu_ddot == doctest::Approx(-0.16857579389299421).epsilon(1e-12));
}

TEST_CASE("exponential envelope")
{
    const ExpPpfParams p{0.48, 0.01, 2.0};
    CHECK(eval_exp(p, 0.0).pu == doctest::Approx(0.48));
    CHECK(eval_exp(p, 1.0).pu == doctest::Approx(0.073607583121207965).epsilon(1e-14));
    CHECK(eval_exp(p, 1.0).pl == doctest::Approx(-0.073607583121207965).epsilon(1e-14));
    CHECK(eval_exp(p, 400.0).pu == doctest::Approx(0.01).epsilon(1e-15));

    const oracle::Exponential o{0.48L, 0.01L, 2.0L};
    for (double t : {0.1, 0.5, 1.3, 3.0}) {
        const EnvelopeSample s = eval_exp(p, t);
        auto up = [&](long double x) { return o.upper_transient(x); };
        CHECK(close_relative(s.pu_dot, oracle::central_first(up, t, 1e-6L), 1e-7L));
        CHECK(close_relative(s.pu_ddot, oracle::central_second(up, t, 1e-5L), 1e-6L));
        CHECK(s.pl_dot == -s.pu_dot);
    }
}

TEST_CASE("parameter and time errors")
{
    CHECK_THROWS_AS(eval_novel(case1_params(), std::numeric_limits<double>::quiet_NaN()), ParameterError);
    CHECK_THROWS_AS(eval_novel(case1_params(), std::numeric_limits<double>::infinity()), ParameterError);
    CHECK_THROWS_AS(eval_novel(case1_params(), -1.0), ParameterError);
    CHECK_THROWS_AS(eval_novel({0.0, 0.01, 0.01, 1.0}, 0.0), ParameterError);
    CHECK_THROWS_AS(eval_novel({0.0, 0.1, 0.0, 1.0}, 0.0), ParameterError);
    CHECK_THROWS_AS(eval_novel({0.0, 0.1, 0.01, 0.0}, 0.0), ParameterError);
    CHECK_THROWS_AS(eval_novel({std::numeric_limits<double>::infinity(), 0.1, 0.01, 1.0}, 0.0), ParameterError);
    CHECK_THROWS_AS(eval_exp({0.01, 0.01, 2.0}, 0.0), ParameterError);
    CHECK_THROWS_AS(eval_exp({0.48, 0.01, 0.0}, 0.0), ParameterError);
    CHECK_THROWS_AS(Envelope(ExpPpfParams{0.48, -0.01, 2.0}), ParameterError);
}

TEST_CASE("width stays positive on a dense grid")
{
    const NovelPpfParams params[] = {case1_params(), {0.35, 0.1, 0.01, 1.5}, {0.0, 0.02, 0.019, 0.1}};
    for (const auto& p : params) {
        for (int i = 0; i <= 20000; ++i) {
            const double t = 3.0 * p.t_f * i / 20000.0;
            REQUIRE(eval_novel(p, t).width() > 0.0);
        }
    }
    const ExpPpfParams e{0.48, 0.01, 2.0};
    for (int i = 0; i <= 20000; ++i) {
        REQUIRE(eval_exp(e, 0.01 * i).width() > 0.0);
    }
}

TEST_CASE("left-limit continuity and vanishing slope at t_f")
{
    const NovelPpfParams p = case1_params();
    double previous = std::abs(eval_novel(p, p.t_f - 1e-3).pu - p.lambda_inf);
    CHECK(previous < 1e-12);
    const double closer = std::abs(eval_novel(p, p.t_f - 1e-6).pu - p.lambda_inf);
    CHECK(closer <= previous);
    CHECK(std::abs(eval_novel(p, p.t_f - 1e-6).pu_dot) < 1e-6);
    CHECK(std::abs(eval_novel(p, p.t_f - 1e-6).pl_dot) < 1e-6);
    // Guard band: within 1e-12 t_f of the switch the terminal branch is used.
    CHECK(eval_novel(p, p.t_f * (1.0 - 1e-13)).pu == p.lambda_inf);
}

TEST_CASE("analytic derivatives match finite differences before t_f")
{
    const NovelPpfParams params[] = {case1_params(), {0.35, 0.2, 0.05, 2.0}};
    for (const auto& p : params) {
        const oracle::Novel o{p.e0, p.delta, p.lambda_inf, p.t_f};
        auto up = [&](long double t) { return o.upper_transient(t); };
        auto lo = [&](long double t) { return o.lower_transient(t); };
        std::vector<double> grid;
        for (int i = 1; i < 400; ++i) grid.push_back((p.t_f - 1e-3) * i / 400);
        for (int i = 1; i <= 50; ++i) grid.push_back(p.t_f - 1e-3 - 4e-5 * i);
        for (const double t : grid) {
            const EnvelopeSample s = eval_novel(p, t);
            // The transient varies on a time scale of tau^2/T_f near the switch.
            const double tau = p.t_f - t;
            const long double h = std::min(1e-6, 1e-4 * tau * tau / p.t_f);
            INFO("t = " << t);
            REQUIRE(close_relative(s.pu_dot, oracle::central_first(up, t, h), 1e-5L));
            REQUIRE(close_relative(s.pl_dot, oracle::central_first(lo, t, h), 1e-5L));
            REQUIRE(close_relative(s.pu_ddot, oracle::central_second(up, t, h), 1e-5L));
            REQUIRE(close_relative(s.pl_ddot, oracle::central_second(lo, t, h), 1e-5L));
        }
    }
}

TEST_CASE("positive initial error mirrors the geometry")
{
    const NovelPpfParams p{0.3, 0.1, 0.01, 1.0};
    const EnvelopeSample s = eval_novel(p, 0.0);
    CHECK(s.pu == doctest::Approx(0.4));
    CHECK(s.pl == doctest::Approx(0.2));
    CHECK(eval_novel(p, 0.9).pl > -0.01);
}

TEST_CASE("Envelope dispatches on its parameter family")
{
    const Envelope novel(case1_params());
    const Envelope exp(ExpPpfParams{0.48, 0.01, 2.0});
    CHECK(novel.is_novel());
    CHECK_FALSE(exp.is_novel());
    CHECK(novel.sample(0.75).pu == eval_novel(case1_params(), 0.75).pu);
    CHECK(exp.sample(1.0).pu == eval_exp({0.48, 0.01, 2.0}, 1.0).pu);
}
