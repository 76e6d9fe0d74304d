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
#include "ppc/ppf.hpp"

#include <cmath>
#include <string>

#include "ppc/errors.hpp"

namespace ppc {

namespace {

constexpr double kTerminalGuard = 1e-12;

void require_time(double t)
{
    if (!std::isfinite(t)) {
        throw ParameterError("envelope time must be finite");
    }
    if (t < 0.0) {
        throw ParameterError("envelope time must be >= 0, got " + std::to_string(t));
    }
}

struct Decay {
    double h = 0.0;
    double h_dot = 0.0;
    double h_ddot = 0.0;
};

// h(t) = (tau/T) exp(1 - T/tau), tau = T - t. Closed-form derivatives:
//   h'  = -E (1/T + 1/tau)
//   h'' =  E T / tau^3
Decay finite_time_decay(double t, double t_f)
{
    const double tau = t_f - t;
    if (tau <= kTerminalGuard * t_f) {
        return {};
    }
    const double E = std::exp(1.0 - t_f / tau);
    return {tau / t_f * E, -E * (1.0 / t_f + 1.0 / tau), E * t_f / (tau * tau * tau)};
}

}  // namespace

void NovelPpfParams::validate() const
{
    if (!std::isfinite(e0)) {
        throw ParameterError("e0 must be finite");
    }
    if (!(lambda_inf > 0.0) || !std::isfinite(lambda_inf)) {
        throw ParameterError("lambda_inf > 0 required");
    }
    if (!(delta > lambda_inf) || !std::isfinite(delta)) {
        throw ParameterError("delta > lambda_inf required");
    }
    if (!(t_f > 0.0) || !std::isfinite(t_f)) {
        throw ParameterError("t_f > 0 required");
    }
}

void ExpPpfParams::validate() const
{
    if (!(rho_inf > 0.0) || !std::isfinite(rho_inf)) {
        throw ParameterError("rho_inf > 0 required");
    }
    if (!(rho0 > rho_inf) || !std::isfinite(rho0)) {
        throw ParameterError("rho0 > rho_inf required");
    }
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw ParameterError("k > 0 required");
    }
}

EnvelopeSample eval_novel(const NovelPpfParams& params, double t)
{
    require_time(t);
    params.validate();

    const double lam = params.lambda_inf;
    if (t >= params.t_f) {
        return {lam, -lam, 0.0, 0.0, 0.0, 0.0};
    }

    const Decay d = finite_time_decay(t, params.t_f);
    const double upper_gain = params.e0 + params.delta - lam;
    const double lower_gain = params.e0 - params.delta + lam;
    return {
        upper_gain * d.h + lam,
        lower_gain * d.h - lam,
        upper_gain * d.h_dot,
        lower_gain * d.h_dot,
        upper_gain * d.h_ddot,
        lower_gain * d.h_ddot,
    };
}

EnvelopeSample eval_exp(const ExpPpfParams& params, double t)
{
    require_time(t);
    params.validate();

    const double decay = (params.rho0 - params.rho_inf) * std::exp(-params.k * t);
    const double rho = decay + params.rho_inf;
    const double rho_dot = -params.k * decay;
    const double rho_ddot = params.k * params.k * decay;
    return {rho, -rho, rho_dot, -rho_dot, rho_ddot, -rho_ddot};
}

Envelope::Envelope(Params params) : params_(std::move(params))
{
    std::visit([](const auto& p) { p.validate(); }, params_);
}

EnvelopeSample Envelope::sample(double t) const
{
    if (const auto* novel = std::get_if<NovelPpfParams>(&params_)) {
        return eval_novel(*novel, t);
    }
    return eval_exp(std::get<ExpPpfParams>(params_), t);
}

}  // namespace ppc
