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
#include "ppc/controller.hpp"

#include <cmath>

#include "ppc/errors.hpp"

namespace ppc {

namespace {

bool finite_non_negative(double x)
{
    return std::isfinite(x) && x >= 0.0;
}

}  // namespace

double sgn(double x) noexcept
{
    return static_cast<double>((x > 0.0) - (x < 0.0));
}

double signed_power(double x, double q) noexcept
{
    if (x == 0.0) {
        return 0.0;
    }
    return std::pow(std::abs(x), q) * sgn(x);
}

void SurfaceParams::validate() const
{
    if (!(gamma1 > 0.0) || !std::isfinite(gamma1)) {
        throw ParameterError("gamma1 > 0 required");
    }
    if (!(gamma2 > 0.0) || !std::isfinite(gamma2)) {
        throw ParameterError("gamma2 > 0 required");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw ParameterError("0 < p < 1 required");
    }
}

void GainConfig::validate() const
{
    if (!finite_non_negative(l1) || !finite_non_negative(l2) || !finite_non_negative(l3) ||
        !finite_non_negative(l4)) {
        throw ParameterError("gains l1..l4 must be finite and >= 0");
    }
    if (!(m > 2.0) || !std::isfinite(m)) {
        throw ParameterError("m > 2 required");
    }
}

void ControllerConfig::validate() const
{
    surface.validate();
    gains.validate();
}

std::string_view to_string(W1ZTerm term)
{
    return term == W1ZTerm::z1 ? "z1" : "zs";
}

double surface_term_zs(double z1, double z2, const SurfaceParams& params)
{
    const double q = 2.0 * params.p / (1.0 + params.p);
    return params.gamma1 * signed_power(z1, params.p) + params.gamma2 * signed_power(z2, q);
}

double sliding_surface(double z2, const ControllerState& state)
{
    return z2 + state.int_zs;
}

double control_w1(double s, double z_term, double drift, const GainConfig& gains,
                  const ControllerState& state)
{
    const double reaching = gains.l1 * signed_power(s, (gains.m - 1.0) / gains.m) + gains.l2 * s;
    return -reaching - z_term - drift - state.int_robust;
}

double control_v1(double w1, double m3_val, double f1, double g1)
{
    if (g1 == 0.0) {
        throw ActuationError("input gain g1 is zero");
    }
    if (!(m3_val > 0.0)) {
        throw ActuationError("M3 must be positive");
    }
    return (w1 / m3_val - f1) / g1;
}

double robust_integrand(double s, const GainConfig& gains)
{
    return gains.l3 * signed_power(s, (gains.m - 2.0) / gains.m) + gains.l4 * s;
}

ControlOutput compute_control(double z1, double z2, double drift, double m3_val, double f1, double g1,
                              const ControllerConfig& config, const ControllerState& state)
{
    ControlOutput out;
    out.zs = surface_term_zs(z1, z2, config.surface);
    out.s = sliding_surface(z2, state);
    const double z_term = config.w1_z_term == W1ZTerm::z1 ? z1 : out.zs;
    out.w1 = control_w1(out.s, z_term, drift, config.gains, state);
    out.v = control_v1(out.w1, m3_val, f1, g1);
    out.robust = robust_integrand(out.s, config.gains);
    return out;
}

}  // namespace ppc
