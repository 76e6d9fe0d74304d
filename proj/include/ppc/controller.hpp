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
#ifndef PPC_CONTROLLER_HPP
#define PPC_CONTROLLER_HPP

#include <string_view>

namespace ppc {

/// sgn with sgn(0) = 0.
double sgn(double x) noexcept;

/// |x|^q sgn(x); finite for every finite x, q >= 0.
double signed_power(double x, double q) noexcept;

/// Integral sliding surface s = z2 + int(zs), zs = g1|z1|^p sgn z1 + g2|z2|^(2p/(1+p)) sgn z2.
struct SurfaceParams {
    double gamma1 = 10.0;
    double gamma2 = 0.5;
    double p = 0.6;

    void validate() const;
    bool operator==(const SurfaceParams&) const = default;
};

/// Constant stand-ins for the feedback gain schedules.
struct GainConfig {
    double l1 = 20.0;
    double l2 = 50.0;
    double l3 = 20.0;
    double l4 = 50.0;
    double m = 3.0;

    void validate() const;
    bool operator==(const GainConfig&) const = default;
};

/// Which quantity the bare "-z" term of w1 subtracts.
enum class W1ZTerm { zs, z1 };

std::string_view to_string(W1ZTerm term);

struct ControllerConfig {
    SurfaceParams surface;
    GainConfig gains;
    W1ZTerm w1_z_term = W1ZTerm::zs;

    void validate() const;
    bool operator==(const ControllerConfig&) const = default;
};

/// Integral states; advanced by the simulator alongside the plant.
struct ControllerState {
    double int_zs = 0.0;
    double int_robust = 0.0;
};

double surface_term_zs(double z1, double z2, const SurfaceParams& params);

double sliding_surface(double z2, const ControllerState& state);

/**
 * w1 = -l1|s|^((m-1)/m) sgn s - l2 s - z_term - N - int_robust
 *
 * z_term is zs or z1 depending on ControllerConfig::w1_z_term; callers that
 * pass zs directly get the default reading.
 */
double control_w1(double s, double z_term, double drift, const GainConfig& gains,
                  const ControllerState& state);

/// v1 = (w1/m3 - f1)/g1. Throws ActuationError if g1 == 0 or m3 <= 0.
double control_v1(double w1, double m3_val, double f1, double g1);

/// l3|s|^((m-2)/m) sgn s + l4 s
double robust_integrand(double s, const GainConfig& gains);

/// Everything the control law produces at one evaluation.
struct ControlOutput {
    double zs = 0.0;
    double s = 0.0;
    double w1 = 0.0;
    double v = 0.0;
    double robust = 0.0;  ///< d/dt of ControllerState::int_robust
};

/// Full law from transformed coordinates to plant input.
ControlOutput compute_control(double z1, double z2, double drift, double m3_val, double f1, double g1,
                              const ControllerConfig& config, const ControllerState& state);

}  // namespace ppc

#endif  // PPC_CONTROLLER_HPP
