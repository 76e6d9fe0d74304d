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
#ifndef PPC_PLANT_HPP
#define PPC_PLANT_HPP

#include <array>
#include <numbers>
#include <optional>
#include <string_view>

namespace ppc {

enum class Channel { elevation, pitch };

std::string_view to_string(Channel channel);

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/**
 * @brief One channel of the tracking-error model
 *
 *   e1_dot = e2
 *   e2_dot = g v + f(e1, e2) + d(t)
 *
 * with the configurable drift f = c0 + c1 e1 + c2 e2 + c3 sin(e1).
 */
struct ChannelParams {
    double g = 1.0;
    std::array<double, 4> f_coeffs{};
    Channel channel = Channel::elevation;

    double drift(double e1, double e2) const noexcept;
    void validate() const;
    bool operator==(const ChannelParams&) const = default;
};

/// d(t) = amplitude sin(frequency t + phase)
struct DisturbanceSpec {
    double amplitude = 0.0;
    double frequency = 1.0;
    double phase = 0.0;

    double operator()(double t) const noexcept;
    void validate() const;
    bool operator==(const DisturbanceSpec&) const = default;
};

/// x_d(t) = amplitude sin(frequency t + phase) + offset
struct ReferenceTrajectory {
    double amplitude = 0.2;
    double frequency = 0.08;
    double phase = -std::numbers::pi / 2.0;
    double offset = 0.0;

    void validate() const;
    bool operator==(const ReferenceTrajectory&) const = default;
};

struct ReferenceSample {
    double x = 0.0;
    double x_dot = 0.0;
    double x_ddot = 0.0;
};

ReferenceSample desired_trajectory(double t, const ReferenceTrajectory& ref = {});

/// Mechanical limits on elevation (alpha) and pitch (beta), radians.
struct OperatingDomain {
    double alpha_min = deg_to_rad(-27.5);
    double alpha_max = deg_to_rad(30.0);
    double beta_min = deg_to_rad(-45.0);
    double beta_max = deg_to_rad(45.0);
};

enum class Axis { alpha, beta };

struct DomainViolation {
    Axis axis;
    double value;
    double bound;
};

/// Inclusive bounds check. A violation is returned, never thrown.
std::optional<DomainViolation> check_domain(double alpha, double beta, const OperatingDomain& domain = {});

struct ErrorRates {
    double e1_dot;
    double e2_dot;
};

ErrorRates error_dynamics(double e1, double e2, double v, double t, const ChannelParams& params,
                          const DisturbanceSpec& dist);

}  // namespace ppc

#endif  // PPC_PLANT_HPP
