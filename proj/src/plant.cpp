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
#include "ppc/plant.hpp"

#include <cmath>

#include "ppc/errors.hpp"

namespace ppc {

std::string_view to_string(Channel channel)
{
    return channel == Channel::pitch ? "pitch" : "elevation";
}

double ChannelParams::drift(double e1, double e2) const noexcept
{
    return f_coeffs[0] + f_coeffs[1] * e1 + f_coeffs[2] * e2 + f_coeffs[3] * std::sin(e1);
}

void ChannelParams::validate() const
{
    if (g == 0.0 || !std::isfinite(g)) {
        throw ParameterError("plant input gain g must be finite and nonzero");
    }
    for (double c : f_coeffs) {
        if (!std::isfinite(c)) {
            throw ParameterError("drift coefficients must be finite");
        }
    }
}

double DisturbanceSpec::operator()(double t) const noexcept
{
    return amplitude * std::sin(frequency * t + phase);
}

void DisturbanceSpec::validate() const
{
    if (!std::isfinite(amplitude) || !std::isfinite(frequency) || !std::isfinite(phase)) {
        throw ParameterError("disturbance parameters must be finite");
    }
}

void ReferenceTrajectory::validate() const
{
    if (!std::isfinite(amplitude) || !std::isfinite(frequency) || !std::isfinite(phase) ||
        !std::isfinite(offset)) {
        throw ParameterError("reference parameters must be finite");
    }
}

ReferenceSample desired_trajectory(double t, const ReferenceTrajectory& ref)
{
    const double arg = ref.frequency * t + ref.phase;
    const double w = ref.frequency;
    return {
        ref.amplitude * std::sin(arg) + ref.offset,
        ref.amplitude * w * std::cos(arg),
        -ref.amplitude * w * w * std::sin(arg),
    };
}

std::optional<DomainViolation> check_domain(double alpha, double beta, const OperatingDomain& domain)
{
    if (alpha < domain.alpha_min) {
        return DomainViolation{Axis::alpha, alpha, domain.alpha_min};
    }
    if (alpha > domain.alpha_max) {
        return DomainViolation{Axis::alpha, alpha, domain.alpha_max};
    }
    if (beta < domain.beta_min) {
        return DomainViolation{Axis::beta, beta, domain.beta_min};
    }
    if (beta > domain.beta_max) {
        return DomainViolation{Axis::beta, beta, domain.beta_max};
    }
    return std::nullopt;
}

ErrorRates error_dynamics(double e1, double e2, double v, double t, const ChannelParams& params,
                          const DisturbanceSpec& dist)
{
    return {e2, params.g * v + params.drift(e1, e2) + dist(t)};
}

}  // namespace ppc
