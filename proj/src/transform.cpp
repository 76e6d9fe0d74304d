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
#include "ppc/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ppc/errors.hpp"

namespace ppc {

namespace {

using std::numbers::pi;

// Normalised distances to the lower and upper bound, each computed from its
// own side so neither loses precision near the opposite edge.
struct Coordinates {
    double xi;   // (e - pl)/W
    double eta;  // (pu - e)/W = 1 - xi
};

Coordinates locate(double e, const EnvelopeSample& env)
{
    const double width = env.width();
    if (!(width > 0.0)) {
        throw DegenerateEnvelopeError("envelope width must be positive");
    }
    if (!(e > env.pl && e < env.pu)) {
        throw EnvelopeViolation(std::numeric_limits<double>::quiet_NaN(), e, env.pu, env.pl);
    }
    return {(e - env.pl) / width, (env.pu - e) / width};
}

double z_from(const Coordinates& c, TransformKind kind)
{
    if (kind == TransformKind::tanh) {
        return 0.5 * (std::log(c.xi) - std::log(c.eta));
    }
    // tan(pi (xi - 1/2)) = -cot(pi xi) = cot(pi eta)
    if (c.xi < 0.25) {
        return -1.0 / std::tan(pi * c.xi);
    }
    if (c.eta < 0.25) {
        return 1.0 / std::tan(pi * c.eta);
    }
    return std::tan(pi * (c.xi - 0.5));
}

// dF/dxi and d2F/dxi2 for F = Phi^-1.
double first_derivative(double z, TransformKind kind)
{
    if (kind == TransformKind::tanh) {
        return 1.0 + std::cosh(2.0 * z);  // 2 cosh^2 z
    }
    return pi * (1.0 + z * z);
}

double second_derivative(double z, const Coordinates& c, TransformKind kind)
{
    if (kind == TransformKind::tanh) {
        return (c.xi - c.eta) / (2.0 * c.xi * c.xi * c.eta * c.eta);
    }
    return 2.0 * pi * pi * z * (1.0 + z * z);
}

}  // namespace

std::string_view to_string(TransformKind kind)
{
    return kind == TransformKind::tanh ? "tanh" : "arctan";
}

double phi(double z)
{
    return std::atan(z) / pi + 0.5;
}

double phi_inv(double xi)
{
    if (!(xi > 0.0 && xi < 1.0)) {
        throw DomainError("phi_inv requires 0 < xi < 1");
    }
    return z_from({xi, 1.0 - xi}, TransformKind::arctan);
}

double phi_inv_clamped(double xi)
{
    if (std::isnan(xi)) {
        throw DomainError("phi_inv_clamped: xi is NaN");
    }
    if (xi <= kXiClamp) {
        return z_from({kXiClamp, 1.0}, TransformKind::arctan);
    }
    if (xi >= 1.0 - kXiClamp) {
        return z_from({1.0, kXiClamp}, TransformKind::arctan);
    }
    return phi_inv(xi);
}

double theta(double z)
{
    return std::tanh(z);
}

double theta_inv(double u)
{
    if (!(u > -1.0 && u < 1.0)) {
        throw DomainError("theta_inv requires -1 < u < 1");
    }
    return std::atanh(u);
}

double forward(double e, const EnvelopeSample& env, TransformKind kind)
{
    return z_from(locate(e, env), kind);
}

double reconstruct(double z, const EnvelopeSample& env, TransformKind kind)
{
    if (!std::isfinite(z)) {
        throw DomainError("reconstruct requires finite z");
    }
    const double width = env.width();
    // Phi(-z) = 1 - Phi(z) for both families; anchor on the nearer bound.
    auto normalised = [kind](double x) {
        return kind == TransformKind::tanh ? 0.5 * (std::tanh(x) + 1.0) : phi(x);
    };
    if (z <= 0.0) {
        return env.pl + width * normalised(z);
    }
    return env.pu - width * normalised(-z);
}

double m3(double z1, const EnvelopeSample& env, TransformKind kind)
{
    const double width = env.width();
    if (!(width > 0.0)) {
        throw DegenerateEnvelopeError("m3 requires pu > pl");
    }
    return first_derivative(z1, kind) / width;
}

TransformState transform_state(double e, double e_dot, const EnvelopeSample& env, TransformKind kind)
{
    const Coordinates c = locate(e, env);
    const double width = env.width();
    const double w_dot = env.width_dot();
    const double w_ddot = env.width_ddot();

    const double z = z_from(c, kind);
    const double f1 = first_derivative(z, kind);
    const double f2 = second_derivative(z, c, kind);

    const double xi_dot = (e_dot - env.pl_dot - c.xi * w_dot) / width;
    const double drift_term =
        f2 * xi_dot * xi_dot + f1 * (-env.pl_ddot - c.xi * w_ddot - 2.0 * xi_dot * w_dot) / width;

    return {z, f1 * xi_dot, c.xi, f1 / width, drift_term};
}

double drift(double e, double e_dot, const EnvelopeSample& env, TransformKind kind)
{
    return transform_state(e, e_dot, env, kind).drift;
}

double theta_forward(double e, const EnvelopeSample& env)
{
    return forward(e, env, TransformKind::tanh);
}

double theta_m3(double z1, const EnvelopeSample& env)
{
    return m3(z1, env, TransformKind::tanh);
}

double theta_drift(double e, double e_dot, const EnvelopeSample& env)
{
    return drift(e, e_dot, env, TransformKind::tanh);
}

}  // namespace ppc
