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
#ifndef PPC_TRANSFORM_HPP
#define PPC_TRANSFORM_HPP

#include <string_view>

#include "ppc/ppf.hpp"

namespace ppc {

/**
 * Error transformations. Both families write the constrained error as
 *
 *   e = Pl + (Pu - Pl) * Phi(z),   xi = (e - Pl)/(Pu - Pl) in (0, 1)
 *
 * with Phi a smooth increasing bijection R -> (0, 1):
 *   arctan: Phi(z) = atan(z)/pi + 1/2
 *   tanh:   Phi(z) = (tanh(z) + 1)/2      (e = rho tanh(z) when Pl = -Pu = -rho)
 *
 * Differentiating z1 = Phi^-1(xi) twice gives
 *
 *   z2     = F'(xi) xi_dot
 *   z2_dot = N + M3 e_ddot
 *   M3     = F'(xi) / W
 *   N      = F''(xi) xi_dot^2 + F'(xi) (-Pl_ddot - xi W_ddot - 2 xi_dot W_dot) / W
 *
 * where F = Phi^-1, W = Pu - Pl, xi_dot = (e_dot - Pl_dot - xi W_dot)/W.
 * See docs/transform.md for the full derivation.
 */
enum class TransformKind { arctan, tanh };

std::string_view to_string(TransformKind kind);

/// Transformed error pair plus the quantities the controller consumes.
struct TransformState {
    double z1 = 0.0;
    double z2 = 0.0;
    double xi = 0.5;
    double m3 = 0.0;
    double drift = 0.0;  ///< N = M1 + M2
};

// arctan family
double phi(double z);
/// Throws DomainError unless 0 < xi < 1.
double phi_inv(double xi);
/// phi_inv with xi clamped to [1e-9, 1 - 1e-9]; diagnostics only.
double phi_inv_clamped(double xi);

// tanh family
double theta(double z);
/// Inverse of theta on (-1, 1); throws DomainError outside.
double theta_inv(double u);

/// Lower/upper clamp used by phi_inv_clamped.
inline constexpr double kXiClamp = 1e-9;

/// z1 from e. Throws EnvelopeViolation unless pl < e < pu.
double forward(double e, const EnvelopeSample& env, TransformKind kind = TransformKind::arctan);

/// e from z; strictly inside (pl, pu) for every finite z.
double reconstruct(double z, const EnvelopeSample& env, TransformKind kind = TransformKind::arctan);

/// Coefficient of e_ddot in z2_dot. Throws DegenerateEnvelopeError if pu <= pl.
double m3(double z1, const EnvelopeSample& env, TransformKind kind = TransformKind::arctan);

/// N = M1 + M2: every term of z2_dot not multiplying e_ddot.
double drift(double e, double e_dot, const EnvelopeSample& env,
             TransformKind kind = TransformKind::arctan);

/// z1, z2, xi, M3 and N in one pass.
TransformState transform_state(double e, double e_dot, const EnvelopeSample& env,
                               TransformKind kind = TransformKind::arctan);

// Baseline names for the tanh family; equivalent to the generic calls with
// TransformKind::tanh on a symmetric envelope.
double theta_forward(double e, const EnvelopeSample& env);
double theta_m3(double z1, const EnvelopeSample& env);
double theta_drift(double e, double e_dot, const EnvelopeSample& env);

}  // namespace ppc

#endif  // PPC_TRANSFORM_HPP
