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
#ifndef PPC_PPF_HPP
#define PPC_PPF_HPP

#include <variant>

namespace ppc {

/**
 * @brief Finite-time performance envelope that starts centred on the
 *        measured initial error and collapses to (-lambda_inf, lambda_inf)
 *        at the preset settling time t_f.
 *
 *   Pu(t) = (e0 + delta - lambda_inf) h(t) + lambda_inf
 *   Pl(t) = (e0 - delta + lambda_inf) h(t) - lambda_inf
 *   h(t)  = (t_f - t)/t_f * exp(1 - t_f/(t_f - t)),   t < t_f
 *   h(t)  = 0,                                         t >= t_f
 *
 * h and all of its derivatives vanish as t -> t_f from the left, so the
 * envelope is smooth across the switch.
 */
struct NovelPpfParams {
    double e0 = 0.0;          ///< measured initial tracking error [rad]
    double delta = 0.1;       ///< initial half-width offset [rad]
    double lambda_inf = 0.01; ///< terminal half-width [rad]
    double t_f = 1.5;         ///< preset settling time [s]

    /// Throws ParameterError unless delta > lambda_inf > 0, t_f > 0, e0 finite.
    void validate() const;
    bool operator==(const NovelPpfParams&) const = default;
};

/// rho(t) = (rho0 - rho_inf) exp(-k t) + rho_inf, envelope (-rho, rho).
struct ExpPpfParams {
    double rho0 = 0.48;
    double rho_inf = 0.01;
    double k = 2.0;

    void validate() const;
    bool operator==(const ExpPpfParams&) const = default;
};

/// Bound values and their first two time derivatives at one instant.
struct EnvelopeSample {
    double pu = 0.0;
    double pl = 0.0;
    double pu_dot = 0.0;
    double pl_dot = 0.0;
    double pu_ddot = 0.0;
    double pl_ddot = 0.0;

    double width() const noexcept { return pu - pl; }
    double width_dot() const noexcept { return pu_dot - pl_dot; }
    double width_ddot() const noexcept { return pu_ddot - pl_ddot; }
};

EnvelopeSample eval_novel(const NovelPpfParams& params, double t);
EnvelopeSample eval_exp(const ExpPpfParams& params, double t);

/// Either envelope family behind one evaluation call.
class Envelope {
public:
    using Params = std::variant<NovelPpfParams, ExpPpfParams>;

    explicit Envelope(Params params);

    EnvelopeSample sample(double t) const;
    const Params& params() const noexcept { return params_; }
    bool is_novel() const noexcept { return std::holds_alternative<NovelPpfParams>(params_); }

private:
    Params params_;
};

}  // namespace ppc

#endif  // PPC_PPF_HPP
