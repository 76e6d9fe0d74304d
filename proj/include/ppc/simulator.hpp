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
#ifndef PPC_SIMULATOR_HPP
#define PPC_SIMULATOR_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ppc/controller.hpp"
#include "ppc/plant.hpp"
#include "ppc/ppf.hpp"
#include "ppc/transform.hpp"

namespace ppc {

/// Novel envelope parameters minus e0, which is read from the plant at t = 0.
struct NovelEnvelopeSpec {
    double delta = 0.1;
    double lambda_inf = 0.01;
    double t_f = 1.5;

    bool operator==(const NovelEnvelopeSpec&) const = default;
};

using EnvelopeSpec = std::variant<NovelEnvelopeSpec, ExpPpfParams>;

struct Scenario {
    std::string name = "scenario";
    ChannelParams plant;
    ReferenceTrajectory reference;
    DisturbanceSpec disturbance;
    EnvelopeSpec envelope = NovelEnvelopeSpec{};
    TransformKind transform = TransformKind::arctan;
    ControllerConfig controller;
    double initial_angle = 0.0;  ///< rad
    double initial_rate = 0.0;   ///< rad/s
    double duration = 60.0;      ///< s
    double dt = 1e-3;            ///< s

    /// Throws ParameterError naming the broken invariant.
    void validate() const;
    /// Terminal half-width of the chosen envelope.
    double lambda_inf() const;
    /// Time after which the envelope is (effectively) at its terminal width.
    double settle_time() const;
    std::size_t step_count() const;

    bool operator==(const Scenario&) const = default;
};

struct TraceRow {
    double t = 0.0;
    double alpha = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double pu = 0.0;
    double pl = 0.0;
    double z1 = 0.0;
    double z2 = 0.0;
    double s = 0.0;
    double v = 0.0;
    double d = 0.0;
    double m3 = 0.0;
    double a1est = 0.0;  ///< central-difference d/dt(m3 d)

    bool operator==(const TraceRow&) const = default;
};

enum class Termination { completed, envelope_violation, diverged };

struct ViolationRecord {
    double t;
    double e;
    double pu;
    double pl;
};

struct Trace {
    std::vector<TraceRow> rows;
    double dt = 0.0;
    double lambda_inf = 0.0;
    double t_f = 0.0;
    Termination termination = Termination::completed;
    std::optional<ViolationRecord> violation;
    std::string diagnostic;
    std::size_t domain_violations = 0;
};

struct Metrics {
    double overshoot = 0.0;
    std::optional<double> settling_time;  ///< empty when not settled
    double max_abs_error_after_tf = 0.0;
    std::size_t envelope_violations = 0;
    double sup_assumption1 = 0.0;
    std::size_t domain_violations = 0;
    double max_abs_z1 = 0.0;
    double max_abs_z2 = 0.0;
    double max_abs_s = 0.0;
};

/**
 * @brief Integrate the closed loop with classical fixed-step RK4.
 *
 * State is (e1, e2, int_zs, int_robust). The envelope, transform and control
 * law are re-evaluated at every stage time. One row is logged per step,
 * including t = 0. Containment failure or a non-finite state stops the run
 * and is reported through Trace::termination; the rows up to that point are
 * kept.
 */
Trace run(const Scenario& scenario);

/// Runs each scenario on a worker pool; results come back in input order.
std::vector<Trace> run_all(std::span<const Scenario> scenarios, unsigned threads = 0);

/// Per-row central-difference estimate of d/dt(m3 d); one-sided at the ends.
std::vector<double> assumption1_series(const Trace& trace);

/// sup of |assumption1_series|. Throws ParameterError for fewer than 3 rows.
double monitor_assumption1(const Trace& trace);

/// Throws ParameterError for an empty trace.
Metrics metrics(const Trace& trace, double lambda_inf, double t_f);
Metrics metrics(const Trace& trace);

/// max |e1| over rows with t >= t_start.
double max_abs_error_from(const Trace& trace, double t_start);

struct ComparisonReport {
    Metrics a;
    Metrics b;
    std::vector<double> e1_delta;  ///< e1_a - e1_b per row
    double steady_window_start = 10.0;
    double steady_max_a = 0.0;
    double steady_max_b = 0.0;
    bool overshoot_a_lt_b = false;
    bool steady_error_a_lt_b = false;
};

/// Throws ParameterError unless both traces share dt and row count.
ComparisonReport compare(const Trace& a, const Trace& b, double steady_window_start = 10.0);

}  // namespace ppc

#endif  // PPC_SIMULATOR_HPP
