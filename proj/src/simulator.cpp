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
#include "ppc/simulator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/core.h>

#include "ppc/errors.hpp"

namespace ppc {

namespace {

using State = std::array<double, 4>;  // e1, e2, int_zs, int_robust

struct Evaluation {
    State rate{};
    TraceRow row;
};

class ClosedLoop {
public:
    ClosedLoop(const Scenario& scenario, Envelope envelope)
        : scenario_(scenario), envelope_(std::move(envelope))
    {
    }

    Evaluation evaluate(double t, const State& x) const
    {
        const EnvelopeSample env = envelope_.sample(t);
        TransformState ts;
        try {
            ts = transform_state(x[0], x[1], env, scenario_.transform);
        } catch (const EnvelopeViolation& err) {
            throw EnvelopeViolation(t, err.e(), err.pu(), err.pl());
        }

        const ChannelParams& plant = scenario_.plant;
        const double f1 = plant.drift(x[0], x[1]);
        const ControlOutput u = compute_control(ts.z1, ts.z2, ts.drift, ts.m3, f1, plant.g,
                                                scenario_.controller, ControllerState{x[2], x[3]});
        const double d = scenario_.disturbance(t);
        const ErrorRates rates = error_dynamics(x[0], x[1], u.v, t, plant, scenario_.disturbance);

        Evaluation out;
        out.rate = {rates.e1_dot, rates.e2_dot, u.zs, u.robust};
        out.row.t = t;
        out.row.alpha = x[0] + desired_trajectory(t, scenario_.reference).x;
        out.row.e1 = x[0];
        out.row.e2 = x[1];
        out.row.pu = env.pu;
        out.row.pl = env.pl;
        out.row.z1 = ts.z1;
        out.row.z2 = ts.z2;
        out.row.s = u.s;
        out.row.v = u.v;
        out.row.d = d;
        out.row.m3 = ts.m3;
        return out;
    }

private:
    const Scenario& scenario_;
    Envelope envelope_;
};

State axpy(const State& x, double h, const State& k)
{
    State out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + h * k[i];
    }
    return out;
}

bool all_finite(const State& x)
{
    return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

Envelope make_envelope(const Scenario& scenario, double e0)
{
    if (const auto* novel = std::get_if<NovelEnvelopeSpec>(&scenario.envelope)) {
        return Envelope(NovelPpfParams{e0, novel->delta, novel->lambda_inf, novel->t_f});
    }
    return Envelope(std::get<ExpPpfParams>(scenario.envelope));
}

bool is_axis_violation(const TraceRow& row, Channel channel)
{
    const double alpha = channel == Channel::elevation ? row.alpha : 0.0;
    const double beta = channel == Channel::pitch ? row.alpha : 0.0;
    return check_domain(alpha, beta).has_value();
}

}  // namespace

void Scenario::validate() const
{
    plant.validate();
    reference.validate();
    disturbance.validate();
    controller.validate();
    if (const auto* novel = std::get_if<NovelEnvelopeSpec>(&envelope)) {
        NovelPpfParams{0.0, novel->delta, novel->lambda_inf, novel->t_f}.validate();
        if (transform != TransformKind::arctan) {
            throw ParameterError("novel envelope pairs with the arctan transform");
        }
    } else {
        std::get<ExpPpfParams>(envelope).validate();
        if (transform != TransformKind::tanh) {
            throw ParameterError("exponential envelope pairs with the tanh transform");
        }
    }
    if (!std::isfinite(initial_angle) || !std::isfinite(initial_rate)) {
        throw ParameterError("initial state must be finite");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ParameterError("dt > 0 required");
    }
    if (!(duration >= dt) || !std::isfinite(duration)) {
        throw ParameterError("duration >= dt required");
    }
}

double Scenario::lambda_inf() const
{
    if (const auto* novel = std::get_if<NovelEnvelopeSpec>(&envelope)) {
        return novel->lambda_inf;
    }
    return std::get<ExpPpfParams>(envelope).rho_inf;
}

double Scenario::settle_time() const
{
    if (const auto* novel = std::get_if<NovelEnvelopeSpec>(&envelope)) {
        return novel->t_f;
    }
    // Exponential envelope within 1% of its terminal half-width.
    const auto& exp = std::get<ExpPpfParams>(envelope);
    return std::log(100.0 * (exp.rho0 - exp.rho_inf) / exp.rho_inf) / exp.k;
}

std::size_t Scenario::step_count() const
{
    return static_cast<std::size_t>(std::llround(duration / dt));
}

Trace run(const Scenario& scenario)
{
    scenario.validate();

    const ReferenceSample ref0 = desired_trajectory(0.0, scenario.reference);
    State x{scenario.initial_angle - ref0.x, scenario.initial_rate - ref0.x_dot, 0.0, 0.0};
    const ClosedLoop loop(scenario, make_envelope(scenario, x[0]));

    Trace trace;
    trace.dt = scenario.dt;
    trace.lambda_inf = scenario.lambda_inf();
    trace.t_f = scenario.settle_time();

    const std::size_t steps = scenario.step_count();
    const double h = scenario.dt;
    trace.rows.reserve(steps + 1);

    try {
        for (std::size_t k = 0;; ++k) {
            const double t = static_cast<double>(k) * h;
            Evaluation k1 = loop.evaluate(t, x);
            if (!all_finite(k1.rate)) {
                trace.termination = Termination::diverged;
                trace.diagnostic = fmt::format("non-finite closed-loop rate at t={:.17g}", t);
                break;
            }
            if (is_axis_violation(k1.row, scenario.plant.channel)) {
                ++trace.domain_violations;
            }
            trace.rows.push_back(k1.row);
            if (k == steps) {
                break;
            }

            const State k2 = loop.evaluate(t + 0.5 * h, axpy(x, 0.5 * h, k1.rate)).rate;
            const State k3 = loop.evaluate(t + 0.5 * h, axpy(x, 0.5 * h, k2)).rate;
            const State k4 = loop.evaluate(t + h, axpy(x, h, k3)).rate;
            State next;
            for (std::size_t i = 0; i < next.size(); ++i) {
                next[i] = x[i] + h / 6.0 * (k1.rate[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
            if (!all_finite(next)) {
                trace.termination = Termination::diverged;
                trace.diagnostic = fmt::format("non-finite state after step ending at t={:.17g}", t + h);
                break;
            }
            x = next;
        }
    } catch (const EnvelopeViolation& err) {
        trace.termination = Termination::envelope_violation;
        trace.violation = ViolationRecord{err.t(), err.e(), err.pu(), err.pl()};
        trace.diagnostic = err.what();
    } catch (const ActuationError& err) {
        trace.termination = Termination::diverged;
        trace.diagnostic = err.what();
    }

    if (trace.rows.size() >= 3) {
        const std::vector<double> est = assumption1_series(trace);
        for (std::size_t i = 0; i < est.size(); ++i) {
            trace.rows[i].a1est = est[i];
        }
    }
    return trace;
}

std::vector<Trace> run_all(std::span<const Scenario> scenarios, unsigned threads)
{
    std::vector<Trace> out(scenarios.size());
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, scenarios.size())));

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(scenarios.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < scenarios.size(); i = next++) {
            try {
                out[i] = run(scenarios[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    return out;
}

std::vector<double> assumption1_series(const Trace& trace)
{
    const auto& rows = trace.rows;
    const std::size_t n = rows.size();
    if (n < 3) {
        throw ParameterError("assumption monitor needs at least 3 rows");
    }
    auto product = [&](std::size_t i) { return rows[i].m3 * rows[i].d; };
    std::vector<double> out(n);
    const double h = trace.dt;
    out[0] = (product(1) - product(0)) / h;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = (product(i + 1) - product(i - 1)) / (2.0 * h);
    }
    out[n - 1] = (product(n - 1) - product(n - 2)) / h;
    return out;
}

double monitor_assumption1(const Trace& trace)
{
    const std::vector<double> est = assumption1_series(trace);
    double sup = 0.0;
    for (double v : est) {
        sup = std::max(sup, std::abs(v));
    }
    return sup;
}

double max_abs_error_from(const Trace& trace, double t_start)
{
    double out = 0.0;
    for (const TraceRow& row : trace.rows) {
        if (row.t >= t_start) {
            out = std::max(out, std::abs(row.e1));
        }
    }
    return out;
}

Metrics metrics(const Trace& trace, double lambda_inf, double t_f)
{
    const auto& rows = trace.rows;
    if (rows.empty()) {
        throw ParameterError("metrics of an empty trace");
    }

    Metrics out;
    const double e0 = rows.front().e1;
    for (const TraceRow& row : rows) {
        // Excursion past zero on the side opposite the initial error.
        const double excursion = e0 < 0.0 ? row.e1 : (e0 > 0.0 ? -row.e1 : std::abs(row.e1));
        out.overshoot = std::max(out.overshoot, excursion);
        out.max_abs_z1 = std::max(out.max_abs_z1, std::abs(row.z1));
        out.max_abs_z2 = std::max(out.max_abs_z2, std::abs(row.z2));
        out.max_abs_s = std::max(out.max_abs_s, std::abs(row.s));
    }

    // Last row that is still outside the band decides the settling time.
    auto last_out = std::find_if(rows.rbegin(), rows.rend(),
                                 [&](const TraceRow& row) { return !(std::abs(row.e1) < lambda_inf); });
    if (last_out == rows.rend()) {
        out.settling_time = rows.front().t;
    } else if (last_out != rows.rbegin()) {
        out.settling_time = std::prev(last_out)->t;
    }

    out.max_abs_error_after_tf = max_abs_error_from(trace, t_f);
    out.envelope_violations = trace.violation ? 1 : 0;
    out.domain_violations = trace.domain_violations;
    out.sup_assumption1 = rows.size() >= 3 ? monitor_assumption1(trace) : 0.0;
    return out;
}

Metrics metrics(const Trace& trace)
{
    return metrics(trace, trace.lambda_inf, trace.t_f);
}

ComparisonReport compare(const Trace& a, const Trace& b, double steady_window_start)
{
    if (a.dt != b.dt || a.rows.size() != b.rows.size()) {
        throw ParameterError(fmt::format("traces are on different grids (dt {} vs {}, rows {} vs {})", a.dt,
                                         b.dt, a.rows.size(), b.rows.size()));
    }
    ComparisonReport report;
    report.a = metrics(a);
    report.b = metrics(b);
    report.e1_delta.reserve(a.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        report.e1_delta.push_back(a.rows[i].e1 - b.rows[i].e1);
    }
    report.steady_window_start = steady_window_start;
    report.steady_max_a = max_abs_error_from(a, steady_window_start);
    report.steady_max_b = max_abs_error_from(b, steady_window_start);
    report.overshoot_a_lt_b = report.a.overshoot < report.b.overshoot;
    report.steady_error_a_lt_b = report.steady_max_a < report.steady_max_b;
    return report;
}

}  // namespace ppc
