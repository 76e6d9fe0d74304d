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
#ifndef PPC_ERRORS_HPP
#define PPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppc {

/// Invalid parameter set or argument (non-finite time, broken invariant).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the open domain of an inverse map.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Upper and lower bound coincide or cross.
class DegenerateEnvelopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The control input cannot be formed (zero input gain, non-positive M3).
class ActuationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief Tracking error left the open interval (pl, pu).
 *
 * Carries the offending sample so the simulator can attach it to the
 * partial trace. The time is NaN when the violation was detected outside
 * of a time-stepping context.
 */
class EnvelopeViolation : public std::runtime_error {
public:
    EnvelopeViolation(double t, double e, double pu, double pl);

    double t() const noexcept { return t_; }
    double e() const noexcept { return e_; }
    double pu() const noexcept { return pu_; }
    double pl() const noexcept { return pl_; }

private:
    double t_;
    double e_;
    double pu_;
    double pl_;
};

}  // namespace ppc

#endif  // PPC_ERRORS_HPP
