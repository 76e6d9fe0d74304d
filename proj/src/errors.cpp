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
#include "ppc/errors.hpp"

#include <fmt/core.h>

namespace ppc {

EnvelopeViolation::EnvelopeViolation(double t, double e, double pu, double pl)
    : std::runtime_error(fmt::format("envelope violation at t={:.17g}: e={:.17g} not in ({:.17g}, {:.17g})",
                                     t, e, pl, pu)),
      t_(t),
      e_(e),
      pu_(pu),
      pl_(pl)
{
}

}  // namespace ppc
