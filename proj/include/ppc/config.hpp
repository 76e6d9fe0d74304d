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
#ifndef PPC_CONFIG_HPP
#define PPC_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ppc/simulator.hpp"

namespace ppc {

/// Config document rejected; key() names the offending key ("section.key") when there is one.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message);
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/**
 * Parse a scenario document. The format is INI: sections [scenario], [plant],
 * [disturbance], [envelope], [transform], [controller], [integrator], one
 * `key = value` per line, `;` starts a comment. See docs/config.md for the
 * full key list. Every invariant is checked; failures throw ConfigError.
 */
Scenario parse_config(std::string_view text);

/// Reads and parses a file; I/O failures are reported as ConfigError too.
Scenario load_config(const std::string& path);

/// Canonical document; parse_config(write_config(s)) == s.
std::string write_config(const Scenario& scenario);

/// Proposed scheme with the Case 1 settings.
Scenario case1_scenario();

/// Exponential envelope + tanh transform baseline, same plant and gains as case 1.
Scenario case2_baseline_scenario();

/// "case1" -> {proposed}; "case2" -> {proposed, baseline}. Unknown names throw ConfigError.
std::vector<Scenario> builtin_case(std::string_view name);

/// Apply `section.key=value` on top of an existing scenario (used by sweeps).
Scenario with_override(const Scenario& base, std::string_view dotted_key, std::string_view value);

}  // namespace ppc

#endif  // PPC_CONFIG_HPP
