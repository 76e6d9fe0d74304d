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
#ifndef PPC_CLI_HPP
#define PPC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ppc {

/// Process exit codes of the ppc_sim front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitSimulationFailed = 1,  ///< envelope violation or divergence
    kExitConfigError = 2,       ///< bad config, bad arguments, or I/O failure
};

/// Runs `ppc_sim` with argv[0] included. Subcommands: simulate, compare, sweep, validate.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ppc

#endif  // PPC_CLI_HPP
