// Copyright 2026 The slocc-invariants Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line surface tying the library together for batch use and CI.
//
// Subcommands:
//   compute <state>             invariants IV, F1..F10, aggregate F, D1..D3
//   classify <state>            signature, certification verdict, matches
//   catalog list|show <name>    canonical states and encoded properties
//   match <state> <state>       IV-based orbit separation test
//   verify tables|identities|oracles   randomized exact verification
//   count <n>                   degenerate SLOCC class count d(n)
//   nf <state>                  generalized n-qubit invariant f
//
// State arguments accept an inline ket expression or `@path` to a file in
// the same format.  `--machine` switches every subcommand to line-oriented
// `key<TAB>value` output.  Exit codes: 0 success, 1 verification violation,
// 2 usage error (the offending token is reported).

#ifndef SLOCC_CLI_HPP_
#define SLOCC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace slocc {

/// Exit codes returned by run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/**
 * Parses and runs one invocation.  `args` holds the arguments WITHOUT the
 * program name (e.g. {"compute", "(|0>+|15>)/sqrt(2)"}).  All regular output
 * goes to `out`, diagnostics and usage errors to `err`.  Never throws:
 * internal errors are reported on `err` with a nonzero exit code.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Convenience overload writing to std::cout / std::cerr.
int run_cli(const std::vector<std::string>& args);

/// main()-style adapter: skips argv[0].
int run_cli(int argc, const char* const* argv);

}  // namespace slocc

#endif  // SLOCC_CLI_HPP_
