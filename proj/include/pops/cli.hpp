// Copyright 2026 The power-ops Authors
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

// The power-ops command line: derive, verify and normalize. Exit codes are
// 0 on success, 1 on a formula mismatch or failed derivation, 2 on bad usage.

#ifndef POPS_CLI_HPP
#define POPS_CLI_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pops {

/// Named formulas in canonical text, in output order.
using Emission = std::vector<std::pair<std::string, std::string>>;

struct DeriveOptions {
  int order = -1;  // target-specific default when negative
  int terms = 10;
  int prec = 24;
};

/// Canonical emission of a derive target; throws NotFound for an unknown
/// target and BoundExceeded for out-of-range options.
Emission derive_target(const std::string& target, const DeriveOptions& options);

/// Runs the CLI with argv[1..] in `args`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pops

#endif  // POPS_CLI_HPP
