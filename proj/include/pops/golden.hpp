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

// Golden corpus: one transcribed formula per file under data/golden, with a
// header line "# id | locator". verify() re-derives each record and
// compares it with the parsed transcription.

#ifndef POPS_GOLDEN_HPP
#define POPS_GOLDEN_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace pops {

struct GoldenRecord {
  std::string id;
  std::string locator;
  std::string expected;  // transcription, lines joined by spaces
};

/// Parses one record file; throws ParseError on a malformed header.
GoldenRecord read_golden(const std::filesystem::path& file);
/// All records of a directory, sorted by id. Throws ParseError on duplicate
/// ids.
std::vector<GoldenRecord> load_golden(const std::filesystem::path& dir);

/// Directory configured at build time.
std::filesystem::path default_golden_dir();

/// Module a record belongs to: curve, series, isogeny, powerops,
/// dyerlashof or k1local. Throws NotFound for an unregistered id.
std::string golden_module(const std::string& id);
/// Every registered id, sorted.
std::vector<std::string> golden_ids();

struct VerifyResult {
  std::string id;
  std::string module;
  bool ok = false;
  std::string expected;  // canonical text of the transcription
  std::string derived;   // canonical text of the derivation
  std::string note;      // e.g. "6 coefficients", or the error message
  std::string diff;      // unified-style term diff when !ok
};

/// Re-derives one record.
VerifyResult verify_record(const GoldenRecord& record);

struct VerifyReport {
  std::vector<VerifyResult> results;
  std::vector<std::string> missing;  // registered ids absent from the corpus
  bool ok() const;
  /// Deterministic text: one line per record, diffs for failures, summary.
  std::string to_string() const;
};

/// scope is "all" or a module name. Throws NotFound for an unknown scope.
VerifyReport verify(const std::string& scope, const std::filesystem::path& dir);

/// Line diff of two canonical formulas split at top-level terms.
std::string term_diff(const std::string& expected, const std::string& derived);

}  // namespace pops

#endif  // POPS_GOLDEN_HPP
