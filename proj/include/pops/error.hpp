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

#ifndef POPS_ERROR_HPP
#define POPS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pops {

enum class Errc {
  DivisionByNonUnit,
  IncompatibleUnits,
  NonsimpleRoot,
  NoRoot,
  NonUnitLeadingCoefficient,
  NoContraction,
  NonzeroConstantTerm,
  NonUnitLeading,
  FactorizationMismatch,
  NonInvertibleDenominator,
  EqualUCoordinates,
  InvalidCurve,
  TruncationInsufficient,
  ResidueNonzero,
  FitFailed,
  MismatchAtOrder,
  ReductionMismatch,
  CoefficientMismatch,
  UnsolvableSystem,
  BoundExceeded,
  NoConvergence,
  PrecisionInsufficient,
  NotLocal,
  ParseError,
  NotFound,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::DivisionByNonUnit: return "DivisionByNonUnit";
    case Errc::IncompatibleUnits: return "IncompatibleUnits";
    case Errc::NonsimpleRoot: return "NonsimpleRoot";
    case Errc::NoRoot: return "NoRoot";
    case Errc::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case Errc::NoContraction: return "NoContraction";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::NonUnitLeading: return "NonUnitLeading";
    case Errc::FactorizationMismatch: return "FactorizationMismatch";
    case Errc::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case Errc::EqualUCoordinates: return "EqualUCoordinates";
    case Errc::InvalidCurve: return "InvalidCurve";
    case Errc::TruncationInsufficient: return "TruncationInsufficient";
    case Errc::ResidueNonzero: return "ResidueNonzero";
    case Errc::FitFailed: return "FitFailed";
    case Errc::MismatchAtOrder: return "MismatchAtOrder";
    case Errc::ReductionMismatch: return "ReductionMismatch";
    case Errc::CoefficientMismatch: return "CoefficientMismatch";
    case Errc::UnsolvableSystem: return "UnsolvableSystem";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::PrecisionInsufficient: return "PrecisionInsufficient";
    case Errc::NotLocal: return "NotLocal";
    case Errc::ParseError: return "ParseError";
    case Errc::NotFound: return "NotFound";
  }
  return "Unknown";
}

/// Every failure in the engine is reported through this type; `code()`
/// names the condition.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pops

#endif  // POPS_ERROR_HPP
