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

// Exact coefficients: arbitrary precision integers and rationals (GMP), the
// unit-tagged rationals used as polynomial contents over the base ring
// Z[1/4][a, b, 1/Delta], and Gaussian 3-adic integers Z[i]/3^N modelling Z_9.

#ifndef POPS_SCALAR_HPP
#define POPS_SCALAR_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pops/error.hpp"

namespace pops {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// True iff the denominator of q is a power of two (the only integer units
/// of the base rings).
bool has_two_power_denominator(const Rational& q);

/// 3-adic valuation of a nonzero rational; throws on zero.
int valuation3(const Rational& q);

/// Residue of a 3-integral rational in {0, 1, 2}.
int residue_mod3(const Rational& q);

// ---------------------------------------------------------------------------
// LocalizedRational
// ---------------------------------------------------------------------------

/// Inverted units of the base ring. `disc` stands for a^2 - 16 b.
enum class UnitTag : std::uint8_t { two = 0, a = 1, b = 2, disc = 3 };

/// An integer divided by a monomial in the inverted units,
///   n / (2^i a^j b^k (a^2 - 16 b)^l),  i, j, k, l >= 0.
/// Canonical: no factor of two can be cancelled between n and 2^i; zero has
/// all exponents zero. Sums are only defined between values carrying the same
/// a, b, disc exponents; this is the form in which contents of polynomials
/// over the base ring are reported.
class LocalizedRational {
 public:
  LocalizedRational() = default;
  LocalizedRational(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit LocalizedRational(Integer n) : num_(std::move(n)) {}

  /// 1 / tag^power.
  static LocalizedRational inverse_unit(UnitTag tag, unsigned power = 1);

  const Integer& numerator() const { return num_; }
  unsigned exponent(UnitTag tag) const { return exps_[static_cast<int>(tag)]; }
  bool is_zero() const { return num_ == 0; }
  /// No a, b or disc in the denominator.
  bool is_plain() const { return exps_[1] == 0 && exps_[2] == 0 && exps_[3] == 0; }
  bool is_unit() const;

  Rational to_rational() const;
  LocalizedRational divide_by_unit(UnitTag tag, unsigned power = 1) const;
  std::string to_string() const;

  friend LocalizedRational operator+(const LocalizedRational& x, const LocalizedRational& y);
  friend LocalizedRational operator-(const LocalizedRational& x, const LocalizedRational& y);
  friend LocalizedRational operator*(const LocalizedRational& x, const LocalizedRational& y);
  friend LocalizedRational operator/(const LocalizedRational& x, const LocalizedRational& y);
  LocalizedRational operator-() const;
  friend bool operator==(const LocalizedRational& x, const LocalizedRational& y) = default;

 private:
  void canonicalize();

  Integer num_{0};
  std::array<unsigned, 4> exps_{0, 0, 0, 0};
};

// ---------------------------------------------------------------------------
// PadicGauss
// ---------------------------------------------------------------------------

/// re + im*i in Z[i]/3^N, i^2 = -1. Binary operations on operands of
/// different precision return the smaller precision.
class PadicGauss {
 public:
  static constexpr int kDefaultPrecision = 16;

  PadicGauss() : PadicGauss(0, 0, kDefaultPrecision) {}
  PadicGauss(long re, long im, int precision);
  PadicGauss(Integer re, Integer im, int precision);

  static PadicGauss i(int precision) { return PadicGauss(0, 1, precision); }
  static Integer modulus(int precision);

  int precision() const { return precision_; }
  const Integer& re() const { return re_; }
  const Integer& im() const { return im_; }

  /// Lowering truncates; raising keeps the stored residues (no new digits).
  PadicGauss with_precision(int precision) const;

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  /// Units of Z_9: not both parts divisible by 3.
  bool is_unit() const;
  /// min(v_3(re), v_3(im)), or precision() for zero.
  int valuation() const;
  PadicGauss inverse() const;
  PadicGauss conj() const { return PadicGauss(re_, -im_, precision_); }

  /// Representative of re in (-3^N/2, 3^N/2].
  Integer symmetric_re() const;
  Integer symmetric_im() const;

  std::string to_string() const;

  friend PadicGauss operator+(const PadicGauss& x, const PadicGauss& y);
  friend PadicGauss operator-(const PadicGauss& x, const PadicGauss& y);
  friend PadicGauss operator*(const PadicGauss& x, const PadicGauss& y);
  friend PadicGauss operator/(const PadicGauss& x, const PadicGauss& y);
  PadicGauss operator-() const { return PadicGauss(-re_, -im_, precision_); }
  PadicGauss& operator+=(const PadicGauss& y) { return *this = *this + y; }
  PadicGauss& operator-=(const PadicGauss& y) { return *this = *this - y; }
  PadicGauss& operator*=(const PadicGauss& y) { return *this = *this * y; }
  friend bool operator==(const PadicGauss& x, const PadicGauss& y);

 private:
  void reduce();

  Integer re_;
  Integer im_;
  int precision_;
};

/// Value of the polynomial sum coeffs[k] x^k.
PadicGauss evaluate(std::span<const PadicGauss> coeffs, const PadicGauss& x);

/// Lifts a simple root of f mod 3 to a root mod 3^target_precision congruent
/// to `seed` mod 3. Coefficients are listed in ascending degree.
PadicGauss hensel_lift_root(std::span<const PadicGauss> coeffs, const PadicGauss& seed,
                            int target_precision);

}  // namespace pops

#endif  // POPS_SCALAR_HPP
