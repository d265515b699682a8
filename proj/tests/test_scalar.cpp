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

#include <doctest.h>

#include <random>
#include <vector>

#include "pops/scalar.hpp"

using namespace pops;

TEST_CASE("localized rationals: inverse pairs and unit exponents") {
  LocalizedRational quarter = LocalizedRational(1) / LocalizedRational(4);
  CHECK(quarter * LocalizedRational(4) == LocalizedRational(1));
  CHECK(quarter.exponent(UnitTag::two) == 2);

  LocalizedRational d = LocalizedRational::inverse_unit(UnitTag::disc);
  LocalizedRational d2 = d * d;
  CHECK(d2.exponent(UnitTag::disc) == 2);
  CHECK(d2 == LocalizedRational::inverse_unit(UnitTag::disc, 2));
  CHECK_FALSE(d2.is_plain());
}

TEST_CASE("localized rationals: canonical form") {
  LocalizedRational x = LocalizedRational(6) / LocalizedRational(4);
  CHECK(x.numerator() == 3);
  CHECK(x.exponent(UnitTag::two) == 1);
  CHECK(x.to_rational() == Rational(3, 2));
  CHECK(LocalizedRational(0).exponent(UnitTag::two) == 0);
  CHECK(LocalizedRational(12).divide_by_unit(UnitTag::b).exponent(UnitTag::b) == 1);
}

TEST_CASE("localized rationals: ring axioms on random triples") {
  std::mt19937 rng(20261);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<int> ex(0, 3);
  auto random_value = [&](bool two_only) {
    LocalizedRational x(num(rng));
    x = x.divide_by_unit(UnitTag::two, ex(rng));
    if (!two_only) {
      x = x.divide_by_unit(UnitTag::a, ex(rng));
      x = x.divide_by_unit(UnitTag::b, ex(rng));
      x = x.divide_by_unit(UnitTag::disc, ex(rng));
    }
    return x;
  };
  for (int n = 0; n < 200; ++n) {
    LocalizedRational x = random_value(false), y = random_value(true), z = random_value(true);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((y + z) + y == y + (z + y));
    CHECK(y - y == LocalizedRational(0));
    // Plain values agree with rational arithmetic.
    CHECK((y * z).to_rational() == y.to_rational() * z.to_rational());
    CHECK((y + z).to_rational() == y.to_rational() + z.to_rational());
  }
}

TEST_CASE("Gaussian 3-adics: i^2 = -1 and (1+i)(1-i) = 2 mod 9") {
  PadicGauss one_plus_i(1, 1, 2), one_minus_i(1, -1, 2);
  CHECK(one_plus_i * one_minus_i == PadicGauss(2, 0, 2));
  CHECK(PadicGauss::i(5) * PadicGauss::i(5) == PadicGauss(-1, 0, 5));
  CHECK(PadicGauss::modulus(3) == 27);
}

TEST_CASE("Gaussian 3-adics: precision changes are truncations") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int n = 0; n < 100; ++n) {
    PadicGauss x(d(rng), d(rng), 9);
    PadicGauss low = x.with_precision(3);
    CHECK(low.with_precision(7).with_precision(3) == low);
    CHECK(low.re() == Integer(x.re() % 27 + 27) % 27);
    PadicGauss y(d(rng), d(rng), 5);
    CHECK((x * y).precision() == 5);
    CHECK((x + y).with_precision(3) == low + y.with_precision(3));
  }
}

TEST_CASE("Gaussian 3-adics: field axioms and unit inverses") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int n = 0; n < 200; ++n) {
    PadicGauss x(d(rng), d(rng), 8), y(d(rng), d(rng), 8), z(d(rng), d(rng), 8);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (x.is_unit()) CHECK(x * x.inverse() == PadicGauss(1, 0, 8));
    if (!x.is_zero()) CHECK(x.valuation() == std::min(x.re() == 0 ? 8 : valuation3(Rational(x.re())),
                                                       x.im() == 0 ? 8 : valuation3(Rational(x.im()))));
  }
  CHECK_THROWS_AS(PadicGauss(3, 0, 4).inverse(), Error);
}

TEST_CASE("Gaussian 3-adics: symmetric representatives") {
  CHECK(PadicGauss(80, 0, 4).symmetric_re() == -1);
  CHECK(PadicGauss(40, 0, 4).symmetric_re() == 40);
  CHECK(PadicGauss(0, 41, 4).symmetric_im() == -40);
}

TEST_CASE("Hensel lifting: exact roots are returned unchanged") {
  std::vector<PadicGauss> x2p1 = {PadicGauss(1, 0, 2), PadicGauss(0, 0, 2), PadicGauss(1, 0, 2)};
  CHECK(hensel_lift_root(x2p1, PadicGauss::i(2), 2) == PadicGauss::i(2));
  // x^2 - (h - 1) at h = 0.
  std::vector<PadicGauss> shifted = {PadicGauss(1, 0, 6), PadicGauss(0, 0, 6), PadicGauss(1, 0, 6)};
  CHECK(hensel_lift_root(shifted, PadicGauss::i(6), 6) == PadicGauss::i(6));
}

TEST_CASE("Hensel lifting: x^3 - x - 3 against a residue scan mod 81") {
  std::vector<PadicGauss> f = {PadicGauss(-3, 0, 4), PadicGauss(-1, 0, 4), PadicGauss(0, 0, 4), PadicGauss(1, 0, 4)};
  for (long seed = 0; seed < 3; ++seed) {
    PadicGauss root = hensel_lift_root(f, PadicGauss(seed, 0, 4), 4);
    // Oracle: every residue r = seed mod 3 of Z[i]/81 with f(r) = 0.
    std::vector<std::pair<long, long>> found;
    for (long re = 0; re < 81; ++re)
      for (long im = 0; im < 81; ++im) {
        if (re % 3 != seed || im % 3 != 0) continue;
        PadicGauss r(re, im, 4);
        if (evaluate(f, r).is_zero()) found.emplace_back(re, im);
      }
    REQUIRE(found.size() == 1);
    CHECK(root == PadicGauss(found[0].first, found[0].second, 4));
  }
}

TEST_CASE("Hensel lifting: stable under precision refinement") {
  std::vector<PadicGauss> f = {PadicGauss(-3, 0, 20), PadicGauss(-1, 0, 20), PadicGauss(0, 0, 20), PadicGauss(1, 0, 20)};
  for (long seed = 0; seed < 3; ++seed) {
    PadicGauss fine = hensel_lift_root(f, PadicGauss(seed, 0, 20), 20);
    for (int m = 2; m < 20; m += 3) {
      std::vector<PadicGauss> fm;
      for (const auto& c : f) fm.push_back(c.with_precision(m));
      CHECK(fine.with_precision(m) == hensel_lift_root(fm, PadicGauss(seed, 0, m), m));
    }
    CHECK(evaluate(f, fine).is_zero());
  }
}

TEST_CASE("3-adic valuation and residues of rationals") {
  CHECK(valuation3(Rational(54)) == 3);
  CHECK(valuation3(Rational(5, 9)) == -2);
  CHECK(residue_mod3(Rational(-1)) == 2);
  CHECK(residue_mod3(Rational(1, 2)) == 2);
  CHECK_THROWS_AS(valuation3(Rational(0)), Error);
}
