/*
   Copyright 2026 The stringy authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Exact arithmetic on rational functions in u = L^(1/r) with integer
// coefficients, plus their Laurent expansion at L -> infinity and the
// lexicographic ordering by leading coefficient.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace stringy {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

/// Dense polynomial in one variable with arbitrary precision integer
/// coefficients, stored from the constant term upwards with no trailing
/// zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& leading() const;
  Integer coefficient(std::size_t degree) const;
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// Substitutes u -> u^k.
  IntPoly inflate(std::size_t k) const;
  /// Inverse of inflate; every nonzero exponent must be divisible by k.
  IntPoly deflate(std::size_t k) const;

  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly divide_exact(const Integer& d) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// Greatest common divisor in Z[u], with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Exact quotient a / b in Z[u]; throws kInvalidInput when b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// A rational function numerator(u)/denominator(u) with u = L^(1/r).
///
/// Always held in canonical form: the numerator and denominator are coprime
/// in Z[u] and the denominator has a positive leading coefficient. Zero is
/// 0/1. Equality is equality of values, so operands with different root
/// indices are compared after promotion to the lcm index.
class MotiveValue {
 public:
  MotiveValue();
  MotiveValue(IntPoly numerator, IntPoly denominator, unsigned root_index = 1);

  static MotiveValue integer(const Integer& n);
  /// L^exponent; the root index is the exponent's denominator.
  static MotiveValue power_of_L(const Rational& exponent);

  unsigned root_index() const noexcept { return root_index_; }
  const IntPoly& numerator() const noexcept { return num_; }
  const IntPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0 && den_.leading() == 1; }

  /// Same value over root index `r`, which must be a multiple of root_index().
  MotiveValue promoted(unsigned r) const;
  /// Same value over the smallest root index that can express it.
  MotiveValue reduced() const;

  MotiveValue operator-() const;
  MotiveValue& operator+=(const MotiveValue& other);
  MotiveValue& operator-=(const MotiveValue& other);
  MotiveValue& operator*=(const MotiveValue& other);
  MotiveValue& operator/=(const MotiveValue& other);

  friend MotiveValue operator+(MotiveValue a, const MotiveValue& b) { return a += b; }
  friend MotiveValue operator-(MotiveValue a, const MotiveValue& b) { return a -= b; }
  friend MotiveValue operator*(MotiveValue a, const MotiveValue& b) { return a *= b; }
  friend MotiveValue operator/(MotiveValue a, const MotiveValue& b) { return a /= b; }

  friend bool operator==(const MotiveValue& a, const MotiveValue& b);
  friend std::strong_ordering operator<=>(const MotiveValue& a, const MotiveValue& b);

 private:
  void normalize();

  IntPoly num_;
  IntPoly den_;
  unsigned root_index_ = 1;
};

/// The factor (L - 1)/(L^a - 1), i.e. (u^r - 1)/(u^s - 1) for a = s/r.
/// Throws kNonKlt for a <= 0.
MotiveValue geometric_term(const Rational& a);

/// Degree in L, with deg L^(1/r) = 1/r; std::nullopt stands for -infinity
/// and is returned exactly for zero.
std::optional<Rational> degree(const MotiveValue& f);

/// Sign of the leading coefficient of f - g.
std::strong_ordering compare(const MotiveValue& f, const MotiveValue& g);
bool is_positive(const MotiveValue& f);
std::string_view ordering_name(std::strong_ordering order);

struct SeriesTerm {
  Rational exponent;
  Rational coefficient;

  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// Expansion in descending powers of L^(1/r). Terms with exponent >= cutoff
/// are listed; everything omitted has exponent strictly below cutoff.
struct LaurentExpansion {
  unsigned root_index = 1;
  std::vector<SeriesTerm> terms;
  Rational cutoff;
  /// True when nothing was omitted, i.e. the listed terms sum to the value.
  bool exact = false;

  /// The listed terms as a (Laurent) polynomial value.
  MotiveValue truncation() const;
};

/// Same shape in the symbol T, where L maps to T^2.
struct PoincareSeries {
  unsigned root_index = 1;
  std::vector<SeriesTerm> terms;
  Rational cutoff;
  bool exact = false;
};

LaurentExpansion expand(const MotiveValue& f, const Rational& cutoff);
PoincareSeries poincare(const MotiveValue& f, const Rational& cutoff);

/// Normalized text form, e.g. "7*L + 1" or "1/(L + 1)" or "L^(1/2) + 1".
std::string to_string(const MotiveValue& f);
std::string to_string(const LaurentExpansion& series);
std::string to_string(const PoincareSeries& series);

/// Parses sums, products, quotients and powers of integers and L. Powers of
/// L may carry rational exponents written as L^(p/q). Throws kParseError.
MotiveValue parse_motive(std::string_view text);

}  // namespace stringy
