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

#include "stringy/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <utility>

#include "stringy/error.hpp"

namespace stringy {

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const long db = b.degree();
  const Integer& lb = b.leading();
  long dr = a.degree();
  while (dr >= db && dr >= 0) {
    const Integer lr = r[static_cast<std::size_t>(dr)];
    for (long i = 0; i <= dr; ++i) r[static_cast<std::size_t>(i)] *= lb;
    const long shift = dr - db;
    for (long j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(j + shift)] -= lr * bc[static_cast<std::size_t>(j)];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<long>(r.size()) - 1;
  }
  return IntPoly(std::move(r));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part, bool allow_sign) {
    std::string s(part);
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) throw Error(ErrorCode::kParseError, "bad rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw Error(ErrorCode::kParseError, "bad rational '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  };
  const auto slash = text.find('/');
  Rational out;
  if (slash == std::string_view::npos) {
    out = Rational(parse_int(text, true));
  } else {
    const Integer den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
    out = Rational(parse_int(text.substr(0, slash), true), den);
  }
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidInput, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Integer(0);
}

IntPoly IntPoly::inflate(std::size_t k) const {
  if (k == 1 || is_zero()) return *this;
  std::vector<Integer> v((coeffs_.size() - 1) * k + 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::deflate(std::size_t k) const {
  if (k == 1 || is_zero()) return *this;
  std::vector<Integer> v((coeffs_.size() - 1) / k + 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (i % k != 0) throw Error(ErrorCode::kInvalidInput, "polynomial cannot be deflated");
    v[i / k] = coeffs_[i];
  }
  return IntPoly(std::move(v));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    g = gcd_of(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  return divide_exact(content());
}

IntPoly IntPoly::divide_exact(const Integer& d) const {
  if (d == 1) return *this;
  std::vector<Integer> v(coeffs_);
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

namespace {

// Degree of gcd(a, b) over Z/p, or -1 when p divides a leading coefficient.
// It bounds the degree of the gcd over Z from above, so 0 proves that the
// primitive parts are coprime.
long modular_gcd_degree(const IntPoly& a, const IntPoly& b, std::uint64_t p) {
  auto reduce = [p](const IntPoly& f) {
    std::vector<std::uint64_t> out;
    for (const auto& c : f.coefficients()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    return out;
  };
  auto trim = [](std::vector<std::uint64_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1;
    for (std::uint64_t e = p - 2; e; e >>= 1, x = x * x % p) {
      if (e & 1) result = result * x % p;
    }
    return result;
  };
  std::vector<std::uint64_t> x = reduce(a);
  std::vector<std::uint64_t> y = reduce(b);
  if (x.back() == 0 || y.back() == 0) return -1;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    const std::uint64_t inv = inverse(y.back());
    while (x.size() >= y.size()) {
      const std::uint64_t q = x.back() * inv % p;
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] = (x[i + shift] + (p - q) * y[i]) % p;
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return static_cast<long>(x.size()) - 1;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    IntPoly g = a.is_zero() ? b : a;
    return g.leading() < 0 ? -g : g;
  }
  const Integer c = gcd_of(a.content(), b.content());
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  for (std::uint64_t p : {2147483647ULL, 2147483629ULL}) {
    if (modular_gcd_degree(x, y, p) == 0) return IntPoly::constant(c);
  }
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = IntPoly::constant(1);
      break;
    }
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  IntPoly g = x.primitive_part();
  g *= c;
  return g.leading() < 0 ? -g : g;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return {};
  const long da = a.degree();
  const long db = b.degree();
  if (da < db) throw Error(ErrorCode::kInvalidInput, "inexact polynomial division");
  const auto bc = b.coefficients();
  const Integer& lb = b.leading();
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1), Integer(0));
  for (long k = da - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw Error(ErrorCode::kInvalidInput, "inexact polynomial division");
    }
    Integer coef;
    mpz_divexact(coef.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), coef.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    q[static_cast<std::size_t>(k)] = std::move(coef);
  }
  if (std::any_of(r.begin(), r.end(), [](const Integer& c) { return c != 0; })) {
    throw Error(ErrorCode::kInvalidInput, "inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

// ------------------------------------------------------------ MotiveValue

MotiveValue::MotiveValue() : num_(), den_(IntPoly::constant(1)) {}

MotiveValue::MotiveValue(IntPoly numerator, IntPoly denominator, unsigned root_index)
    : num_(std::move(numerator)), den_(std::move(denominator)), root_index_(root_index) {
  if (root_index_ == 0) throw Error(ErrorCode::kInvalidInput, "root index must be positive");
  normalize();
}

MotiveValue MotiveValue::integer(const Integer& n) {
  return MotiveValue(IntPoly::constant(n), IntPoly::constant(1));
}

MotiveValue MotiveValue::power_of_L(const Rational& exponent) {
  const Integer& p = exponent.get_num();
  const Integer& q = exponent.get_den();
  if (!q.fits_uint_p() || !p.fits_slong_p()) {
    throw Error(ErrorCode::kInvalidInput, "exponent out of range");
  }
  const auto r = static_cast<unsigned>(q.get_ui());
  const long e = p.get_si();
  if (e >= 0) {
    return MotiveValue(IntPoly::monomial(1, static_cast<std::size_t>(e)), IntPoly::constant(1), r);
  }
  return MotiveValue(IntPoly::constant(1), IntPoly::monomial(1, static_cast<std::size_t>(-e)), r);
}

void MotiveValue::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  const IntPoly g = gcd(num_, den_);
  if (g.degree() > 0 || g.leading() != 1) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

MotiveValue MotiveValue::promoted(unsigned r) const {
  if (r == root_index_) return *this;
  if (r == 0 || r % root_index_ != 0) {
    throw Error(ErrorCode::kInvalidInput, "root index " + std::to_string(r) + " is not a multiple of " +
                                              std::to_string(root_index_));
  }
  const std::size_t k = r / root_index_;
  MotiveValue out;
  out.num_ = num_.inflate(k);
  out.den_ = den_.inflate(k);
  out.root_index_ = r;
  return out;
}

MotiveValue MotiveValue::reduced() const {
  unsigned g = root_index_;
  for (const IntPoly* p : {&num_, &den_}) {
    const auto cs = p->coefficients();
    for (std::size_t i = 0; i < cs.size() && g > 1; ++i) {
      if (cs[i] != 0) g = std::gcd(g, static_cast<unsigned>(i));
    }
  }
  if (g == 1) return *this;
  MotiveValue out;
  out.num_ = num_.deflate(g);
  out.den_ = den_.deflate(g);
  out.root_index_ = root_index_ / g;
  return out;
}

MotiveValue MotiveValue::operator-() const {
  MotiveValue out(*this);
  out.num_ = -out.num_;
  return out;
}

namespace {

unsigned common_index(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

MotiveValue& MotiveValue::operator+=(const MotiveValue& other) {
  const unsigned r = common_index(root_index_, other.root_index_);
  MotiveValue a = promoted(r);
  const MotiveValue b = other.promoted(r);
  if (b.is_zero()) {
    *this = std::move(a);
    return *this;
  }
  if (a.is_zero()) {
    *this = b;
    return *this;
  }
  if (a.den_ == b.den_) {
    num_ = a.num_ + b.num_;
    den_ = std::move(a.den_);
  } else {
    const IntPoly d = gcd(a.den_, b.den_);
    const IntPoly a1 = divide_exact(a.den_, d);
    const IntPoly b1 = divide_exact(b.den_, d);
    num_ = a.num_ * b1 + b.num_ * a1;
    den_ = a.den_ * b1;
  }
  root_index_ = r;
  normalize();
  return *this;
}

MotiveValue& MotiveValue::operator-=(const MotiveValue& other) { return *this += -other; }

MotiveValue& MotiveValue::operator*=(const MotiveValue& other) {
  const unsigned r = common_index(root_index_, other.root_index_);
  const MotiveValue a = promoted(r);
  const MotiveValue b = other.promoted(r);
  num_ = a.num_ * b.num_;
  den_ = a.den_ * b.den_;
  root_index_ = r;
  normalize();
  return *this;
}

MotiveValue& MotiveValue::operator/=(const MotiveValue& other) {
  if (other.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero motive");
  const unsigned r = common_index(root_index_, other.root_index_);
  const MotiveValue a = promoted(r);
  const MotiveValue b = other.promoted(r);
  num_ = a.num_ * b.den_;
  den_ = a.den_ * b.num_;
  root_index_ = r;
  normalize();
  return *this;
}

bool operator==(const MotiveValue& a, const MotiveValue& b) {
  const unsigned r = std::lcm(a.root_index_, b.root_index_);
  const MotiveValue x = a.promoted(r);
  const MotiveValue y = b.promoted(r);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

std::strong_ordering operator<=>(const MotiveValue& a, const MotiveValue& b) { return compare(a, b); }

MotiveValue geometric_term(const Rational& a) {
  if (a <= 0) throw Error(ErrorCode::kNonKlt, "log discrepancy " + to_string(a) + " is not positive");
  const Integer& s = a.get_num();
  const Integer& r = a.get_den();
  if (!s.fits_uint_p() || !r.fits_uint_p()) throw Error(ErrorCode::kInvalidInput, "discrepancy out of range");
  const auto ru = static_cast<unsigned>(r.get_ui());
  const auto su = static_cast<std::size_t>(s.get_ui());
  IntPoly num = IntPoly::monomial(1, ru) - IntPoly::constant(1);
  IntPoly den = IntPoly::monomial(1, su) - IntPoly::constant(1);
  return MotiveValue(std::move(num), std::move(den), ru);
}

std::optional<Rational> degree(const MotiveValue& f) {
  if (f.is_zero()) return std::nullopt;
  Rational d(f.numerator().degree() - f.denominator().degree(), f.root_index());
  d.canonicalize();
  return d;
}

std::strong_ordering compare(const MotiveValue& f, const MotiveValue& g) {
  // Both denominators have positive leading coefficients, so the sign of
  // f - g at infinity is that of the leading coefficient of the cross
  // product. No gcd needed.
  const unsigned r = std::lcm(f.root_index(), g.root_index());
  const MotiveValue x = f.promoted(r);
  const MotiveValue y = g.promoted(r);
  const IntPoly d = x.numerator() * y.denominator() - y.numerator() * x.denominator();
  if (d.is_zero()) return std::strong_ordering::equal;
  return d.leading() > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool is_positive(const MotiveValue& f) { return compare(f, MotiveValue()) == std::strong_ordering::greater; }

std::string_view ordering_name(std::strong_ordering order) {
  if (order == std::strong_ordering::less) return "LESS";
  if (order == std::strong_ordering::greater) return "GREATER";
  return "EQUAL";
}

// --------------------------------------------------------------- series

namespace {

// Smallest integer k with k/r >= cutoff.
long ceil_scaled(const Rational& cutoff, unsigned r) {
  Rational scaled = cutoff * Rational(r);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  if (!c.fits_slong_p()) throw Error(ErrorCode::kInvalidInput, "cutoff out of range");
  return c.get_si();
}

}  // namespace

LaurentExpansion expand(const MotiveValue& f, const Rational& cutoff) {
  LaurentExpansion out;
  out.root_index = f.root_index();
  out.cutoff = cutoff;
  if (f.is_zero()) {
    out.exact = true;
    return out;
  }
  const unsigned r = f.root_index();
  const long dn = f.numerator().degree();
  const long dd = f.denominator().degree();
  const long lead = dn - dd;
  const long lowest = ceil_scaled(cutoff, r);

  // rem[t] is the remainder coefficient of u^(dn - t).
  const auto num = f.numerator().coefficients();
  const auto den = f.denominator().coefficients();
  std::vector<Rational> rem;
  rem.reserve(static_cast<std::size_t>(dn + 1));
  for (long t = 0; t <= dn; ++t) rem.emplace_back(num[static_cast<std::size_t>(dn - t)]);
  const Rational lead_den(den.back());

  long t = 0;
  for (long k = lead; k >= lowest; --k, ++t) {
    const auto ti = static_cast<std::size_t>(t);
    if (rem.size() < ti + static_cast<std::size_t>(dd) + 1) rem.resize(ti + static_cast<std::size_t>(dd) + 1);
    if (rem[ti] == 0) continue;
    Rational c = rem[ti] / lead_den;
    for (long j = 0; j <= dd; ++j) {
      rem[ti + static_cast<std::size_t>(j)] -= c * Rational(den[static_cast<std::size_t>(dd - j)]);
    }
    Rational e(k, r);
    e.canonicalize();
    out.terms.push_back({std::move(e), std::move(c)});
  }
  out.exact = std::all_of(rem.begin() + std::min<long>(t, static_cast<long>(rem.size())), rem.end(),
                          [](const Rational& c) { return c == 0; });
  return out;
}

PoincareSeries poincare(const MotiveValue& f, const Rational& cutoff) {
  const LaurentExpansion l = expand(f, cutoff / 2);
  PoincareSeries out;
  out.root_index = l.root_index;
  out.cutoff = cutoff;
  out.exact = l.exact;
  out.terms.reserve(l.terms.size());
  for (const auto& term : l.terms) out.terms.push_back({term.exponent * 2, term.coefficient});
  return out;
}

MotiveValue LaurentExpansion::truncation() const {
  MotiveValue sum;
  for (const auto& term : terms) {
    const MotiveValue c(IntPoly::constant(term.coefficient.get_num()),
                        IntPoly::constant(term.coefficient.get_den()));
    sum += c * MotiveValue::power_of_L(term.exponent);
  }
  return sum;
}

// ------------------------------------------------------------ rendering

namespace {

std::string power_string(const Rational& e, std::string_view symbol) {
  std::string s(symbol);
  if (e == 1) return s;
  if (e.get_den() == 1 && e > 0) return s + "^" + e.get_str();
  return s + "^(" + e.get_str() + ")";
}

struct Monomial {
  Rational coefficient;
  Rational exponent;
};

std::string sum_string(const std::vector<Monomial>& terms, std::string_view symbol) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, e] : terms) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power_string(e, symbol);
    } else {
      out += mag.get_str() + "*" + power_string(e, symbol);
    }
  }
  return out;
}

std::vector<Monomial> monomials(const IntPoly& p, unsigned r) {
  std::vector<Monomial> out;
  const auto cs = p.coefficients();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i] == 0) continue;
    Rational e(static_cast<long>(i), r);
    e.canonicalize();
    out.push_back({Rational(cs[i]), std::move(e)});
  }
  return out;
}

std::string series_string(const std::vector<SeriesTerm>& terms, unsigned r, const Rational& cutoff, bool exact,
                          std::string_view symbol) {
  std::vector<Monomial> ms;
  ms.reserve(terms.size());
  for (const auto& t : terms) ms.push_back({t.coefficient, t.exponent});
  std::string out = terms.empty() && !exact ? std::string() : sum_string(ms, symbol);
  if (!exact) {
    // Omitted exponents lie in (1/r)Z strictly below the cutoff.
    Rational bound(ceil_scaled(cutoff, r) - 1, r);
    bound.canonicalize();
    std::string big_o = "O(" + (bound == 0 ? std::string("1") : power_string(bound, symbol)) + ")";
    out = out.empty() ? big_o : out + " + " + big_o;
  }
  return out;
}

}  // namespace

std::string to_string(const MotiveValue& f) {
  const auto num = monomials(f.numerator(), f.root_index());
  const std::string ns = sum_string(num, "L");
  if (f.is_polynomial()) return ns;
  const auto den = monomials(f.denominator(), f.root_index());
  const bool wrap_den = den.size() > 1 || (den.front().exponent != 0 && den.front().coefficient != 1);
  const std::string ds = sum_string(den, "L");
  return (num.size() > 1 ? "(" + ns + ")" : ns) + "/" + (wrap_den ? "(" + ds + ")" : ds);
}

std::string to_string(const LaurentExpansion& series) {
  return series_string(series.terms, series.root_index, series.cutoff, series.exact, "L");
}

std::string to_string(const PoincareSeries& series) {
  // T exponents live in (2/r)Z; (1/r)Z is a safe superset for the O-term.
  return series_string(series.terms, series.root_index, series.cutoff, series.exact, "T");
}

// --------------------------------------------------------------- parser

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  MotiveValue parse() {
    MotiveValue v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MotiveValue expression() {
    MotiveValue v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  MotiveValue term() {
    MotiveValue v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const MotiveValue d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  MotiveValue unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Rational exponent() {
    if (accept('(')) {
      const bool negative = accept('-');
      if (!negative) accept('+');
      Integer p = integer();
      Integer q = 1;
      if (accept('/')) q = integer();
      if (!accept(')')) fail("expected ')'");
      if (q == 0) fail("zero denominator in exponent");
      Rational e(negative ? Integer(-p) : p, q);
      e.canonicalize();
      return e;
    }
    const bool negative = accept('-');
    Integer p = integer();
    return Rational(negative ? Integer(-p) : p);
  }

  MotiveValue power() {
    bool bare_l = false;
    MotiveValue base = primary(bare_l);
    if (!accept('^')) return base;
    const Rational e = exponent();
    if (abs(e.get_num()) > kMaxExponent || e.get_den() > kMaxExponent) fail("exponent too large");
    if (bare_l) return MotiveValue::power_of_L(e);
    if (e.get_den() != 1) fail("fractional exponent on a non-monomial base");
    long n = e.get_num().get_si();
    if (n < 0) {
      if (base.is_zero()) fail("zero raised to a negative power");
      base = MotiveValue::integer(1) / base;
      n = -n;
    }
    MotiveValue result = MotiveValue::integer(1);
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  MotiveValue primary(bool& bare_l) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'L') {
      ++pos_;
      bare_l = true;
      return MotiveValue::power_of_L(1);
    }
    if (c == '(') {
      ++pos_;
      MotiveValue v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MotiveValue::integer(integer());
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static constexpr long kMaxExponent = 100000;

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MotiveValue parse_motive(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace stringy
