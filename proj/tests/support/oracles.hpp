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

// Test-only oracles. Nothing here calls the rational-function arithmetic of
// the library: series are summed term by term from the defining geometric
// series, and trees are enumerated from Prüfer sequences.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Rational = mpq_class;

/// Truncated Laurent series in u = L^(1/r): coefficient of u^k for k >= low.
struct Series {
  unsigned r = 1;
  long low = 0;
  std::map<long, Rational> coeff;

  void add_term(long k, const Rational& c) {
    if (k < low || c == 0) return;
    auto& slot = coeff[k];
    slot += c;
    if (slot == 0) coeff.erase(k);
  }
};

inline Series operator+(Series a, const Series& b) {
  for (const auto& [k, c] : b.coeff) a.add_term(k, c);
  return a;
}

inline Series operator*(const Series& a, const Series& b) {
  Series out{a.r, a.low, {}};
  for (const auto& [i, x] : a.coeff) {
    for (const auto& [j, y] : b.coeff) out.add_term(i + j, x * y);
  }
  return out;
}

inline Series polynomial(unsigned r, long low, std::initializer_list<std::pair<long, long>> terms) {
  Series s{r, low, {}};
  for (const auto& [k, c] : terms) s.add_term(k, Rational(c));
  return s;
}

/// sum_{n >= 1} u^{-s n}
inline Series geometric_tail(unsigned r, long low, long s) {
  Series out{r, low, {}};
  for (long k = -s; k >= low; k -= s) out.add_term(k, 1);
  return out;
}

/// (L - 1) sum_{n >= 1} L^{-a n}, with a = s / r.
inline Series geometric_term(unsigned r, long low, long s) {
  return polynomial(r, low, {{static_cast<long>(r), 1}, {0, -1}}) * geometric_tail(r, low, s);
}

/// The local quotient motive summed as a series:
///   sum_ι (L + m_ι)(L - 1) sum_n L^{-n a_ι}
///     + sum_{edges} (L - 1)^2 sum_{n,m} L^{-n a_ι - m a_κ},
/// exact for every exponent >= low. `s[ι]` is r * a_ι.
inline Series stringy_series(unsigned r, long low, const std::vector<long>& s, const std::vector<long>& m,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  // The polynomial prefactors reach up to u^{2r}; work 2r lower so that the
  // truncation of each tail does not leak into the kept window.
  const long work = low - 2 * static_cast<long>(r);
  const long ri = static_cast<long>(r);
  Series total{r, work, {}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Series prefactor = polynomial(r, work, {{2 * ri, 1}, {ri, m[i] - 1}, {0, -m[i]}});
    total = total + prefactor * geometric_tail(r, work, s[i]);
  }
  for (const auto& [x, y] : edges) {
    const Series prefactor = polynomial(r, work, {{2 * ri, 1}, {ri, -2}, {0, 1}});
    total = total + prefactor * geometric_tail(r, work, s[x]) * geometric_tail(r, work, s[y]);
  }
  Series out{r, low, {}};
  for (const auto& [k, c] : total.coeff) out.add_term(k, c);
  return out;
}

/// Long division of num(u)/den(u) in descending powers of u, down to and
/// including u^low. Coefficients are listed low to high.
inline std::map<long, Rational> divide_series(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den,
                                              long low) {
  std::map<long, Rational> out;
  if (num.empty()) return out;
  const long dd = static_cast<long>(den.size()) - 1;
  std::map<long, Rational> rem;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] != 0) rem[static_cast<long>(i)] = Rational(num[i]);
  }
  for (long k = static_cast<long>(num.size()) - 1 - dd; k >= low; --k) {
    auto it = rem.find(k + dd);
    if (it == rem.end()) continue;
    Rational c = it->second / Rational(den[dd]);
    out[k] = c;
    for (long j = 0; j <= dd; ++j) {
      if (den[j] == 0) continue;
      auto& slot = rem[k + j];
      slot -= c * den[j];
      if (slot == 0) rem.erase(k + j);
    }
  }
  return out;
}

/// Sign of f - g at L -> infinity from the two truncated expansions, read
/// lexicographically from the top exponent. Each side is num/den over its
/// own root index; exponents are compared in units of 1/R with R the lcm.
inline int expansion_sign(const std::vector<mpz_class>& fn, const std::vector<mpz_class>& fd, unsigned fr,
                          const std::vector<mpz_class>& gn, const std::vector<mpz_class>& gd, unsigned gr) {
  const long R = std::lcm(static_cast<long>(fr), static_cast<long>(gr));
  const long sf = R / fr;
  const long sg = R / gr;
  // Two distinct values differ no later than u_R^{-(deg fd + deg gd)}.
  const long low = -(static_cast<long>(fd.size() - 1) * sf + static_cast<long>(gd.size() - 1) * sg) - 1;
  std::map<long, Rational> diff;
  for (const auto& [k, c] : divide_series(fn, fd, low / sf - 1)) diff[k * sf] += c;
  for (const auto& [k, c] : divide_series(gn, gd, low / sg - 1)) diff[k * sg] -= c;
  for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
    if (it->first < low) break;
    if (it->second != 0) return sgn(it->second);
  }
  return 0;
}

/// All labelled trees on n >= 2 vertices, one per Prüfer sequence.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> all_labelled_trees(std::size_t n) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> trees;
  if (n == 1) {
    trees.emplace_back();
    return trees;
  }
  std::vector<std::size_t> seq(n - 2, 0);
  for (;;) {
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : seq) ++degree[x];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t x : seq) {
      for (std::size_t leaf = 0; leaf < n; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) last.push_back(v);
    }
    edges.emplace_back(last[0], last[1]);
    trees.push_back(std::move(edges));

    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] == n - 1) seq[--i] = 0;
    if (i == 0) break;
    ++seq[i - 1];
  }
  return trees;
}

/// Straight or single-branch-point trees: max degree 3, at most one vertex
/// of degree 3.
inline bool has_allowed_shape(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [x, y] : edges) {
    ++degree[x];
    ++degree[y];
  }
  const auto threes = std::count(degree.begin(), degree.end(), std::size_t{3});
  return *std::max_element(degree.begin(), degree.end()) <= 3 && threes <= 1;
}

/// Adjacency encoding minimised over all relabellings.
inline std::string brute_canonical(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::string best;
  bool first = true;
  do {
    std::set<std::pair<std::size_t, std::size_t>> e;
    for (const auto& [x, y] : edges) e.insert(std::minmax(p[x], p[y]));
    std::string code;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(e.contains({i, j}) ? '1' : '0');
    }
    if (first || code < best) best = code;
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace oracle
