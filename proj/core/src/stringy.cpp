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

#include "stringy/stringy.hpp"

#include <bit>
#include <cstdint>
#include <set>

#include "stringy/error.hpp"

namespace stringy {

MotiveValue batyrev_snc(const StratumData& data) {
  MotiveValue total;
  for (const auto& stratum : data.strata) {
    MotiveValue term = stratum.class_value;
    for (const auto& a : stratum.discrepancies) {
      if (a <= 0) throw Error(ErrorCode::kNonKlt, "log discrepancy " + to_string(a) + " is not positive");
      term *= geometric_term(a);
    }
    total += term;
  }
  return total;
}

StratumData local_strata(const ResolutionGraph& g) {
  StratumData data;
  const std::size_t n = g.size();
  if (n == 0) {
    data.strata.push_back({{}, MotiveValue::integer(1), {}});
    return data;
  }
  if (n > 24) throw Error(ErrorCode::kBoundExceeded, "stratum enumeration is limited to 24 divisors");
  for (const auto& v : g.vertices) {
    if (!v.a) throw Error(ErrorCode::kInvalidInput, "log discrepancy of '" + v.id + "' is unset");
  }
  std::set<std::uint32_t> edge_masks;
  for (const auto& [x, y] : g.edges) edge_masks.insert((1u << x) | (1u << y));

  // Class of the full intersection of the divisors in `mask`: a P^1 for one
  // curve, a point for two meeting curves, empty otherwise.
  auto intersection_class = [&](std::uint32_t mask) -> long {
    const int bits = std::popcount(mask);
    if (bits == 1) return -1;  // placeholder for L + 1
    if (bits == 2 && edge_masks.contains(mask)) return 1;
    return 0;
  };

  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  const MotiveValue projective_line = MotiveValue::power_of_L(1) + MotiveValue::integer(1);
  // The fibre over x is the union of the curves, so the J = empty stratum
  // contributes nothing when n > 0.
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    // {E_J°} = sum over K ⊇ J of (-1)^{|K \ J|} {E_K}.
    MotiveValue cls;
    const std::uint32_t rest = full & ~mask;
    for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
      const std::uint32_t k = mask | extra;
      const long c = intersection_class(k);
      if (c != 0) {
        MotiveValue piece = c == -1 ? projective_line : MotiveValue::integer(c);
        if (std::popcount(extra) % 2 == 1) piece = -piece;
        cls += piece;
      }
      if (extra == 0) break;
    }
    if (cls.is_zero()) continue;
    Stratum s;
    s.class_value = std::move(cls);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        s.divisors.push_back(i);
        s.discrepancies.push_back(*g.vertices[i].a);
      }
    }
    data.strata.push_back(std::move(s));
  }
  return data;
}

MotiveValue stringy_local(const QuotientGraph& q) {
  if (q.empty()) return MotiveValue::integer(1);
  std::vector<MotiveValue> factor;
  factor.reserve(q.vertices.size());
  for (const auto& v : q.vertices) factor.push_back(geometric_term(v.a));

  const MotiveValue L = MotiveValue::power_of_L(1);
  MotiveValue total;
  for (std::size_t k = 0; k < q.vertices.size(); ++k) {
    total += (L + MotiveValue::integer(q.vertices[k].m)) * factor[k];
  }
  for (const auto& [x, y] : q.edges) {
    if (x >= q.vertices.size() || y >= q.vertices.size()) {
      throw Error(ErrorCode::kInvalidInput, "quotient edge index out of range");
    }
    total += factor[x] * factor[y];
  }
  return total;
}

MotiveValue quotient_motive(const ResolutionGraph& g, const GraphAction& act) {
  const auto [resolved, extended] = modified_minimal_resolution(g, act);
  return stringy_local(quotient(resolved, extended));
}

MotiveValue globalize(const MotiveValue& local, const MotiveValue& smooth_part_class) {
  return smooth_part_class + local;
}

MotiveValue globalize(std::span<const MotiveValue> locals, const MotiveValue& smooth_part_class) {
  MotiveValue total = smooth_part_class;
  for (const auto& local : locals) total += local;
  return total;
}

TruncationReport truncation_report(const MotiveValue& m) {
  const auto d = degree(m);
  if (d && *d >= 2) {
    throw Error(ErrorCode::kDegreeTooLarge, "degree " + to_string(*d) + " is not below 2");
  }
  const LaurentExpansion series = expand(m, Rational(1));
  TruncationReport report;
  report.C = 0;
  for (const auto& term : series.terms) {
    if (term.coefficient.get_den() != 1) {
      throw Error(ErrorCode::kInvalidInput, "coefficient " + to_string(term.coefficient) + " is not an integer");
    }
    report.C += term.coefficient.get_num();
  }
  report.terms = series.terms;
  report.N = series.truncation();
  return report;
}

VertexBoundCheck check_vertex_bounds(const QuotientGraph& q, const TruncationReport& report) {
  VertexBoundCheck out;
  out.total = q.vertices.size();
  for (const auto& v : q.vertices) {
    if (!v.special && v.a <= 1) ++out.non_special_small;
  }
  for (const auto& term : report.terms) {
    if (term.coefficient < 0) out.nonnegative = false;
  }
  out.non_special_ok = Integer(static_cast<unsigned long>(out.non_special_small)) <= report.C;
  out.total_ok = Integer(static_cast<unsigned long>(out.total)) <= report.C + 1;
  return out;
}

}  // namespace stringy
