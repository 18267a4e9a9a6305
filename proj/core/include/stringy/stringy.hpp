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

// Stringy motives: the stratum sum over a simple normal crossing divisor,
// the orbit-wise formula on a quotient dual graph, globalization, and the
// degree >= 1 truncation N with its coefficient sum C.

#include <cstddef>
#include <span>
#include <vector>

#include "stringy/equivariant.hpp"
#include "stringy/laurent.hpp"

namespace stringy {

/// One stratum E_J° = (intersection of E_j, j in J) minus the other E_j.
struct Stratum {
  std::vector<std::size_t> divisors;
  /// Class of the stratum (inside the fibre over the singular point).
  MotiveValue class_value;
  std::vector<Rational> discrepancies;
};

struct StratumData {
  std::vector<Stratum> strata;
};

/// sum_J {E_J°} prod_{j in J} (L - 1)/(L^{a_j} - 1). Throws kNonKlt.
MotiveValue batyrev_snc(const StratumData& data);

/// Stratification of the exceptional fibre of a resolution graph, with the
/// stratum classes obtained by inclusion-exclusion over intersections.
/// Strata with zero class are dropped. The empty graph yields the single
/// point stratum of a smooth germ.
StratumData local_strata(const ResolutionGraph& g);

/// sum_ι (L + m_ι)(L - 1)/(L^{a_ι} - 1)
///   + sum_{edges ι-κ} (L - 1)^2 / ((L^{a_ι} - 1)(L^{a_κ} - 1)).
/// The empty quotient (smooth germ) evaluates to 1.
MotiveValue stringy_local(const QuotientGraph& q);

/// Runs the modified minimal resolution, checks G-normality, builds Γ/G and
/// evaluates stringy_local on it.
MotiveValue quotient_motive(const ResolutionGraph& g, const GraphAction& act);

/// {(X \ {x})/G} + M_st(X)_x/G.
MotiveValue globalize(const MotiveValue& local, const MotiveValue& smooth_part_class);
/// Several singular points, one local value per orbit representative.
MotiveValue globalize(std::span<const MotiveValue> locals, const MotiveValue& smooth_part_class);

struct TruncationReport {
  /// The expansion with every term of degree < 1 removed.
  MotiveValue N;
  std::vector<SeriesTerm> terms;
  /// Sum of the coefficients of N.
  Integer C;
};

/// Throws kDegreeTooLarge when deg m >= 2.
TruncationReport truncation_report(const MotiveValue& m);

struct VertexBoundCheck {
  std::size_t non_special_small = 0;  ///< non-special orbit vertices with a <= 1
  std::size_t total = 0;
  bool non_special_ok = true;         ///< non_special_small <= C
  bool total_ok = true;               ///< total <= C + 1
  bool nonnegative = true;            ///< every coefficient of N is >= 0
};

VertexBoundCheck check_vertex_bounds(const QuotientGraph& q, const TruncationReport& report);

}  // namespace stringy
