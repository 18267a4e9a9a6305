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

// Descending chains of quotient stringy motives: strict-descent checks along
// towers of covers, and exhaustive enumeration of abstract quotient data for
// a fixed root index to exercise the finiteness bounds behind the
// descending chain condition.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stringy/dualgraph.hpp"
#include "stringy/equivariant.hpp"
#include "stringy/laurent.hpp"
#include "stringy/stringy.hpp"

namespace stringy {

struct ChainEntry {
  std::string label;
  MotiveValue value;
};

struct ChainRecord {
  std::vector<ChainEntry> entries;

  /// lcm of the entries' root indices.
  unsigned root_index() const;
};

struct DescentReport {
  bool strict = false;
  bool pass = true;
  /// Index i of the first entry that fails to descend from entry i - 1.
  std::optional<std::size_t> first_violation;
};

DescentReport check_descent(const ChainRecord& chain, bool strict);

/// A tree on vertex_count vertices in canonical labelling: its adjacency
/// encoding (upper triangle, row by row) is the lexicographically least
/// over all relabellings.
struct TreeShape {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::string encoding;
  ShapeClass shape = ShapeClass::kStraightOdd;
  /// Automorphisms of the canonical tree; identity first.
  std::vector<std::vector<std::size_t>> automorphisms;
};

/// Canonical straight and three-branch trees on n vertices.
std::vector<TreeShape> canonical_shapes(std::size_t n);

/// Lexicographically least adjacency encoding over all relabellings, by
/// brute force. Practical up to about 9 vertices.
std::string canonical_encoding(std::size_t n, const std::vector<Edge>& edges);

struct EnumeratedDatum {
  TreeShape tree;
  std::vector<Rational> a;
  std::vector<long> m;
  std::vector<bool> special;

  QuotientGraph to_quotient() const;
};

struct EnumeratedEntry {
  EnumeratedDatum datum;
  MotiveValue motive;
};

struct EnumerationLimits {
  unsigned max_root_index = 6;
  std::size_t max_vertices = 8;
};

/// Every canonical quotient datum on 1..max_vertices orbit vertices with
/// a in (1/r)Z ∩ (0, 2], at most one a above 1 (that vertex is the special
/// one) and m = 1 - degree, together with its stringy motive. The order is
/// by vertex count, then tree encoding, then discrepancy vector.
/// Throws kBoundExceeded outside `limits`.
std::vector<EnumeratedEntry> enumerate_space(unsigned r, std::size_t max_vertices,
                                             const EnumerationLimits& limits = {});

struct DccReport {
  unsigned root_index = 1;
  std::size_t max_vertices = 0;
  std::size_t data_count = 0;
  std::size_t distinct_values = 0;
  std::size_t fiber_count = 0;
  std::size_t largest_fiber = 0;
  std::size_t longest_strict_chain = 0;
  std::size_t non_special_bound_violations = 0;
  std::size_t total_bound_violations = 0;
  std::size_t negative_coefficient_violations = 0;
  std::size_t monotonicity_violations = 0;
  bool pass = true;
};

/// Groups the enumeration by N, checks the vertex bounds of every datum
/// against its own C, checks that N is monotone along the value order, and
/// that the distinct values form one strictly decreasing chain.
DccReport verify_dcc_on_enumeration(unsigned r, std::size_t max_vertices, const EnumerationLimits& limits = {});

/// One JSON object per line:
///   {"shape": ..., "a": [...], "motive": "...", "N": "...", "C": k}
std::string enumeration_record(const EnumeratedEntry& entry);
std::string to_text(const DccReport& report);

}  // namespace stringy
