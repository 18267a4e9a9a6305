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

// Resolution dual graphs of log terminal surface singularities: a tree of
// exceptional rational curves labelled with log discrepancies and
// self-intersection weights.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stringy/laurent.hpp"

namespace stringy {

struct Vertex {
  std::string id;
  /// Log discrepancy; unset until solved or supplied.
  std::optional<Rational> a;
  /// The curve has self-intersection -w.
  std::optional<int> w;
  /// Set on the curve inserted by a middle-edge blowup.
  bool special = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Unordered pair of vertex indices.
using Edge = std::pair<std::size_t, std::size_t>;

struct ResolutionGraph {
  /// Declared root index of the discrepancies, if any.
  std::optional<unsigned> root_index;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return vertices.size(); }
  bool empty() const noexcept { return vertices.empty(); }
  std::optional<std::size_t> find(std::string_view id) const;
  std::vector<std::vector<std::size_t>> adjacency() const;
  std::vector<std::size_t> degrees() const;

  std::size_t add_vertex(Vertex v);
  void add_edge(std::string_view a, std::string_view b);

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

enum class ShapeClass { kStraightOdd, kStraightEven, kThreeBranch };

std::string_view shape_name(ShapeClass shape) noexcept;

/// Tree and shape checks only. Throws kNotATree or kBadShape.
ShapeClass classify_shape(const ResolutionGraph& g);

/// Full validation: shape plus the discrepancy invariants (0 < a <= 2,
/// a <= 1 off the special vertex, at most one special vertex, a in the
/// declared (1/r)Z when root_index is present).
ShapeClass validate(const ResolutionGraph& g);

/// Solves sum_i b_i (E_i . E_j) = w_j - 2 and sets a_i = 1 + b_i.
///
/// The intersection matrix has -w_i on the diagonal and 1 for each edge.
/// Shape is not checked here. Throws kSingularMatrix or kNotLogTerminal.
ResolutionGraph discrepancies_from_weights(const ResolutionGraph& g);

/// Leading principal minors of the intersection matrix alternate in sign.
bool is_negative_definite(const ResolutionGraph& g);

/// lcm of the denominators of all log discrepancies.
unsigned gorenstein_index(const ResolutionGraph& g);

/// Subdivides the middle edge of an even straight graph by a special vertex
/// with a = a_i + a_j. The new vertex is appended after the existing ones.
ResolutionGraph middle_blowup(const ResolutionGraph& g);

// Interchange format:
//   {"root_index": r, "vertices": [{"id": "v1", "a": "1", "w": 2}, ...],
//    "edges": [["v1", "v2"], ...]}
std::string to_json(const ResolutionGraph& g);
ResolutionGraph graph_from_json(std::string_view text);

}  // namespace stringy
