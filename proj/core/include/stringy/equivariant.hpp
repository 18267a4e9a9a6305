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

// Finite groups acting on resolution graphs and the orbit graph Γ/G.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stringy/dualgraph.hpp"

namespace stringy {

/// perm[i] is the image of vertex index i.
using Permutation = std::vector<std::size_t>;

/// A permutation group on the vertices of one ResolutionGraph, given by
/// generators. Construction checks that every generator is an automorphism
/// preserving edges, discrepancies, weights and the special flag, and then
/// closes the generators into the full group.
class GraphAction {
 public:
  GraphAction(const ResolutionGraph& g, std::vector<Permutation> generators, std::string label = {});

  static GraphAction trivial(const ResolutionGraph& g, std::string label = "1");

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Every group element; the identity comes first.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t group_order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::string& label() const noexcept { return label_; }

  /// Same group acting on the graph with one extra vertex appended and fixed.
  GraphAction extended_by_fixed_point(const ResolutionGraph& enlarged) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::string label_;
};

/// Throws kActionMismatch unless every generator of `act` is a structure
/// preserving permutation of `g`.
void check_action(const ResolutionGraph& g, const GraphAction& act);

/// True iff no group element fixes an edge while swapping its endpoints.
bool is_g_normal(const ResolutionGraph& g, const GraphAction& act);

/// The minimal resolution, followed by the middle-edge blowup when the
/// graph is an even straight line. The returned action fixes the new vertex.
std::pair<ResolutionGraph, GraphAction> modified_minimal_resolution(const ResolutionGraph& g,
                                                                    const GraphAction& act);

struct OrbitVertex {
  /// Id of the representative (least vertex index in the orbit).
  std::string id;
  std::vector<std::size_t> members;
  Rational a;
  /// Number of Stab(representative)-orbits on the representative's neighbours.
  std::size_t quotient_degree = 0;
  /// The class of E°/G is L + m.
  long m = 1;
  bool special = false;

  std::size_t orbit_size() const noexcept { return members.size(); }
};

struct QuotientGraph {
  std::vector<OrbitVertex> vertices;
  std::vector<Edge> edges;
  std::size_t group_order = 1;

  bool empty() const noexcept { return vertices.empty(); }
};

/// Orbit graph of a G-normal action. An empty graph (the smooth germ)
/// yields an empty quotient. Throws kNotGNormal, kMultiEdge, and the
/// shape errors of classify_shape.
QuotientGraph quotient(const ResolutionGraph& g, const GraphAction& act);

/// Shape class of a quotient graph; throws kNotATree / kBadShape.
ShapeClass classify_shape(const QuotientGraph& q);

// Interchange format, resolved against the vertex ids of `g`:
//   {"generators": [{"v1": "v3", "v3": "v1"}, ...], "label": "Z/2"}
// Omitted vertices are fixed.
std::string to_json(const GraphAction& act, const ResolutionGraph& g);
GraphAction action_from_json(std::string_view text, const ResolutionGraph& g);

}  // namespace stringy
