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

#include "stringy/equivariant.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "stringy/error.hpp"

namespace stringy {

namespace {

void check_generator(const ResolutionGraph& g, const std::set<Edge>& edge_set, const Permutation& p) {
  const std::size_t n = g.size();
  if (p.size() != n) throw Error(ErrorCode::kActionMismatch, "generator acts on the wrong number of vertices");
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] >= n || hit[p[i]]) throw Error(ErrorCode::kActionMismatch, "generator is not a permutation");
    hit[p[i]] = true;
    const Vertex& from = g.vertices[i];
    const Vertex& to = g.vertices[p[i]];
    if (from.a != to.a || from.w != to.w || from.special != to.special) {
      throw Error(ErrorCode::kActionMismatch, "'" + from.id + "' -> '" + to.id + "' changes vertex data");
    }
  }
  for (const auto& [x, y] : g.edges) {
    if (!edge_set.contains(std::minmax(p[x], p[y]))) {
      throw Error(ErrorCode::kActionMismatch,
                  "edge '" + g.vertices[x].id + "'-'" + g.vertices[y].id + "' is not mapped to an edge");
    }
  }
}

std::set<Edge> edge_set_of(const ResolutionGraph& g) {
  std::set<Edge> out;
  for (const auto& [x, y] : g.edges) out.insert(std::minmax(x, y));
  return out;
}

Permutation identity(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

GraphAction::GraphAction(const ResolutionGraph& g, std::vector<Permutation> generators, std::string label)
    : degree_(g.size()), generators_(std::move(generators)), label_(std::move(label)) {
  const auto edges = edge_set_of(g);
  for (const auto& p : generators_) check_generator(g, edges, p);

  std::set<Permutation> seen{identity(degree_)};
  elements_.push_back(identity(degree_));
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& s : generators_) {
      Permutation c(degree_);
      for (std::size_t i = 0; i < degree_; ++i) c[i] = s[elements_[k][i]];
      if (seen.insert(c).second) elements_.push_back(std::move(c));
    }
  }
}

GraphAction GraphAction::trivial(const ResolutionGraph& g, std::string label) {
  return GraphAction(g, {}, std::move(label));
}

GraphAction GraphAction::extended_by_fixed_point(const ResolutionGraph& enlarged) const {
  std::vector<Permutation> gens = generators_;
  for (auto& p : gens) p.push_back(degree_);
  return GraphAction(enlarged, std::move(gens), label_);
}

void check_action(const ResolutionGraph& g, const GraphAction& act) {
  if (act.degree() != g.size()) {
    throw Error(ErrorCode::kActionMismatch, "action is defined on " + std::to_string(act.degree()) +
                                                " vertices, graph has " + std::to_string(g.size()));
  }
  const auto edges = edge_set_of(g);
  for (const auto& p : act.generators()) check_generator(g, edges, p);
}

bool is_g_normal(const ResolutionGraph& g, const GraphAction& act) {
  check_action(g, act);
  for (const auto& p : act.elements()) {
    for (const auto& [x, y] : g.edges) {
      if (p[x] == y && p[y] == x) return false;
    }
  }
  return true;
}

std::pair<ResolutionGraph, GraphAction> modified_minimal_resolution(const ResolutionGraph& g,
                                                                    const GraphAction& act) {
  if (g.empty()) return {g, act};
  check_action(g, act);
  if (validate(g) != ShapeClass::kStraightEven) return {g, act};
  ResolutionGraph blown_up = middle_blowup(g);
  GraphAction extended = act.extended_by_fixed_point(blown_up);
  return {std::move(blown_up), std::move(extended)};
}

ShapeClass classify_shape(const QuotientGraph& q) {
  ResolutionGraph skeleton;
  skeleton.vertices.reserve(q.vertices.size());
  for (const auto& v : q.vertices) skeleton.vertices.push_back(Vertex{v.id, v.a, std::nullopt, v.special});
  skeleton.edges = q.edges;
  return classify_shape(skeleton);
}

QuotientGraph quotient(const ResolutionGraph& g, const GraphAction& act) {
  QuotientGraph q;
  q.group_order = act.group_order();
  if (g.empty()) return q;

  classify_shape(g);
  for (const auto& v : g.vertices) {
    if (!v.a) throw Error(ErrorCode::kInvalidInput, "log discrepancy of '" + v.id + "' is unset");
  }
  if (!is_g_normal(g, act)) {
    throw Error(ErrorCode::kNotGNormal, "some element of " + (act.label().empty() ? "G" : act.label()) +
                                            " swaps the endpoints of an edge");
  }

  const std::size_t n = g.size();
  const auto adj = g.adjacency();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(n, kUnassigned);
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of[i] != kUnassigned) continue;
    const std::size_t index = q.vertices.size();
    std::set<std::size_t> members;
    for (const auto& p : act.elements()) members.insert(p[i]);
    for (std::size_t j : members) orbit_of[j] = index;

    OrbitVertex ov;
    ov.id = g.vertices[i].id;
    ov.members.assign(members.begin(), members.end());
    ov.a = *g.vertices[i].a;
    ov.special = g.vertices[i].special;

    // Stab(i)-orbits on the neighbours of i: each one is a puncture of E_i°/Stab(i).
    std::vector<const Permutation*> stabilizer;
    for (const auto& p : act.elements()) {
      if (p[i] == i) stabilizer.push_back(&p);
    }
    std::set<std::size_t> covered;
    for (std::size_t nb : adj[i]) {
      if (covered.contains(nb)) continue;
      ++ov.quotient_degree;
      for (const Permutation* p : stabilizer) covered.insert((*p)[nb]);
    }
    ov.m = 1 - static_cast<long>(ov.quotient_degree);
    q.vertices.push_back(std::move(ov));
  }

  std::set<Edge> orbit_edges;
  for (const auto& [x, y] : g.edges) {
    const std::size_t ox = orbit_of[x];
    const std::size_t oy = orbit_of[y];
    if (ox == oy) {
      throw Error(ErrorCode::kMultiEdge, "edge '" + g.vertices[x].id + "'-'" + g.vertices[y].id +
                                             "' joins two curves of one orbit");
    }
    orbit_edges.insert(std::minmax(ox, oy));
  }
  q.edges.assign(orbit_edges.begin(), orbit_edges.end());

  std::vector<std::size_t> degree(q.vertices.size(), 0);
  for (const auto& [x, y] : q.edges) {
    ++degree[x];
    ++degree[y];
  }
  for (std::size_t k = 0; k < q.vertices.size(); ++k) {
    if (degree[k] != q.vertices[k].quotient_degree) {
      throw Error(ErrorCode::kMultiEdge, "orbit of '" + q.vertices[k].id + "' has " +
                                             std::to_string(q.vertices[k].quotient_degree) +
                                             " neighbour orbits under its stabilizer but degree " +
                                             std::to_string(degree[k]) + " in the quotient");
    }
  }
  classify_shape(q);
  return q;
}

// ------------------------------------------------------------------- JSON

std::string to_json(const GraphAction& act, const ResolutionGraph& g) {
  check_action(g, act);
  nlohmann::ordered_json doc;
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& p : act.generators()) {
    nlohmann::ordered_json jg = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != i) jg[g.vertices[i].id] = g.vertices[p[i]].id;
    }
    doc["generators"].push_back(std::move(jg));
  }
  doc["label"] = act.label();
  return doc.dump(2) + "\n";
}

GraphAction action_from_json(std::string_view text, const ResolutionGraph& g) {
  using nlohmann::json;
  auto fail = [](const std::string& what) -> Error { return Error(ErrorCode::kParseError, "action file: " + what); };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw fail(e.what());
  }
  if (!doc.is_object()) throw fail("top level is not an object");
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw fail("'label' must be a string");
    label = doc["label"].get<std::string>();
  }
  std::vector<Permutation> gens;
  if (doc.contains("generators")) {
    if (!doc["generators"].is_array()) throw fail("'generators' must be an array");
    for (const auto& jg : doc["generators"]) {
      if (!jg.is_object()) throw fail("each generator must be an object");
      Permutation p(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) p[i] = i;
      for (const auto& [from, to] : jg.items()) {
        if (!to.is_string()) throw fail("generator images must be vertex ids");
        const auto x = g.find(from);
        const auto y = g.find(to.get<std::string>());
        if (!x || !y) throw Error(ErrorCode::kActionMismatch, "generator names a vertex missing from the graph");
        p[*x] = *y;
      }
      gens.push_back(std::move(p));
    }
  }
  return GraphAction(g, std::move(gens), std::move(label));
}

}  // namespace stringy
