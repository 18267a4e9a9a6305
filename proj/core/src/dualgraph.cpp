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

#include "stringy/dualgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "stringy/error.hpp"

namespace stringy {

std::optional<std::size_t> ResolutionGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> ResolutionGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [x, y] : edges) {
    adj[x].push_back(y);
    if (x != y) adj[y].push_back(x);
  }
  return adj;
}

std::vector<std::size_t> ResolutionGraph::degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const auto& [x, y] : edges) {
    ++deg[x];
    ++deg[y];
  }
  return deg;
}

std::size_t ResolutionGraph::add_vertex(Vertex v) {
  if (find(v.id)) throw Error(ErrorCode::kInvalidInput, "duplicate vertex id '" + v.id + "'");
  vertices.push_back(std::move(v));
  return vertices.size() - 1;
}

void ResolutionGraph::add_edge(std::string_view a, std::string_view b) {
  const auto x = find(a);
  const auto y = find(b);
  if (!x || !y) {
    throw Error(ErrorCode::kInvalidInput, "edge references unknown vertex '" + std::string(x ? b : a) + "'");
  }
  edges.emplace_back(*x, *y);
}

std::string_view shape_name(ShapeClass shape) noexcept {
  switch (shape) {
    case ShapeClass::kStraightOdd: return "STRAIGHT_ODD";
    case ShapeClass::kStraightEven: return "STRAIGHT_EVEN";
    case ShapeClass::kThreeBranch: return "THREE_BRANCH";
  }
  return "UNKNOWN";
}

ShapeClass classify_shape(const ResolutionGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::kNotATree, "empty graph");
  if (g.edges.size() != n - 1) {
    throw Error(ErrorCode::kNotATree, std::to_string(g.edges.size()) + " edges on " + std::to_string(n) + " vertices");
  }
  std::set<Edge> seen;
  for (const auto& [x, y] : g.edges) {
    if (x >= n || y >= n) throw Error(ErrorCode::kInvalidInput, "edge index out of range");
    if (x == y) throw Error(ErrorCode::kNotATree, "self-loop at '" + g.vertices[x].id + "'");
    if (!seen.insert(std::minmax(x, y)).second) {
      throw Error(ErrorCode::kNotATree, "repeated edge '" + g.vertices[x].id + "'-'" + g.vertices[y].id + "'");
    }
  }
  const auto adj = g.adjacency();
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adj[v]) {
      if (!reached[u]) {
        reached[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != n) throw Error(ErrorCode::kNotATree, "graph is disconnected");

  std::size_t branch_points = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() >= 4) {
      throw Error(ErrorCode::kBadShape, "vertex '" + g.vertices[v].id + "' has degree " + std::to_string(adj[v].size()));
    }
    if (adj[v].size() == 3) ++branch_points;
  }
  if (branch_points > 1) throw Error(ErrorCode::kBadShape, "more than one vertex of degree 3");
  if (branch_points == 1) return ShapeClass::kThreeBranch;
  return n % 2 == 1 ? ShapeClass::kStraightOdd : ShapeClass::kStraightEven;
}

ShapeClass validate(const ResolutionGraph& g) {
  const ShapeClass shape = classify_shape(g);
  std::size_t specials = 0;
  for (const auto& v : g.vertices) {
    if (v.special) ++specials;
    if (v.w && *v.w < 1) throw Error(ErrorCode::kInvalidInput, "weight of '" + v.id + "' is not positive");
    if (!v.a) continue;
    const Rational& a = *v.a;
    if (a <= 0 || a > 2) {
      throw Error(ErrorCode::kDiscrepancyRange, "a('" + v.id + "') = " + to_string(a) + " is outside (0, 2]");
    }
    if (!v.special && a > 1) {
      throw Error(ErrorCode::kDiscrepancyRange,
                  "a('" + v.id + "') = " + to_string(a) + " exceeds 1 on a non-special vertex");
    }
    if (g.root_index && *g.root_index % a.get_den().get_ui() != 0) {
      throw Error(ErrorCode::kDiscrepancyRange,
                  "a('" + v.id + "') = " + to_string(a) + " is not in (1/" + std::to_string(*g.root_index) + ")Z");
    }
  }
  if (specials > 1) throw Error(ErrorCode::kInvalidInput, "more than one special vertex");
  return shape;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix intersection_matrix(const ResolutionGraph& g) {
  const std::size_t n = g.size();
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = g.vertices[i];
    if (!v.w) throw Error(ErrorCode::kInvalidInput, "weight of '" + v.id + "' is unset");
    if (*v.w < 2) throw Error(ErrorCode::kInvalidInput, "weight of '" + v.id + "' is below 2");
    m[i][i] = -*v.w;
  }
  for (const auto& [x, y] : g.edges) {
    if (x >= n || y >= n) throw Error(ErrorCode::kInvalidInput, "edge index out of range");
    if (x == y) throw Error(ErrorCode::kNotATree, "self-loop at '" + g.vertices[x].id + "'");
    m[x][y] += 1;
    m[y][x] += 1;
  }
  return m;
}

// Solves m * x = rhs in place by Gaussian elimination; nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

}  // namespace

ResolutionGraph discrepancies_from_weights(const ResolutionGraph& g) {
  const Matrix m = intersection_matrix(g);
  std::vector<Rational> rhs;
  rhs.reserve(g.size());
  for (const auto& v : g.vertices) rhs.emplace_back(*v.w - 2);
  const auto b = solve(m, std::move(rhs));
  if (!b) throw Error(ErrorCode::kSingularMatrix, "intersection matrix is not invertible");

  ResolutionGraph out = g;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational a = 1 + (*b)[i];
    if (a <= 0 || a > 1) {
      throw Error(ErrorCode::kNotLogTerminal, "a('" + g.vertices[i].id + "') = " + to_string(a));
    }
    out.vertices[i].a = std::move(a);
  }
  out.root_index = gorenstein_index(out);
  return out;
}

bool is_negative_definite(const ResolutionGraph& g) {
  const Matrix m = intersection_matrix(g);
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Matrix lead(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    }
    const int s = sgn(determinant(std::move(lead)));
    if (s != (k % 2 == 1 ? -1 : 1)) return false;
  }
  return true;
}

unsigned gorenstein_index(const ResolutionGraph& g) {
  unsigned r = 1;
  for (const auto& v : g.vertices) {
    if (!v.a) throw Error(ErrorCode::kInvalidInput, "log discrepancy of '" + v.id + "' is unset");
    r = std::lcm(r, static_cast<unsigned>(v.a->get_den().get_ui()));
  }
  return r;
}

ResolutionGraph middle_blowup(const ResolutionGraph& g) {
  if (classify_shape(g) != ShapeClass::kStraightEven) {
    throw Error(ErrorCode::kWrongShape, "middle blowup needs a straight graph with an even number of vertices");
  }
  const auto adj = g.adjacency();
  std::size_t start = 0;
  while (adj[start].size() != 1) ++start;
  std::vector<std::size_t> path{start};
  while (path.size() < g.size()) {
    const std::size_t last = path.back();
    for (std::size_t next : adj[last]) {
      if (path.size() < 2 || next != path[path.size() - 2]) {
        path.push_back(next);
        break;
      }
    }
  }
  const std::size_t i = path[g.size() / 2 - 1];
  const std::size_t j = path[g.size() / 2];

  ResolutionGraph out = g;
  Vertex blowup;
  blowup.id = "blowup";
  for (int k = 2; out.find(blowup.id); ++k) blowup.id = "blowup" + std::to_string(k);
  if (g.vertices[i].a && g.vertices[j].a) blowup.a = *g.vertices[i].a + *g.vertices[j].a;
  blowup.special = true;
  const std::size_t s = out.add_vertex(std::move(blowup));
  const auto middle = std::find_if(out.edges.begin(), out.edges.end(), [&](const Edge& e) {
    return std::minmax(e.first, e.second) == std::minmax(i, j);
  });
  const std::size_t far = middle->second;
  middle->second = s;
  out.edges.emplace_back(s, far);
  return out;
}

// ------------------------------------------------------------------- JSON

std::string to_json(const ResolutionGraph& g) {
  nlohmann::ordered_json doc;
  if (g.root_index) doc["root_index"] = *g.root_index;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices) {
    nlohmann::ordered_json jv;
    jv["id"] = v.id;
    if (v.a) jv["a"] = to_string(*v.a);
    if (v.w) jv["w"] = *v.w;
    if (v.special) jv["special"] = true;
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [x, y] : g.edges) {
    doc["edges"].push_back({g.vertices[x].id, g.vertices[y].id});
  }
  return doc.dump(2) + "\n";
}

ResolutionGraph graph_from_json(std::string_view text) {
  using nlohmann::json;
  auto fail = [](const std::string& what) -> Error { return Error(ErrorCode::kParseError, "graph file: " + what); };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw fail(e.what());
  }
  if (!doc.is_object()) throw fail("top level is not an object");

  ResolutionGraph g;
  if (doc.contains("root_index")) {
    const auto& r = doc["root_index"];
    if (!r.is_number_integer() || r.get<long long>() < 1) throw fail("root_index must be a positive integer");
    g.root_index = r.get<unsigned>();
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw fail("missing 'vertices' array");
  for (const auto& jv : doc["vertices"]) {
    if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_string()) throw fail("vertex without string 'id'");
    Vertex v;
    v.id = jv["id"].get<std::string>();
    if (jv.contains("a") && !jv["a"].is_null()) {
      const auto& a = jv["a"];
      try {
        if (a.is_string()) {
          v.a = parse_rational(a.get<std::string>());
        } else if (a.is_number_integer()) {
          v.a = Rational(a.get<long>());
        } else {
          throw fail("'a' of '" + v.id + "' must be a rational string");
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kParseError) throw fail(e.what());
        throw;
      }
    }
    if (jv.contains("w") && !jv["w"].is_null()) {
      if (!jv["w"].is_number_integer()) throw fail("'w' of '" + v.id + "' must be an integer");
      v.w = jv["w"].get<int>();
    }
    if (jv.contains("special")) {
      if (!jv["special"].is_boolean()) throw fail("'special' of '" + v.id + "' must be a boolean");
      v.special = jv["special"].get<bool>();
    }
    if (g.find(v.id)) throw fail("duplicate vertex id '" + v.id + "'");
    g.vertices.push_back(std::move(v));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw fail("'edges' must be an array");
    for (const auto& je : doc["edges"]) {
      if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string()) {
        throw fail("edges must be pairs of vertex ids");
      }
      const auto x = g.find(je[0].get<std::string>());
      const auto y = g.find(je[1].get<std::string>());
      if (!x || !y) throw fail("edge references an unknown vertex");
      g.edges.emplace_back(*x, *y);
    }
  }
  return g;
}

}  // namespace stringy
