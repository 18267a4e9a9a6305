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

#include "stringy/dcc.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "stringy/error.hpp"

namespace stringy {

unsigned ChainRecord::root_index() const {
  unsigned r = 1;
  for (const auto& e : entries) r = std::lcm(r, e.value.root_index());
  return r;
}

DescentReport check_descent(const ChainRecord& chain, bool strict) {
  DescentReport report;
  report.strict = strict;
  for (std::size_t i = 1; i < chain.entries.size(); ++i) {
    const auto order = compare(chain.entries[i - 1].value, chain.entries[i].value);
    const bool ok = strict ? order == std::strong_ordering::greater : order != std::strong_ordering::less;
    if (!ok) {
      report.pass = false;
      report.first_violation = i;
      break;
    }
  }
  return report;
}

// ------------------------------------------------------------ tree shapes

namespace {

std::string encode(std::size_t n, const std::vector<Edge>& edges, const std::vector<std::size_t>& relabel) {
  std::vector<char> adj(n * n, 0);
  for (const auto& [x, y] : edges) {
    adj[relabel[x] * n + relabel[y]] = 1;
    adj[relabel[y] * n + relabel[x]] = 1;
  }
  std::string out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(adj[i * n + j] ? '1' : '0');
  }
  return out;
}

std::vector<Edge> decode(std::size_t n, const std::string& encoding) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (encoding[k] == '1') edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::size_t> iota_vector(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Straight line, or three straight branches of the given lengths at vertex 0.
std::vector<Edge> branch_tree(const std::vector<std::size_t>& lengths) {
  std::vector<Edge> edges;
  std::size_t next = 1;
  for (std::size_t len : lengths) {
    std::size_t prev = 0;
    for (std::size_t k = 0; k < len; ++k, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return edges;
}

TreeShape make_shape(std::size_t n, const std::vector<Edge>& edges) {
  TreeShape shape;
  shape.vertex_count = n;
  shape.encoding = canonical_encoding(n, edges);
  shape.edges = decode(n, shape.encoding);

  ResolutionGraph skeleton;
  for (std::size_t i = 0; i < n; ++i) skeleton.vertices.push_back(Vertex{std::to_string(i), std::nullopt, std::nullopt, false});
  skeleton.edges = shape.edges;
  shape.shape = classify_shape(skeleton);

  auto perm = iota_vector(n);
  do {
    if (encode(n, shape.edges, perm) == shape.encoding) shape.automorphisms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return shape;
}

}  // namespace

std::string canonical_encoding(std::size_t n, const std::vector<Edge>& edges) {
  auto perm = iota_vector(n);
  std::string best = encode(n, edges, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string candidate = encode(n, edges, perm);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::vector<TreeShape> canonical_shapes(std::size_t n) {
  std::vector<TreeShape> shapes;
  if (n == 0) return shapes;
  if (n == 1) {
    shapes.push_back(make_shape(1, {}));
    return shapes;
  }
  // A path is a "branch tree" with branches of lengths (n - 1) hanging off an end.
  shapes.push_back(make_shape(n, branch_tree({n - 1})));
  for (std::size_t p = 1; p + 2 <= n - 1; ++p) {
    for (std::size_t q = 1; q <= p; ++q) {
      if (p + q >= n - 1) break;
      const std::size_t s = n - 1 - p - q;
      if (s > q) continue;
      shapes.push_back(make_shape(n, branch_tree({p, q, s})));
    }
  }
  std::sort(shapes.begin(), shapes.end(),
            [](const TreeShape& x, const TreeShape& y) { return x.encoding < y.encoding; });
  return shapes;
}

// ----------------------------------------------------------- enumeration

QuotientGraph EnumeratedDatum::to_quotient() const {
  QuotientGraph q;
  q.edges = tree.edges;
  for (std::size_t i = 0; i < tree.vertex_count; ++i) {
    OrbitVertex v;
    v.id = std::to_string(i);
    v.members = {i};
    v.a = a[i];
    v.m = m[i];
    v.quotient_degree = static_cast<std::size_t>(1 - m[i]);
    v.special = special[i];
    q.vertices.push_back(std::move(v));
  }
  return q;
}

namespace {

// True iff `labels` is lexicographically least among its images under the
// automorphism group, i.e. it is the canonical labelled form.
bool is_canonical_labelling(const std::vector<unsigned>& labels, const TreeShape& tree) {
  std::vector<unsigned> image(labels.size());
  for (const auto& sigma : tree.automorphisms) {
    for (std::size_t i = 0; i < labels.size(); ++i) image[sigma[i]] = labels[i];
    if (image < labels) return false;
  }
  return true;
}

}  // namespace

std::vector<EnumeratedEntry> enumerate_space(unsigned r, std::size_t max_vertices, const EnumerationLimits& limits) {
  if (r == 0) throw Error(ErrorCode::kInvalidInput, "root index must be positive");
  if (r > limits.max_root_index) {
    throw Error(ErrorCode::kBoundExceeded,
                "r = " + std::to_string(r) + " exceeds the bound " + std::to_string(limits.max_root_index));
  }
  if (max_vertices > limits.max_vertices) {
    throw Error(ErrorCode::kBoundExceeded, "max_vertices = " + std::to_string(max_vertices) +
                                               " exceeds the bound " + std::to_string(limits.max_vertices));
  }
  std::vector<EnumeratedEntry> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (const TreeShape& tree : canonical_shapes(n)) {
      std::vector<std::size_t> deg(n, 0);
      for (const auto& [x, y] : tree.edges) {
        ++deg[x];
        ++deg[y];
      }
      // labels[i] = r * a_i, ranging over 1..2r.
      std::vector<unsigned> labels(n, 1);
      for (;;) {
        const auto above_one = std::count_if(labels.begin(), labels.end(), [&](unsigned k) { return k > r; });
        if (above_one <= 1 && is_canonical_labelling(labels, tree)) {
          EnumeratedDatum datum;
          datum.tree = tree;
          for (std::size_t i = 0; i < n; ++i) {
            Rational a(labels[i], r);
            a.canonicalize();
            datum.a.push_back(std::move(a));
            datum.m.push_back(1 - static_cast<long>(deg[i]));
            datum.special.push_back(labels[i] > r);
          }
          MotiveValue motive = stringy_local(datum.to_quotient());
          out.push_back({std::move(datum), std::move(motive)});
        }
        std::size_t i = n;
        while (i > 0 && labels[i - 1] == 2 * r) labels[--i] = 1;
        if (i == 0) break;
        ++labels[i - 1];
      }
    }
  }
  return out;
}

DccReport verify_dcc_on_enumeration(unsigned r, std::size_t max_vertices, const EnumerationLimits& limits) {
  const auto entries = enumerate_space(r, max_vertices, limits);
  DccReport report;
  report.root_index = r;
  report.max_vertices = max_vertices;
  report.data_count = entries.size();

  std::map<std::string, std::size_t> fibers;
  std::map<std::string, std::pair<MotiveValue, MotiveValue>> values;  // key -> (value, N)
  for (const auto& entry : entries) {
    const TruncationReport tr = truncation_report(entry.motive);
    const VertexBoundCheck bounds = check_vertex_bounds(entry.datum.to_quotient(), tr);
    if (!bounds.non_special_ok) ++report.non_special_bound_violations;
    if (!bounds.total_ok) ++report.total_bound_violations;
    if (!bounds.nonnegative) ++report.negative_coefficient_violations;
    ++fibers[to_string(tr.N.reduced())];
    values.try_emplace(to_string(entry.motive.reduced()), entry.motive, tr.N);
  }
  report.fiber_count = fibers.size();
  for (const auto& [key, count] : fibers) report.largest_fiber = std::max(report.largest_fiber, count);
  report.distinct_values = values.size();

  std::vector<std::pair<MotiveValue, MotiveValue>> sorted;
  sorted.reserve(values.size());
  for (auto& [key, pair] : values) sorted.push_back(pair);
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return compare(x.first, y.first) > 0; });

  ChainRecord chain;
  for (const auto& [value, n] : sorted) chain.entries.push_back({to_string(value), value});
  if (check_descent(chain, true).pass) report.longest_strict_chain = chain.entries.size();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (compare(sorted[i - 1].second, sorted[i].second) < 0) ++report.monotonicity_violations;
  }

  report.pass = report.non_special_bound_violations == 0 && report.total_bound_violations == 0 &&
                report.negative_coefficient_violations == 0 && report.monotonicity_violations == 0 &&
                report.longest_strict_chain == report.distinct_values;
  return report;
}

std::string enumeration_record(const EnumeratedEntry& entry) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json shape;
  shape["class"] = std::string(shape_name(entry.datum.tree.shape));
  shape["vertices"] = entry.datum.tree.vertex_count;
  shape["edges"] = nlohmann::ordered_json::array();
  for (const auto& [x, y] : entry.datum.tree.edges) shape["edges"].push_back({x, y});
  doc["shape"] = std::move(shape);
  doc["a"] = nlohmann::ordered_json::array();
  for (const auto& a : entry.datum.a) doc["a"].push_back(to_string(a));
  doc["motive"] = to_string(entry.motive);
  const TruncationReport tr = truncation_report(entry.motive);
  doc["N"] = to_string(tr.N);
  doc["C"] = tr.C.get_si();
  return doc.dump();
}

std::string to_text(const DccReport& report) {
  std::string out;
  out += "combinatorial DCC, r = " + std::to_string(report.root_index) +
         ", max vertices = " + std::to_string(report.max_vertices) + "\n";
  out += "  data: " + std::to_string(report.data_count) + "\n";
  out += "  distinct values: " + std::to_string(report.distinct_values) + "\n";
  out += "  N-fibers: " + std::to_string(report.fiber_count) +
         " (largest " + std::to_string(report.largest_fiber) + ")\n";
  out += "  longest strict chain: " + std::to_string(report.longest_strict_chain) + "\n";
  out += "  non-special vertex bound violations: " + std::to_string(report.non_special_bound_violations) + "\n";
  out += "  total vertex bound violations: " + std::to_string(report.total_bound_violations) + "\n";
  out += "  negative N coefficients: " + std::to_string(report.negative_coefficient_violations) + "\n";
  out += "  N monotonicity violations: " + std::to_string(report.monotonicity_violations) + "\n";
  out += std::string("  result: ") + (report.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace stringy
