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

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stringy/catalog.hpp"
#include "stringy/equivariant.hpp"
#include "stringy/error.hpp"
#include "support/generators.hpp"

using namespace stringy;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidInput;
}

// Every automorphism of g that preserves the labels, by brute force.
std::vector<Permutation> all_automorphisms(const ResolutionGraph& g) {
  const std::size_t n = g.size();
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [x, y] : g.edges) edges.insert(std::minmax(x, y));
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = g.vertices[p[i]].a == g.vertices[i].a && g.vertices[p[i]].special == g.vertices[i].special;
    }
    for (auto [x, y] : g.edges) ok = ok && edges.contains(std::minmax(p[x], p[y]));
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("group closure") {
  CHECK(known_action("D4:S3").second.group_order() == 6);
  CHECK(known_action("D4:Z3").second.group_order() == 3);
  CHECK(known_action("E6:Z2").second.group_order() == 2);
  CHECK(known_action("A5").second.group_order() == 1);
  const auto act = known_action("D4:S3").second;
  const auto& els = act.elements();
  CHECK(els.front() == Permutation{0, 1, 2, 3});
  CHECK(std::set<Permutation>(els.begin(), els.end()).size() == els.size());
}

TEST_CASE("actions must preserve the graph") {
  const auto g = dynkin("A", 3);
  CHECK(code_of([&] { GraphAction(g, {{1, 0, 2}}); }) == ErrorCode::kActionMismatch);
  CHECK(code_of([&] { GraphAction(g, {{0, 1}}); }) == ErrorCode::kActionMismatch);
  CHECK(code_of([&] { GraphAction(g, {{0, 0, 2}}); }) == ErrorCode::kActionMismatch);
  auto h = g;
  h.vertices[0].a = Rational(1, 2);
  CHECK(code_of([&] { GraphAction(h, {{2, 1, 0}}); }) == ErrorCode::kActionMismatch);
  CHECK(GraphAction(g, {{2, 1, 0}}).group_order() == 2);
  const auto act = GraphAction(g, {{2, 1, 0}});
  CHECK(code_of([&] { check_action(dynkin("A", 4), act); }) == ErrorCode::kActionMismatch);
}

TEST_CASE("G-normality") {
  const auto a2 = dynkin("A", 2);
  CHECK_FALSE(is_g_normal(a2, GraphAction(a2, {{1, 0}})));
  const auto a3 = dynkin("A", 3);
  CHECK(is_g_normal(a3, GraphAction(a3, {{2, 1, 0}})));
  CHECK(is_g_normal(a2, GraphAction::trivial(a2)));
  CHECK(code_of([&] { quotient(a2, GraphAction(a2, {{1, 0}})); }) == ErrorCode::kNotGNormal);
}

TEST_CASE("modified minimal resolution") {
  const auto a2 = dynkin("A", 2);
  const auto [g, act] = modified_minimal_resolution(a2, GraphAction(a2, {{1, 0}}));
  REQUIRE(g.size() == 3);
  CHECK(*g.vertices[2].a == 2);
  CHECK(act.generators().front() == Permutation{1, 0, 2});
  CHECK(is_g_normal(g, act));
  const auto q = quotient(g, act);
  REQUIRE(q.vertices.size() == 2);
  CHECK(q.vertices[0].orbit_size() == 2);
  CHECK(q.vertices[1].special);

  const auto e6 = known_action("E6:Z2");
  const auto [same, same_act] = modified_minimal_resolution(e6.first, e6.second);
  CHECK(same == e6.first);
  CHECK(same_act.group_order() == 2);

  const auto [empty, empty_act] = modified_minimal_resolution(ResolutionGraph{}, GraphAction::trivial({}));
  CHECK(empty.empty());
  CHECK(empty_act.group_order() == 1);
}

TEST_CASE("D4 modulo Z/3") {
  const auto [g, act] = known_action("D4:Z3");
  const auto q = quotient(g, act);
  REQUIRE(q.vertices.size() == 2);
  CHECK(q.group_order == 3);
  CHECK(q.edges.size() == 1);
  std::multiset<std::size_t> sizes;
  for (const auto& v : q.vertices) {
    sizes.insert(v.orbit_size());
    CHECK(v.quotient_degree == 1);
    CHECK(v.m == 0);
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 3});
}

TEST_CASE("E6 modulo Z/2") {
  const auto [g, act] = known_action("E6:Z2");
  const auto q = quotient(g, act);
  REQUIRE(q.vertices.size() == 4);
  std::vector<std::size_t> degrees;
  std::vector<long> m;
  for (const auto& v : q.vertices) {
    degrees.push_back(v.quotient_degree);
    m.push_back(v.m);
  }
  CHECK(degrees == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(m == std::vector<long>{0, -1, -1, 0});
  CHECK(classify_shape(q) == ShapeClass::kStraightEven);
}

TEST_CASE("trivial action gives the graph back") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 7)), 3);
    const auto q = quotient(g, GraphAction::trivial(g));
    REQUIRE(q.vertices.size() == g.size());
    const auto deg = g.degrees();
    for (std::size_t k = 0; k < g.size(); ++k) {
      CHECK(q.vertices[k].orbit_size() == 1);
      CHECK(q.vertices[k].m == 1 - static_cast<long>(deg[k]));
      CHECK(q.vertices[k].a == *g.vertices[k].a);
    }
    CHECK(q.edges.size() == g.edges.size());
  }
}

TEST_CASE("full automorphism groups of random trees") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 7)), 1);
    for (auto& v : g.vertices) v.a = Rational(1);
    const auto autos = all_automorphisms(g);
    const GraphAction act(g, autos, "Aut");
    CHECK(act.group_order() == autos.size());
    const auto [h, hact] = modified_minimal_resolution(g, act);
    CHECK(is_g_normal(h, hact));
    const auto q = quotient(h, hact);
    std::size_t covered = 0;
    for (const auto& v : q.vertices) {
      CHECK(hact.group_order() % v.orbit_size() == 0);
      covered += v.orbit_size();
    }
    CHECK(covered == h.size());
    CHECK_NOTHROW(classify_shape(q));
  }
}

TEST_CASE("catalogued actions") {
  for (const auto& e : catalog_entries()) {
    for (const auto& act : e.known_actions) {
      CAPTURE(e.name);
      CAPTURE(act.label());
      const auto [g, gact] = modified_minimal_resolution(e.graph, act);
      CHECK(is_g_normal(g, gact));
      CHECK_NOTHROW(quotient(g, gact));
    }
  }
}

TEST_CASE("action json") {
  const auto [g, act] = known_action("D4:S3");
  const auto text = to_json(act, g);
  const auto back = action_from_json(text, g);
  CHECK(back.generators() == act.generators());
  CHECK(back.label() == act.label());
  CHECK(to_json(back, g) == text);
  CHECK(action_from_json(R"({"generators": []})", g).group_order() == 1);
  CHECK(code_of([&] { action_from_json(R"({"generators": [{"v1": "v9"}]})", g); }) == ErrorCode::kActionMismatch);
  CHECK(code_of([&] { action_from_json(R"({"generators": [{"v1": "v2"}]})", g); }) == ErrorCode::kActionMismatch);
  CHECK(code_of([&] { action_from_json("{", g); }) == ErrorCode::kParseError);
  CHECK(code_of([&] { action_from_json(R"({"generators": 3})", g); }) == ErrorCode::kParseError);
}
