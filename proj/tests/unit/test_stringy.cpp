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

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stringy/catalog.hpp"
#include "stringy/error.hpp"
#include "stringy/stringy.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace stringy;

namespace {

MotiveValue M(const char* text) { return parse_motive(text); }
MotiveValue I(long n) { return MotiveValue::integer(n); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidInput;
}

MotiveValue trivial_local(const ResolutionGraph& g) { return stringy_local(quotient(g, GraphAction::trivial(g))); }

}  // namespace

TEST_CASE("stratum sum examples") {
  StratumData smooth{{Stratum{{}, M("L^2"), {}}}};
  CHECK(batyrev_snc(smooth) == M("L^2"));
  CHECK(batyrev_snc(local_strata(dynkin("A", 1))) == M("L + 1"));
  CHECK(batyrev_snc(local_strata(dynkin("E", 7))) == M("7*L + 1"));
  CHECK(batyrev_snc(local_strata(ResolutionGraph{})) == I(1));
  StratumData bad{{Stratum{{0}, M("L + 1"), {Rational(0)}}}};
  CHECK(code_of([&] { batyrev_snc(bad); }) == ErrorCode::kNonKlt);
}

TEST_CASE("strata of a two-curve chain") {
  const auto s = local_strata(dynkin("A", 2));
  REQUIRE(s.strata.size() == 3);
  std::map<std::size_t, int> by_size;
  for (const auto& st : s.strata) {
    ++by_size[st.divisors.size()];
    if (st.divisors.size() == 1) CHECK(st.class_value == M("L"));
    if (st.divisors.size() == 2) CHECK(st.class_value == I(1));
  }
  CHECK(by_size[1] == 2);
  CHECK(by_size[2] == 1);
}

TEST_CASE("rational double points give nL + 1") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    const MotiveValue want = I(static_cast<long>(e.graph.size())) * M("L") + I(1);
    CHECK(trivial_local(e.graph) == want);
    CHECK(batyrev_snc(local_strata(e.graph)) == want);
    CHECK(globalize(want, M("L^2 - 1")) == M("L^2") + I(static_cast<long>(e.graph.size())) * M("L"));
  }
}

TEST_CASE("quotient motives of catalogued covers") {
  auto cover = [](const char* key) {
    const auto [g, act] = known_action(key);
    return quotient_motive(g, act);
  };
  CHECK(cover("D4:Z3") == M("2*L + 1"));
  CHECK(cover("D4:S3") == M("2*L + 1"));
  CHECK(cover("E6:Z2") == M("4*L + 1"));
  CHECK(cover("A2:Z2") == M("L + 1"));
  CHECK(cover("A0:BO") == I(1));
  for (int n = 4; n <= 8; ++n) {
    const std::string key = "A" + std::to_string(2 * n - 5) + ":Z2";
    CHECK(cover(key.c_str()) == I(n - 2) * M("L") + I(1));
  }
}

TEST_CASE("globalize") {
  CHECK(globalize(I(1), MotiveValue()) == I(1));
  const std::vector<MotiveValue> locals = {M("2*L + 1"), M("L + 1")};
  CHECK(globalize(locals, M("L^2 - 2")) == M("L^2 + 3*L"));
}

TEST_CASE("truncation report") {
  const auto seven = truncation_report(M("7*L + 1"));
  CHECK(seven.N == M("7*L"));
  CHECK(seven.C == 7);
  CHECK(truncation_report(M("L + 1")).C == 1);
  CHECK(truncation_report(I(1)).C == 0);
  CHECK(truncation_report(I(1)).N.is_zero());
  // One curve, a = 1/2, no neighbours.
  const auto half = truncation_report(M("(L + 1)*(L^(1/2) + 1)"));
  CHECK(half.N == M("L^(3/2) + L"));
  CHECK(half.C == 2);
  REQUIRE(half.terms.size() == 2);
  CHECK(half.terms[0] == SeriesTerm{Rational(3, 2), 1});
  CHECK(code_of([] { truncation_report(M("L^2")); }) == ErrorCode::kDegreeTooLarge);
  CHECK(code_of([] { truncation_report(M("L/2")); }) == ErrorCode::kInvalidInput);
}

TEST_CASE("orbit formula agrees with the summed series") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 80; ++i) {
    const auto r = static_cast<unsigned>(gen::uniform(rng, 1, 4));
    const auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 6)), r);
    const auto q = quotient(g, GraphAction::trivial(g));
    std::vector<long> s;
    std::vector<long> m;
    for (const auto& v : q.vertices) {
      s.push_back(mpz_class(v.a * r).get_si());
      m.push_back(v.m);
    }
    const long low = -8 * static_cast<long>(r);
    const auto series = oracle::stringy_series(r, low, s, m, q.edges);
    Rational cut(low, r);
    cut.canonicalize();
    const auto e = expand(stringy_local(q), cut);
    std::map<long, Rational> got;
    for (const auto& t : e.terms) got[mpz_class(t.exponent * r).get_si()] = t.coefficient;
    CHECK(got == series.coeff);
  }
}

TEST_CASE("stratum sum agrees with the orbit formula") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 7)),
                                    static_cast<unsigned>(gen::uniform(rng, 1, 4)));
    CHECK(batyrev_snc(local_strata(g)) == trivial_local(g));
  }
}

TEST_CASE("subdividing an edge changes nothing") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 2, 7)),
                                    static_cast<unsigned>(gen::uniform(rng, 1, 4)));
    const auto e = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(g.edges.size()) - 1));
    CHECK(trivial_local(gen::subdivide(g, e)) == trivial_local(g));
  }
}

TEST_CASE("vertex bounds on quotients") {
  std::mt19937_64 rng(34);
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 7)),
                              static_cast<unsigned>(gen::uniform(rng, 1, 4)));
    // Keep the realistic range: at most one curve above 1, marked special.
    bool seen = false;
    for (auto& v : g.vertices) {
      if (*v.a > 1) {
        if (seen) v.a = Rational(1);
        v.special = !seen && *v.a > 1;
        seen = seen || v.special;
      }
    }
    const auto q = quotient(g, GraphAction::trivial(g));
    const auto report = truncation_report(stringy_local(q));
    const auto check = check_vertex_bounds(q, report);
    CHECK(check.nonnegative);
    CHECK(check.non_special_ok);
    CHECK(check.total_ok);
    CHECK(check.total == q.vertices.size());
    ++checked;
  }
  CHECK(checked == 200);
}
