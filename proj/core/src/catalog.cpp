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

#include "stringy/catalog.hpp"

#include <cctype>
#include <charconv>

#include "stringy/error.hpp"
#include "stringy/stringy.hpp"

namespace stringy {

namespace {

std::string vid(int i) { return "v" + std::to_string(i); }

ResolutionGraph chain_with_tail(int path_length, int attach_at, bool with_tail) {
  ResolutionGraph g;
  g.root_index = 1;
  const int n = path_length + (with_tail ? 1 : 0);
  for (int i = 1; i <= n; ++i) g.add_vertex(Vertex{vid(i), Rational(1), 2, false});
  for (int i = 1; i < path_length; ++i) g.add_edge(vid(i), vid(i + 1));
  if (with_tail) g.add_edge(vid(attach_at), vid(n));
  return g;
}

// Permutation from 1-based cycles on "v1".."vn".
Permutation cycles(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> cs) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (const auto& c : cs) {
    const std::vector<std::size_t> v(c);
    for (std::size_t k = 0; k < v.size(); ++k) p[v[k] - 1] = v[(k + 1) % v.size()] - 1;
  }
  return p;
}

Permutation reversal(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

struct Name {
  char family;
  int rank;
};

std::optional<Name> parse_name(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char family = text[0];
  int rank = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return Name{family, rank};
}

std::vector<GraphAction> actions_for(const Name& name, const ResolutionGraph& g) {
  const std::size_t n = g.size();
  std::vector<GraphAction> out;
  out.push_back(GraphAction::trivial(g));
  switch (name.family) {
    case 'A':
      if (n >= 2) out.emplace_back(g, std::vector<Permutation>{reversal(n)}, "Z2");
      break;
    case 'D':
      if (n == 4) {
        out.emplace_back(g, std::vector<Permutation>{cycles(4, {{1, 3}})}, "Z2");
        out.emplace_back(g, std::vector<Permutation>{cycles(4, {{1, 3, 4}})}, "Z3");
        out.emplace_back(g, std::vector<Permutation>{cycles(4, {{1, 3, 4}}), cycles(4, {{1, 3}})}, "S3");
      } else {
        out.emplace_back(g, std::vector<Permutation>{cycles(n, {{n - 1, n}})}, "Z2");
      }
      break;
    case 'E':
      if (n == 6) out.emplace_back(g, std::vector<Permutation>{cycles(6, {{1, 5}, {2, 4}})}, "Z2");
      break;
    default:
      break;
  }
  return out;
}

// "A(2n-5):Z2(n)" names the end-swap on A_{2n-5}.
std::optional<std::string> expand_family_key(std::string_view cover) {
  constexpr std::string_view prefix = "A(2n-5):Z2(";
  if (!cover.starts_with(prefix) || !cover.ends_with(")")) return std::nullopt;
  const auto digits = cover.substr(prefix.size(), cover.size() - prefix.size() - 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 4) return std::nullopt;
  return "A" + std::to_string(2 * n - 5) + ":Z2";
}

}  // namespace

ResolutionGraph dynkin(std::string_view family, int n) {
  const auto unknown = [&] {
    return Error(ErrorCode::kUnknownEntry, "no Dynkin diagram " + std::string(family) + std::to_string(n));
  };
  if (family == "A") {
    if (n < 1) throw unknown();
    return chain_with_tail(n, 0, false);
  }
  if (family == "D") {
    if (n < 4) throw unknown();
    return chain_with_tail(n - 1, n - 2, true);
  }
  if (family == "E") {
    if (n < 6 || n > 8) throw unknown();
    return chain_with_tail(n - 1, 3, true);
  }
  throw unknown();
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto add = [&](char family, int n) {
      CatalogEntry e;
      e.name = std::string(1, family) + std::to_string(n);
      e.graph = dynkin(std::string_view(&family, 1), n);
      e.known_actions = actions_for(Name{family, n}, e.graph);
      out.push_back(std::move(e));
    };
    for (int n = 1; n <= 8; ++n) add('A', n);
    for (int n = 4; n <= 8; ++n) add('D', n);
    for (int n = 6; n <= 8; ++n) add('E', n);
    return out;
  }();
  return entries;
}

std::pair<ResolutionGraph, GraphAction> known_action(std::string_view cover) {
  if (const auto expanded = expand_family_key(cover)) return known_action(*expanded);

  const auto colon = cover.find(':');
  const std::string_view name = cover.substr(0, colon);
  std::string_view group = colon == std::string_view::npos ? std::string_view("1") : cover.substr(colon + 1);
  if (group == "trivial") group = "1";

  if (name == "A0") {
    ResolutionGraph smooth;
    return {smooth, GraphAction::trivial(smooth, std::string(group))};
  }
  const auto parsed = parse_name(name);
  if (!parsed) throw Error(ErrorCode::kUnknownEntry, "unknown singularity '" + std::string(name) + "'");
  ResolutionGraph g = dynkin(std::string_view(&parsed->family, 1), parsed->rank);
  for (auto& act : actions_for(*parsed, g)) {
    if (act.label() == group) return {std::move(g), std::move(act)};
  }
  throw Error(ErrorCode::kUnknownEntry, "no catalogued action '" + std::string(group) + "' on " + std::string(name));
}

std::string catalog_listing() {
  std::string out;
  for (const auto& e : catalog_entries()) {
    out += e.name + " " + std::to_string(e.graph.size()) + " ";
    for (std::size_t k = 0; k < e.known_actions.size(); ++k) {
      if (k > 0) out += ",";
      out += e.known_actions[k].label();
    }
    out += "\n";
  }
  return out;
}

TowerResult verify_tower(const TowerSpec& tower) {
  TowerResult result;
  for (const auto& cover : tower) {
    const auto [graph, action] = known_action(cover);
    result.chain.entries.push_back({cover, quotient_motive(graph, action)});
  }
  result.descent = check_descent(result.chain, true);
  return result;
}

}  // namespace stringy
