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

// Built-in ADE dual graphs, their documented group actions, and towers of
// quasi-étale covers between them.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stringy/dcc.hpp"
#include "stringy/dualgraph.hpp"
#include "stringy/equivariant.hpp"

namespace stringy {

/// Registry revision; bump when entries or action keys change.
inline constexpr int kCatalogVersion = 1;

/// Simply laced Dynkin diagram with every a = 1 and every w = 2. Vertices
/// are "v1".."vn". Accepts A (n >= 1), D (n >= 4), E (n = 6, 7, 8).
ResolutionGraph dynkin(std::string_view family, int n);

struct CatalogEntry {
  std::string name;
  ResolutionGraph graph;
  std::vector<GraphAction> known_actions;
};

/// A1..A8, D4..D8, E6, E7, E8, in that order.
const std::vector<CatalogEntry>& catalog_entries();

/// Looks up "NAME:GROUP" (or a bare "NAME" for the trivial group), e.g.
/// "D4:Z3", "D4:S3", "E6:Z2", "A5:Z2". "A0:<any label>" is the smooth germ:
/// an empty graph. Throws kUnknownEntry.
std::pair<ResolutionGraph, GraphAction> known_action(std::string_view cover);

/// One line per entry: name, vertex count, comma-separated action labels.
std::string catalog_listing();

using TowerSpec = std::vector<std::string>;

struct TowerResult {
  ChainRecord chain;
  DescentReport descent;
};

/// Quotient motive of every cover, then the strict descent check.
TowerResult verify_tower(const TowerSpec& tower);

}  // namespace stringy
