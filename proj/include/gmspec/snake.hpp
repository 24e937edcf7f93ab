// Copyright 2026 The gmspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMSPEC_SNAKE_HPP_
#define GMSPEC_SNAKE_HPP_

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "gmspec/exact.hpp"

namespace gmspec {

// m(G[S]): numerator continuant with m(G[]) = 1 and m(G[a]) = a.
BigInt continuant(const AdmissibleSeq& s);

enum class TileDir { kFirst, kRight, kUp };

struct SnakeGraph {
  // Placement of each unit tile relative to its predecessor.
  std::vector<TileDir> tiles;
  // Lower-left corner of each tile.
  std::vector<std::pair<long, long>> corners;
  std::vector<std::pair<long, long>> vertices;
  std::vector<std::array<std::size_t, 2>> edges;
};

// Tiles follow the sign string -^{a1} +^{a2} -^{a3} ... with its first and
// last signs removed; each remaining sign labels the edge shared by two
// consecutive tiles. A sequence with entry sum s >= 2 gives s - 1 tiles;
// G[] is empty and G[1] is a single edge.
SnakeGraph build_snake_graph(const AdmissibleSeq& s);

constexpr std::size_t kDefaultMaxTiles = 16;
// Exhaustive perfect-matching count. Throws ResourceError past max_tiles.
BigInt count_matchings_bruteforce(const SnakeGraph& g,
                                  std::size_t max_tiles = kDefaultMaxTiles);

// Tails (first entry dropped) of every cyclic rotation, starting with s.
std::vector<AdmissibleSeq> rotation_tails(const AdmissibleSeq& s);

}  // namespace gmspec

#endif  // GMSPEC_SNAKE_HPP_
