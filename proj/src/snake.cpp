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

#include "gmspec/snake.hpp"

#include <algorithm>
#include <map>

#include "gmspec/errors.hpp"

namespace gmspec {

BigInt continuant(const AdmissibleSeq& s) {
  BigInt p0 = 1, p1 = 0;
  for (long a : s) {
    BigInt next = a * p0 + p1;
    p1 = std::move(p0);
    p0 = std::move(next);
  }
  return p0;
}

namespace {

class GraphBuilder {
 public:
  std::size_t vertex(long x, long y) {
    auto [it, inserted] = ids_.emplace(std::make_pair(x, y), g_.vertices.size());
    if (inserted) g_.vertices.emplace_back(x, y);
    return it->second;
  }
  void edge(long x0, long y0, long x1, long y1) {
    std::size_t u = vertex(x0, y0), v = vertex(x1, y1);
    std::array<std::size_t, 2> e{std::min(u, v), std::max(u, v)};
    if (std::find(g_.edges.begin(), g_.edges.end(), e) == g_.edges.end()) {
      g_.edges.push_back(e);
    }
  }
  void tile(long x, long y) {
    edge(x, y, x + 1, y);
    edge(x + 1, y, x + 1, y + 1);
    edge(x, y + 1, x + 1, y + 1);
    edge(x, y, x, y + 1);
  }
  SnakeGraph& graph() { return g_; }

 private:
  SnakeGraph g_;
  std::map<std::pair<long, long>, std::size_t> ids_;
};

}  // namespace

SnakeGraph build_snake_graph(const AdmissibleSeq& s) {
  GraphBuilder b;
  const long total = s.sum();
  if (total == 0) return b.graph();
  if (total == 1) {
    b.edge(0, 0, 1, 0);
    return b.graph();
  }
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(total));
  int sign = -1;
  for (long a : s) {
    signs.insert(signs.end(), static_cast<std::size_t>(a), sign);
    sign = -sign;
  }
  // A tile's north and west edges carry one sign and its south and east
  // edges the other, so the east sign decides whether the glued edge is the
  // east (next tile to the right) or the north one (next tile above).
  long x = 0, y = 0;
  int east = -1;
  SnakeGraph& g = b.graph();
  g.tiles.push_back(TileDir::kFirst);
  g.corners.emplace_back(x, y);
  b.tile(x, y);
  for (std::size_t i = 1; i + 1 < signs.size(); ++i) {
    const int glue = signs[i];
    if (glue == east) {
      ++x;
      g.tiles.push_back(TileDir::kRight);
      east = -glue;
    } else {
      ++y;
      g.tiles.push_back(TileDir::kUp);
      east = glue;
    }
    g.corners.emplace_back(x, y);
    b.tile(x, y);
  }
  return g;
}

namespace {

std::uint64_t count_from(const std::vector<std::vector<std::size_t>>& adj,
                         std::vector<char>& used, std::size_t next) {
  while (next < used.size() && used[next]) ++next;
  if (next == used.size()) return 1;
  std::uint64_t total = 0;
  used[next] = 1;
  for (std::size_t w : adj[next]) {
    if (used[w]) continue;
    used[w] = 1;
    total += count_from(adj, used, next + 1);
    used[w] = 0;
  }
  used[next] = 0;
  return total;
}

}  // namespace

BigInt count_matchings_bruteforce(const SnakeGraph& g, std::size_t max_tiles) {
  if (g.tiles.size() > max_tiles) {
    throw ResourceError("snake graph has " + std::to_string(g.tiles.size()) +
                        " tiles, brute-force bound is " +
                        std::to_string(max_tiles));
  }
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<char> used(g.vertices.size(), 0);
  return BigInt(static_cast<unsigned long>(count_from(adj, used, 0)));
}

std::vector<AdmissibleSeq> rotation_tails(const AdmissibleSeq& s) {
  std::vector<AdmissibleSeq> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s.rotated(k).tail());
  return out;
}

}  // namespace gmspec
