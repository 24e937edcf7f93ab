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

#ifndef GMSPEC_LATTICE_HPP_
#define GMSPEC_LATTICE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gmspec/exact.hpp"
#include "gmspec/farey.hpp"
#include "gmspec/gm_tree.hpp"

namespace gmspec {

// The lattice is triangulated by the lines x = i, y = j and x + y = m.

struct LatticePoint {
  long x = 0, y = 0;
  // Parses "x,y".
  static LatticePoint parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class LineKind { kVertical, kHorizontal, kDiagonal };

// A transversal crossing of a grid line by a traced polyline. `piece` is the
// polyline segment index and `param` the position in (0, 1) along it.
struct CrossingEvent {
  LineKind kind;
  long index;
  std::size_t piece;
  BigRat param;
};

// Signs are +1 / -1.
struct SignString {
  std::vector<signed char> signs;
  AdmissibleSeq runs() const;
  std::string to_string() const;
  friend bool operator==(const SignString&, const SignString&) = default;
};

// Crossings of the polyline through `points`, ordered along it. Throws
// DomainError if the polyline meets a lattice point other than its ends.
std::vector<CrossingEvent> trace_crossings(const std::vector<BigRat>& xs,
                                           const std::vector<BigRat>& ys);

// Sign string of the segment from (-delta, 0) to (b - delta, a) for t = a/b,
// with delta = 1 / (4 (a + b)^2 2^refine). Each crossed edge contributes
// k copies of one sign (k_{sigma(1)} for horizontal, k_{sigma(2)} for
// diagonal, k_{sigma(3)} for vertical edges): + when the edge midpoint is
// strictly right of the curve. Each triangle between two crossed edges
// contributes - when the vertex shared by those edges is strictly right of
// the curve and + otherwise. The start edge on y = 0 is signed, the end edge
// on y = a is not. Requires t in (0, infinity).
SignString admissible_sign_string(const Fraction& t, const GMParams& params,
                                  int refine = 0);

// s(t). Boundary values: s(0/1) = (1 + k_{sigma(2)} + k_{sigma(3)}, 1) and
// s(1/0) = (1 + k_{sigma(1)} + k_{sigma(2)}, 1). Interior values are
// computed twice (delta and delta / 2) and must agree.
AdmissibleSeq admissible_sequence(const Fraction& t, const GMParams& params);

enum class Side { kLeft, kRight };
// How the sign of an endpoint triangle relates to its neighbouring sign.
enum class EndpointSign { kMerge, kFlip };

// Sign string of the straight arc from A to B. When B - A is not primitive
// the interior is displaced to one side along the polyline
//   A -> A + eta d + eps n -> B - eta d + eps n -> B,
// d = B - A, n its left (or right) normal, eta = 1/(8N), eps = 1/(64 N^4),
// N = |dx| + |dy| + 1, both divided by 2^refine. Unit steps along grid
// edges give the empty string.
SignString segment_sign_string(const LatticePoint& a, const LatticePoint& b,
                               const GMParams& params, Side side,
                               EndpointSign start, EndpointSign end,
                               int refine = 0);

// Run lengths of segment_sign_string, checked against a refined recompute.
AdmissibleSeq segment_sign_sequence(const LatticePoint& a,
                                    const LatticePoint& b,
                                    const GMParams& params,
                                    Side side = Side::kLeft,
                                    EndpointSign start = EndpointSign::kMerge,
                                    EndpointSign end = EndpointSign::kMerge);

// continuant(s).
BigInt gm_length(const AdmissibleSeq& s);
// 0 when a == b, else gm_length of the left-displaced sign sequence.
BigInt gm_distance(const LatticePoint& a, const LatticePoint& b,
                   const GMParams& params);

}  // namespace gmspec

#endif  // GMSPEC_LATTICE_HPP_
