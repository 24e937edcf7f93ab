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

#ifndef GMSPEC_SPECTRUM_HPP_
#define GMSPEC_SPECTRUM_HPP_

#include <string>
#include <vector>

#include "gmspec/exact.hpp"
#include "gmspec/farey.hpp"
#include "gmspec/gm_tree.hpp"

namespace gmspec {

struct SpectrumElement {
  QuadSurd value;
  BigInt n;
  int pos = 1;
  Fraction t;
  GMParams params;
};

// a x^2 + b xy + c y^2.
struct QForm {
  BigRat a, b, c;
  BigRat discriminant() const { return b * b - 4 * a * c; }
  BigRat eval(const BigInt& x, const BigInt& y) const;
  std::string to_string() const;
};

// sqrt(((3 + k1 + k2 + k3) n - k_pos)^2 - 4) / n.
QuadSurd spectrum_value(const BigInt& n, int pos, const KTriple& k);

// sqrt(tr^2 - (-1)^|S| 4) / c for cf_matrix(S) = [[a, b], [c, d]].
QuadSurd ell_periodic(const AdmissibleSeq& s);
// sqrt(tr^2 - (-1)^|T| 4) over the least (2,1) entry among the matrices of
// all cyclic rotations of T.
QuadSurd lagrange_value(const AdmissibleSeq& t);
// Index of the first rotation attaining the least (2,1) entry.
std::size_t lagrange_rotation(const AdmissibleSeq& t);
// [S, S, S, ...]: the larger fixed point of cf_matrix(S).
QuadSurd alpha_fixed_point(const AdmissibleSeq& s);
SpectrumElement markov_value(const Fraction& t, const GMParams& params);
// x^2 - ((a - d)/c) xy - (b/c) y^2 = (x - alpha y)(x - alpha' y).
QForm qform_of(const AdmissibleSeq& s);

struct NumericSup {
  bool infinite = false;
  // sqrt(disc) / |Q(x, y)| at the minimizing point; exact.
  QuadSurd value;
  BigInt x, y;
};
// Max of sqrt(disc) / |Q(x, y)| over 0 < max(|x|, |y|) <= bound. For each
// row y only the integers next to the two real roots of Q(., y) and the box
// ends can minimize |Q|, so the scan is exact and linear in the bound.
NumericSup markov_sup_numeric(const QForm& q, long bound);

// (2221564096 + 283748 sqrt(462)) / 491993569.
const QuadSurd& freiman_constant();

// Distinct values for sigma in the alternating group, t at Farey depth
// <= depth and the two boundary fractions, ascending. Each value keeps the
// first witness in generation order (sigma: id, (1 2 3), (1 3 2); within a
// tree: 0/1, breadth-first nodes, 1/0).
std::vector<SpectrumElement> enumerate_spectrum(const KTriple& k, int depth);

struct TransitionHit {
  KTriple k;
  SpectrumElement element;
};
// Elements of enumerate_spectrum(k, depth) inside [3, c_F), for every k with
// max(k) <= kmax, grouped by k in lexicographic order. Finite depth can only
// confirm membership; it does not bound the full spectrum.
std::vector<TransitionHit> transition_scan(long kmax, int depth);

}  // namespace gmspec

#endif  // GMSPEC_SPECTRUM_HPP_
