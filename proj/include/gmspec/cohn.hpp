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

#ifndef GMSPEC_COHN_HPP_
#define GMSPEC_COHN_HPP_

#include "gmspec/exact.hpp"
#include "gmspec/farey.hpp"
#include "gmspec/gm_tree.hpp"

namespace gmspec {

// [[k, k K], [0, k]].
Mat2 d_matrix(long k, long K);

struct CohnEntry {
  Mat2 m;
  int pos = 1;
};

struct CohnTriple {
  CohnEntry left, mid, right;
};

// (C_{0/1}, C_{1/1}, C_{1/0}) at positions (sigma(1), sigma(2), sigma(3)).
CohnTriple cohn_root(const GMParams& params);
CohnTriple cohn_left_child(const CohnTriple& t, const GMParams& params);
CohnTriple cohn_right_child(const CohnTriple& t, const GMParams& params);

// C_t by walking the matrix tree with the D correction.
Mat2 cohn_recursive(const Fraction& t, const GMParams& params);
// C_t from (n_t, i_t, u_t).
Mat2 cohn_closed_form(const Fraction& t, const GMParams& params);
Mat2 cohn_closed_form(const GMPair& pair, const BigInt& u,
                      const GMParams& params);

// Even-length continued fraction of (1,1)/(2,1) entry; for C_t with
// t != 0/1 this is s(t).
AdmissibleSeq sequence_from_cohn(const Mat2& c);

}  // namespace gmspec

#endif  // GMSPEC_COHN_HPP_
