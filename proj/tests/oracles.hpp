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

// Reference implementations used only by tests. Each one takes a different
// route from the library so that agreement is meaningful.

#ifndef GMSPEC_TESTS_ORACLES_HPP_
#define GMSPEC_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;

struct M2 {
  Int a, b, c, d;
};

// Plain left-to-right product of [[a_i, 1], [1, 0]].
M2 cf_product(const std::vector<long>& s);

// Numerator of [a1; a2, ..., an] in lowest terms; 1 for the empty sequence.
Int continuant_via_fraction(const std::vector<long>& s);

// Run lengths of the sign string for a/b, built by walking the shifted segment
// with exact rationals. k is (k1, k2, k3), sigma holds images of 1, 2, 3.
std::vector<long> sign_runs(long a, long b, const std::array<long, 3>& k,
                            const std::array<int, 3>& sigma);

// Max over splittings of the bi-infinite periodic word of
// [a_i; a_{i+1}, ...] + [0; a_{i-1}, a_{i-2}, ...], in long double.
long double lagrange_float(const std::vector<long>& s);

// Left-hand side minus right-hand side of the GM equation.
Int gm_residual(const Int& x, const Int& y, const Int& z,
                const std::array<long, 3>& k);

// Every (value, position) pair occurring in a positive solution whose largest
// entry is <= bound, found by solving for z over all x, y <= bound.
std::set<std::pair<long, int>> gm_pairs_bruteforce(const std::array<long, 3>& k,
                                                   long bound);

// (p + q sqrt(D)) / r as long double.
long double surd_float(const Int& p, const Int& q, const Int& D, const Int& r);

}  // namespace oracle

#endif  // GMSPEC_TESTS_ORACLES_HPP_
