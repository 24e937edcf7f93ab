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

#include "gmspec/cohn.hpp"

#include "gmspec/errors.hpp"

namespace gmspec {

Mat2 d_matrix(long k, long K) {
  return Mat2{BigInt(k), BigInt(k) * K, BigInt(0), BigInt(k)};
}

CohnTriple cohn_root(const GMParams& params) {
  const long K = params.K();
  const Permutation& s = params.sigma;
  const long k1 = params.k_at(s(1));
  const long k2 = params.k_at(s(2));
  const long k3 = params.k_at(s(3));
  Mat2 c01{BigInt(K), BigInt(-K * k1 - 1), BigInt(1), BigInt(-k1)};
  Mat2 c11{BigInt(K) * (k2 + 2) - k2 - 1, BigInt(K - 1), BigInt(k2 + 2),
           BigInt(1)};
  Mat2 c10{BigInt(K - 1 - k3), BigInt(K - 2 - k3), BigInt(1), BigInt(1)};
  return CohnTriple{{c01, s(1)}, {c11, s(2)}, {c10, s(3)}};
}

CohnTriple cohn_left_child(const CohnTriple& t, const GMParams& params) {
  const int j = t.right.pos;
  Mat2 m = t.left.m * t.mid.m - d_matrix(params.k_at(j), params.K());
  return CohnTriple{t.left, {std::move(m), j}, t.mid};
}

CohnTriple cohn_right_child(const CohnTriple& t, const GMParams& params) {
  const int h = t.left.pos;
  Mat2 m = t.mid.m * t.right.m - d_matrix(params.k_at(h), params.K());
  return CohnTriple{t.mid, {std::move(m), h}, t.right};
}

Mat2 cohn_recursive(const Fraction& t, const GMParams& params) {
  CohnTriple tri = cohn_root(params);
  if (t.num() == 0) return tri.left.m;
  if (t.is_infinite()) return tri.right.m;
  for (Step s : farey_locate(t).path) {
    tri = s == Step::kLeft ? cohn_left_child(tri, params)
                           : cohn_right_child(tri, params);
  }
  return tri.mid.m;
}

Mat2 cohn_closed_form(const GMPair& pair, const BigInt& u,
                      const GMParams& params) {
  const BigInt& n = pair.value;
  const long K = params.K();
  const long kt = params.k_at(pair.pos);
  BigInt num = K * n * u - kt * u - u * u - 1;
  if (!mpz_divisible_p(num.get_mpz_t(), n.get_mpz_t())) {
    throw InvariantViolation("closed-form Cohn entry is not integral");
  }
  BigInt b;
  mpz_divexact(b.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  return Mat2{K * n - kt - u, std::move(b), n, u};
}

Mat2 cohn_closed_form(const Fraction& t, const GMParams& params) {
  GMNode node = gm_node(t, params);
  return cohn_closed_form(node.mid, characteristic_number(t, node, params),
                          params);
}

AdmissibleSeq sequence_from_cohn(const Mat2& c) {
  if (c.c <= 0 || c.a <= 0) {
    throw DomainError("sequence recovery needs positive (1,1), (2,1) entries");
  }
  std::vector<long> digits;
  BigInt a = c.a, b = c.c;
  while (b != 0) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!q.fits_slong_p()) throw DomainError("partial quotient too large");
    digits.push_back(q.get_si());
    a = b;
    b = r;
  }
  if (digits.size() % 2 == 1) {
    digits.back() -= 1;
    digits.push_back(1);
  }
  return AdmissibleSeq(std::move(digits));
}

}  // namespace gmspec
