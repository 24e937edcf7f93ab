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

#include "gmspec/spectrum.hpp"

#include <algorithm>

#include "gmspec/errors.hpp"
#include "gmspec/parallel.hpp"

namespace gmspec {

BigRat QForm::eval(const BigInt& x, const BigInt& y) const {
  return a * BigRat(x * x) + b * BigRat(x * y) + c * BigRat(y * y);
}

std::string QForm::to_string() const {
  auto term = [](const BigRat& coef, const char* mono, bool first) {
    std::string out;
    if (coef == 0) return out;
    BigRat mag = abs(coef);
    if (first) {
      out += coef < 0 ? "-" : "";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    if (mag != 1) out += "(" + mag.get_str() + ")";
    return out + mono;
  };
  std::string out = term(a, "x^2", true);
  out += term(b, "xy", out.empty());
  out += term(c, "y^2", out.empty());
  return out.empty() ? "0" : out;
}

QuadSurd spectrum_value(const BigInt& n, int pos, const KTriple& k) {
  const long K = 3 + k[0] + k[1] + k[2];
  BigInt m = K * n - k[pos - 1];
  return QuadSurd::sqrt_over(m * m - 4, n);
}

QuadSurd ell_periodic(const AdmissibleSeq& s) {
  Mat2 m = cf_matrix(s);
  if (m.c == 0) throw DomainError("ell needs a nonzero (2,1) entry");
  return QuadSurd::sqrt_over(m.trace() * m.trace() - 4 * m.det(), m.c);
}

namespace {

// (2,1) entries of the matrices of all cyclic rotations, by conjugating
// with [[a, 1], [1, 0]]^{-1} = [[0, 1], [1, -a]].
std::vector<BigInt> rotation_denominators(const AdmissibleSeq& t) {
  std::vector<BigInt> out;
  Mat2 m = cf_matrix(t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    out.push_back(m.c);
    const BigInt a(t[k]);
    Mat2 fwd{a, BigInt(1), BigInt(1), BigInt(0)};
    Mat2 inv{BigInt(0), BigInt(1), BigInt(1), -a};
    m = inv * m * fwd;
  }
  return out;
}

}  // namespace

std::size_t lagrange_rotation(const AdmissibleSeq& t) {
  if (t.empty()) throw DomainError("lagrange value needs a nonempty sequence");
  std::vector<BigInt> dens = rotation_denominators(t);
  return static_cast<std::size_t>(
      std::min_element(dens.begin(), dens.end()) - dens.begin());
}

QuadSurd lagrange_value(const AdmissibleSeq& t) {
  if (t.empty()) throw DomainError("lagrange value needs a nonempty sequence");
  Mat2 m = cf_matrix(t);
  std::vector<BigInt> dens = rotation_denominators(t);
  const BigInt& c = *std::min_element(dens.begin(), dens.end());
  return QuadSurd::sqrt_over(m.trace() * m.trace() - 4 * m.det(), c);
}

QuadSurd alpha_fixed_point(const AdmissibleSeq& s) {
  return fixed_point(cf_matrix(s));
}

SpectrumElement markov_value(const Fraction& t, const GMParams& params) {
  GMPair pair = gm_pair(t, params);
  return SpectrumElement{spectrum_value(pair.value, pair.pos, params.k),
                         pair.value, pair.pos, t, params};
}

QForm qform_of(const AdmissibleSeq& s) {
  Mat2 m = cf_matrix(s);
  if (m.c == 0) throw DomainError("quadratic form needs a nonzero (2,1) entry");
  BigRat b(BigInt(m.d - m.a), m.c);
  BigRat c(BigInt(-m.b), m.c);
  b.canonicalize();
  c.canonicalize();
  return QForm{BigRat(1), b, c};
}

NumericSup markov_sup_numeric(const QForm& q, long bound) {
  if (bound < 1) throw DomainError("bound must be positive");
  const BigRat disc = q.discriminant();
  if (disc <= 0) throw DomainError("form is not indefinite");
  NumericSup out;
  BigRat best;
  bool have = false;
  auto consider = [&](const BigInt& x, const BigInt& y) {
    if (out.infinite) return;
    BigRat v = abs(q.eval(x, y));
    if (v == 0) {
      out.infinite = true;
      out.x = x;
      out.y = y;
      return;
    }
    if (!have || v < best) {
      have = true;
      best = v;
      out.x = x;
      out.y = y;
    }
  };
  // Q(-x, -y) = Q(x, y), so rows y >= 0 suffice.
  consider(BigInt(1), BigInt(0));
  if (q.a != 0) {
    const QuadSurd root_disc =
        QuadSurd::canonical(0, 1, disc.get_num() * disc.get_den(),
                            disc.get_den());
    const QuadSurd minus_b = QuadSurd::from_rational(-q.b);
    const QuadSurd two_a = QuadSurd::from_rational(2 * q.a);
    const QuadSurd roots[2] = {(minus_b + root_disc) / two_a,
                               (minus_b - root_disc) / two_a};
    const BigInt lo(-bound), hi(bound);
    for (long yi = 1; yi <= bound && !out.infinite; ++yi) {
      const BigInt y(yi);
      consider(lo, y);
      consider(hi, y);
      for (const QuadSurd& r : roots) {
        BigInt f = r.floor_times(y);
        for (BigInt x = f; x <= f + 1; ++x) {
          if (x < lo || x > hi) continue;
          consider(x, y);
        }
      }
    }
  } else {
    out.infinite = true;
  }
  if (!out.infinite) {
    out.value = QuadSurd::canonical(0, best.get_den(),
                                    disc.get_num() * disc.get_den(),
                                    disc.get_den() * best.get_num());
  }
  return out;
}

const QuadSurd& freiman_constant() {
  static const QuadSurd c = QuadSurd::canonical(
      BigInt(2221564096UL), BigInt(283748), BigInt(462), BigInt(491993569));
  return c;
}

namespace {

void add_tree(const GMParams& params, int depth,
              std::vector<SpectrumElement>& out, bool transition_window) {
  auto push = [&](const Fraction& t, const GMPair& pair) {
    if (transition_window) {
      // Cheap integer pre-filter: value < 3 iff disc < 9 n^2, and values at
      // or above 4.6 > c_F are dropped before canonicalization.
      const long K = params.K();
      BigInt m = K * pair.value - params.k_at(pair.pos);
      BigInt disc = m * m - 4;
      BigInt n2 = pair.value * pair.value;
      if (disc < 9 * n2) return;
      if (100 * disc >= 2116 * n2) return;
    }
    out.push_back(SpectrumElement{
        spectrum_value(pair.value, pair.pos, params.k), pair.value, pair.pos,
        t, params});
  };
  GMNode root = gm_root(params);
  push(Fraction(0, 1), root.left);
  for (const TreeEntry& e : enumerate_tree(params, depth)) {
    push(e.t, e.node.mid);
  }
  push(Fraction::infinity(), root.right);
}

std::vector<SpectrumElement> sort_unique(std::vector<SpectrumElement> v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const SpectrumElement& a, const SpectrumElement& b) {
                     return surd_cmp(a.value, b.value) < 0;
                   });
  std::vector<SpectrumElement> out;
  for (auto& e : v) {
    if (!out.empty() && out.back().value == e.value) continue;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SpectrumElement> collect(const KTriple& k, int depth,
                                     bool transition_window) {
  std::vector<SpectrumElement> all;
  for (const Permutation& sigma : Permutation::alternating()) {
    add_tree(GMParams{k, sigma}, depth, all, transition_window);
  }
  return all;
}

}  // namespace

std::vector<SpectrumElement> enumerate_spectrum(const KTriple& k, int depth) {
  return sort_unique(collect(k, depth, false));
}

std::vector<TransitionHit> transition_scan(long kmax, int depth) {
  if (kmax < 0) throw DomainError("kmax must be nonnegative");
  std::vector<KTriple> triples;
  for (long a = 0; a <= kmax; ++a) {
    for (long b = 0; b <= kmax; ++b) {
      for (long c = 0; c <= kmax; ++c) triples.push_back({a, b, c});
    }
  }
  const QuadSurd three = QuadSurd::from_int(3);
  const QuadSurd& cf = freiman_constant();
  std::vector<std::vector<SpectrumElement>> found(triples.size());
  parallel_for(triples.size(), [&](std::size_t i) {
    std::vector<SpectrumElement> in_window;
    for (auto& e : collect(triples[i], depth, true)) {
      if (surd_cmp(e.value, three) >= 0 && surd_cmp(e.value, cf) < 0) {
        in_window.push_back(std::move(e));
      }
    }
    found[i] = sort_unique(std::move(in_window));
  });
  std::vector<TransitionHit> out;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (auto& e : found[i]) out.push_back({triples[i], std::move(e)});
  }
  return out;
}

}  // namespace gmspec
