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

#ifndef GMSPEC_EXACT_HPP_
#define GMSPEC_EXACT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gmspec {

using BigInt = mpz_class;
using BigRat = mpq_class;

// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  BigInt a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return Mat2{}; }
  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  std::string to_string() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y);
};

// Finite sequence of positive integers.
class AdmissibleSeq {
 public:
  AdmissibleSeq() = default;
  // Throws DomainError if any entry is < 1.
  explicit AdmissibleSeq(std::vector<long> entries);
  AdmissibleSeq(std::initializer_list<long> entries);

  // Parses "a,b,c". The empty string gives the empty sequence.
  static AdmissibleSeq parse(std::string_view text);

  const std::vector<long>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  long sum() const;

  AdmissibleSeq reversed() const;
  // Cyclic rotation starting at index k.
  AdmissibleSeq rotated(std::size_t k) const;
  // Drops the first entry; the empty sequence stays empty.
  AdmissibleSeq tail() const;
  AdmissibleSeq concat(const AdmissibleSeq& other) const;
  std::string to_string() const;

  friend bool operator==(const AdmissibleSeq&, const AdmissibleSeq&) = default;

 private:
  std::vector<long> entries_;
};

// Product of [[a, 1], [1, 0]] over the entries, in order.
Mat2 cf_matrix(const AdmissibleSeq& s);
// Same product for arbitrary integer partial quotients.
Mat2 cf_matrix(const std::vector<BigInt>& s);

// Writes d = s^2 * core. When `certified` is true the core is squarefree.
// Cores are certified whenever the cofactor left after dividing out primes
// below 1024 is under 2^51; beyond that only a perfect-square test of the
// cofactor is applied.
struct SquareSplit {
  BigInt s;
  BigInt core;
  bool certified = true;
};
SquareSplit split_square(const BigInt& d);

// Exact quadratic irrational (p + q*sqrt(D)) / r, always held in canonical
// form: r > 0, q == 0 implies D == 1, gcd(p, q, r) == 1, square part of D
// moved into q (see split_square for the limits of that step).
class QuadSurd {
 public:
  QuadSurd() = default;  // zero
  static QuadSurd canonical(BigInt p, BigInt q, BigInt D, BigInt r);
  static QuadSurd from_rational(const BigRat& x);
  static QuadSurd from_int(long x) { return from_rational(BigRat(x)); }
  // sqrt(num) / den for num >= 0, den != 0.
  static QuadSurd sqrt_over(const BigInt& num, const BigInt& den);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& D() const { return D_; }
  const BigInt& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  BigRat rational_part() const;
  QuadSurd conjugate() const;
  int sign() const;
  // Largest integer <= value.
  BigInt floor() const;
  // floor(m * value), without building the product.
  BigInt floor_times(const BigInt& m) const;
  // "(p + q√D)/r"; a negative q prints as "(p - |q|√D)/r".
  std::string to_string() const;
  // Correctly rounded decimal with the given number of significant digits.
  std::string to_decimal(int digits = 12) const;

  QuadSurd operator-() const;
  // Arithmetic requires both operands in one quadratic field (or one of them
  // rational); otherwise throws DomainError.
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);

  friend bool operator==(const QuadSurd& x, const QuadSurd& y);
  friend std::strong_ordering operator<=>(const QuadSurd& x,
                                          const QuadSurd& y);

 private:
  QuadSurd(BigInt p, BigInt q, BigInt D, BigInt r)
      : p_(std::move(p)), q_(std::move(q)), D_(std::move(D)), r_(std::move(r)) {}
  BigInt p_{0}, q_{0}, D_{1}, r_{1};
};

QuadSurd surd_canonicalize(const BigInt& p, const BigInt& q, const BigInt& D,
                           const BigInt& r);
// Exact comparison: algebraic equality test, then certified dyadic
// intervals starting at 64 fractional bits and doubling.
std::strong_ordering surd_cmp(const QuadSurd& x, const QuadSurd& y);
// Number of refinement rounds used by the last surd_cmp on this thread
// (0 when equality was decided algebraically). Exposed for tests.
int last_cmp_rounds();
// True if both values lie in a common field Q(sqrt(d)).
bool same_field(const QuadSurd& x, const QuadSurd& y);
// (m.a * x + m.b) / (m.c * x + m.d).
QuadSurd mobius(const Mat2& m, const QuadSurd& x);
// Larger root of c*y^2 + (d - a)*y - b = 0, i.e. the attracting fixed point
// of y -> (a*y + b)/(c*y + d). Throws DomainError when c == 0.
QuadSurd fixed_point(const Mat2& m);

struct PeriodicExpansion {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;
};
// Regular continued fraction of an irrational surd with minimal period.
// Throws DomainError for rational input.
PeriodicExpansion periodic_cf_expansion(const QuadSurd& x);
// Value of [preperiod; period, period, ...].
QuadSurd periodic_value(const PeriodicExpansion& e);
// True if `block` is `period` repeated one or more times.
bool is_block_power(const std::vector<BigInt>& period,
                    const std::vector<BigInt>& block);
std::vector<BigInt> to_bigints(const AdmissibleSeq& s);

}  // namespace gmspec

#endif  // GMSPEC_EXACT_HPP_
