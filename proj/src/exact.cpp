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

#include "gmspec/exact.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

#include "gmspec/errors.hpp"

namespace gmspec {

std::string Mat2::to_string() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," +
         d.get_str() + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

bool operator==(const Mat2& x, const Mat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

AdmissibleSeq::AdmissibleSeq(std::vector<long> entries)
    : entries_(std::move(entries)) {
  for (long e : entries_) {
    if (e < 1) {
      throw DomainError("sequence entries must be positive, got " +
                        std::to_string(e));
    }
  }
}

AdmissibleSeq::AdmissibleSeq(std::initializer_list<long> entries)
    : AdmissibleSeq(std::vector<long>(entries)) {}

AdmissibleSeq AdmissibleSeq::parse(std::string_view text) {
  std::vector<long> out;
  if (text.empty()) return AdmissibleSeq();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw DomainError("bad sequence entry '" + std::string(item) + "'");
    }
    out.push_back(v);
    start = comma + 1;
  }
  return AdmissibleSeq(std::move(out));
}

long AdmissibleSeq::sum() const {
  long s = 0;
  for (long e : entries_) s += e;
  return s;
}

AdmissibleSeq AdmissibleSeq::reversed() const {
  AdmissibleSeq out = *this;
  std::reverse(out.entries_.begin(), out.entries_.end());
  return out;
}

AdmissibleSeq AdmissibleSeq::rotated(std::size_t k) const {
  AdmissibleSeq out = *this;
  if (!out.entries_.empty()) {
    std::rotate(out.entries_.begin(),
                out.entries_.begin() + (k % out.entries_.size()),
                out.entries_.end());
  }
  return out;
}

AdmissibleSeq AdmissibleSeq::tail() const {
  AdmissibleSeq out;
  if (!entries_.empty()) {
    out.entries_.assign(entries_.begin() + 1, entries_.end());
  }
  return out;
}

AdmissibleSeq AdmissibleSeq::concat(const AdmissibleSeq& other) const {
  AdmissibleSeq out = *this;
  out.entries_.insert(out.entries_.end(), other.entries_.begin(),
                      other.entries_.end());
  return out;
}

std::string AdmissibleSeq::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

// Right-multiplies m by [[a, 1], [1, 0]].
void push_quotient(Mat2& m, const BigInt& a) {
  BigInt na = m.a * a + m.b;
  BigInt nc = m.c * a + m.d;
  m.b = std::move(m.a);
  m.d = std::move(m.c);
  m.a = std::move(na);
  m.c = std::move(nc);
}

}  // namespace

Mat2 cf_matrix(const AdmissibleSeq& s) {
  Mat2 m;
  BigInt a;
  for (long e : s) {
    a = e;
    push_quotient(m, a);
  }
  return m;
}

Mat2 cf_matrix(const std::vector<BigInt>& s) {
  Mat2 m;
  for (const BigInt& a : s) push_quotient(m, a);
  return m;
}

std::vector<BigInt> to_bigints(const AdmissibleSeq& s) {
  std::vector<BigInt> out;
  out.reserve(s.size());
  for (long e : s) out.emplace_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Square parts.

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1UL << 17;
    std::vector<char> composite(kLimit + 1, 0);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = 1;
    }
    return out;
  }();
  return primes;
}

constexpr unsigned long kAlwaysTrial = 1024;

// Divides p out of c completely and folds it into s / core.
void strip_prime(BigInt& c, unsigned long p, BigInt& s, BigInt& core) {
  unsigned e = 0;
  while (mpz_divisible_ui_p(c.get_mpz_t(), p)) {
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
    ++e;
  }
  for (unsigned i = 0; i < e / 2; ++i) s *= p;
  if (e % 2) core *= p;
}

}  // namespace

SquareSplit split_square(const BigInt& d) {
  SquareSplit out{BigInt(1), BigInt(1), true};
  if (d <= 0) {
    out.s = 0;
    out.core = 1;
    return out;
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    out.s = sqrt(d);
    return out;
  }
  BigInt c = d;
  const auto& primes = small_primes();
  std::size_t i = 0;
  for (; i < primes.size() && primes[i] < kAlwaysTrial; ++i) {
    strip_prime(c, primes[i], out.s, out.core);
  }
  static const BigInt kCertLimit = BigInt(1) << 51;
  if (c < kCertLimit) {
    // Any square factor p^2 of c with p <= cbrt(c) is found by trial
    // division; past that c is 1, a prime, a product of two primes, or p^2.
    for (; i < primes.size() && c > 1; ++i) {
      unsigned long p = primes[i];
      if (BigInt(p) * p * p > c) break;
      strip_prime(c, p, out.s, out.core);
    }
  } else {
    out.certified = false;
  }
  if (c > 1) {
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      out.s *= sqrt(c);
    } else {
      out.core *= c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuadSurd.

QuadSurd QuadSurd::canonical(BigInt p, BigInt q, BigInt D, BigInt r) {
  if (r == 0) throw DomainError("surd denominator must be nonzero");
  if (D < 0) throw DomainError("surd radicand must be nonnegative");
  if (r < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  if (D == 0 || q == 0) {
    q = 0;
    D = 1;
  } else if (D != 1) {
    SquareSplit sp = split_square(D);
    q *= sp.s;
    D = std::move(sp.core);
  }
  if (D == 1) {
    p += q;
    q = 0;
  }
  BigInt g = gcd(gcd(p, q), r);
  if (g != 1) {
    mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t());
  }
  return QuadSurd(std::move(p), std::move(q), std::move(D), std::move(r));
}

QuadSurd surd_canonicalize(const BigInt& p, const BigInt& q, const BigInt& D,
                           const BigInt& r) {
  return QuadSurd::canonical(p, q, D, r);
}

QuadSurd QuadSurd::from_rational(const BigRat& x) {
  return canonical(x.get_num(), 0, 1, x.get_den());
}

QuadSurd QuadSurd::sqrt_over(const BigInt& num, const BigInt& den) {
  return canonical(0, 1, num, den);
}

BigRat QuadSurd::rational_part() const {
  BigRat x(p_, r_);
  x.canonicalize();
  return x;
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(p_, -q_, D_, r_); }

QuadSurd QuadSurd::operator-() const { return QuadSurd(-p_, -q_, D_, r_); }

namespace {

// Sign of p + q*sqrt(D).
int surd_numerator_sign(const BigInt& p, const BigInt& q, const BigInt& D) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with q^2 D.
  int c = cmp(BigInt(p * p), BigInt(q * q * D));
  if (c == 0) return 0;
  return c > 0 ? sp : sq;
}

// floor((p + q*sqrt(D)) / r) for r > 0.
BigInt floor_surd(const BigInt& p, const BigInt& q, const BigInt& D,
                  const BigInt& r) {
  BigInt num;
  if (q == 0) {
    num = p;
  } else {
    BigInt s = q * q * D;
    BigInt root = sqrt(s);
    if (q > 0) {
      num = p + root;
    } else {
      if (root * root != s) root += 1;
      num = p - root;
    }
  }
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_mpz_t());
  return out;
}

thread_local int g_last_rounds = 0;

}  // namespace

int QuadSurd::sign() const { return surd_numerator_sign(p_, q_, D_); }

BigInt QuadSurd::floor() const { return floor_surd(p_, q_, D_, r_); }

BigInt QuadSurd::floor_times(const BigInt& m) const {
  return floor_surd(p_ * m, q_ * m, D_, r_);
}

std::string QuadSurd::to_string() const {
  std::string out = "(" + p_.get_str();
  if (q_ < 0) {
    out += " - " + BigInt(-q_).get_str();
  } else {
    out += " + " + q_.get_str();
  }
  out += "√" + D_.get_str() + ")/" + r_.get_str();
  return out;
}

std::string QuadSurd::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  int s = sign();
  if (s == 0) return "0";
  QuadSurd a = s < 0 ? -*this : *this;
  // Pick a scale 10^e with 10^(digits-1) <= a * 10^e < 10^digits.
  BigInt lo_target, hi_target;
  mpz_ui_pow_ui(lo_target.get_mpz_t(), 10, digits - 1);
  hi_target = lo_target * 10;
  auto scaled_floor = [&](long e) {
    BigInt f;
    mpz_ui_pow_ui(f.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return floor_surd(a.p_ * f, a.q_ * f, a.D_, a.r_);
    return floor_surd(a.p_, a.q_, a.D_, a.r_ * f);
  };
  // Start from an estimate based on bit sizes, then adjust.
  long e = digits - 1;
  {
    BigInt fl = a.floor();
    if (fl > 0) e = digits - static_cast<long>(fl.get_str().size());
  }
  for (int guard = 0; guard < 4096; ++guard) {
    BigInt v = scaled_floor(e);
    if (v < lo_target) {
      ++e;
    } else if (v >= hi_target) {
      --e;
    } else {
      break;
    }
  }
  // Round half up on a * 10^e: floor(a * 10^e + 1/2).
  BigInt f;
  mpz_ui_pow_ui(f.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  BigInt n = e >= 0 ? floor_surd(2 * a.p_ * f + a.r_, 2 * a.q_ * f, a.D_,
                                 2 * a.r_)
                    : floor_surd(2 * a.p_ + a.r_ * f, 2 * a.q_, a.D_,
                                 2 * a.r_ * f);
  if (n >= hi_target) {
    n /= 10;
    --e;
  }
  std::string digs = n.get_str();
  std::string out;
  if (e <= 0) {
    out = digs + std::string(static_cast<std::size_t>(-e), '0');
  } else if (static_cast<std::size_t>(e) >= digs.size()) {
    out = "0." + std::string(static_cast<std::size_t>(e) - digs.size(), '0') +
          digs;
  } else {
    out = digs.substr(0, digs.size() - e) + "." + digs.substr(digs.size() - e);
  }
  return s < 0 ? "-" + out : out;
}

namespace {

// Rewrites x over radicand d, when sqrt(x.D) / sqrt(d) is rational.
bool rebase(const QuadSurd& x, const BigInt& d, BigInt& p, BigInt& q,
            BigInt& r) {
  p = x.p();
  r = x.r();
  if (x.is_rational()) {
    q = 0;
    return true;
  }
  if (x.D() == d) {
    q = x.q();
    return true;
  }
  BigInt prod = x.D() * d;
  if (!mpz_perfect_square_p(prod.get_mpz_t())) return false;
  // sqrt(D) = sqrt(D d) / d * sqrt(d)
  BigInt s = sqrt(prod);
  p *= d;
  q = x.q() * s;
  r *= d;
  return true;
}

BigInt common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.D();
  return x.D();
}

struct Aligned {
  BigInt d, p1, q1, r1, p2, q2, r2;
};

Aligned align(const QuadSurd& x, const QuadSurd& y) {
  Aligned a;
  a.d = common_radicand(x, y);
  if (!rebase(x, a.d, a.p1, a.q1, a.r1) || !rebase(y, a.d, a.p2, a.q2, a.r2)) {
    throw DomainError("surd arithmetic across different quadratic fields");
  }
  return a;
}

}  // namespace

bool same_field(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational() || y.is_rational()) return true;
  BigInt prod = x.D() * y.D();
  return mpz_perfect_square_p(prod.get_mpz_t()) != 0;
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  Aligned a = align(x, y);
  return QuadSurd::canonical(a.p1 * a.r2 + a.p2 * a.r1,
                             a.q1 * a.r2 + a.q2 * a.r1, a.d, a.r1 * a.r2);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  Aligned a = align(x, y);
  return QuadSurd::canonical(a.p1 * a.p2 + a.q1 * a.q2 * a.d,
                             a.p1 * a.q2 + a.p2 * a.q1, a.d, a.r1 * a.r2);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
  if (y.sign() == 0) throw DomainError("division by zero surd");
  Aligned a = align(x, y);
  // x / y = x * conj(y) * r2^2 / (p2^2 - q2^2 d) ... with y = (p2+q2 rt)/r2.
  BigInt norm = a.p2 * a.p2 - a.q2 * a.q2 * a.d;
  // (p1 + q1 rt)(p2 - q2 rt) r2 / (r1 * norm)
  BigInt np = (a.p1 * a.p2 - a.q1 * a.q2 * a.d) * a.r2;
  BigInt nq = (a.q1 * a.p2 - a.p1 * a.q2) * a.r2;
  return QuadSurd::canonical(np, nq, a.d, a.r1 * norm);
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
  // Equal values have equal rational parts and equal irrational parts; the
  // irrational parts are compared through their squares and signs, which
  // does not depend on how far the radicands were reduced.
  if (x.p() * y.r() != y.p() * x.r()) return false;
  if (sgn(x.q()) != sgn(y.q())) return false;
  if (x.q() == 0) return true;
  return x.q() * x.q() * x.D() * y.r() * y.r() ==
         y.q() * y.q() * y.D() * x.r() * x.r();
}

std::strong_ordering surd_cmp(const QuadSurd& x, const QuadSurd& y) {
  g_last_rounds = 0;
  if (x == y) return std::strong_ordering::equal;
  if (same_field(x, y)) {
    Aligned a = align(x, y);
    int s = surd_numerator_sign(a.p1 * a.r2 - a.p2 * a.r1,
                                a.q1 * a.r2 - a.q2 * a.r1, a.d);
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // floor(v * 2^b) brackets v in [f, f + 1) / 2^b.
  for (unsigned long bits = 64;; bits *= 2) {
    ++g_last_rounds;
    BigInt scale = BigInt(1) << bits;
    BigInt fx = floor_surd(x.p() * scale, x.q() * scale, x.D(), x.r());
    BigInt fy = floor_surd(y.p() * scale, y.q() * scale, y.D(), y.r());
    if (fx + 1 <= fy) return std::strong_ordering::less;
    if (fy + 1 <= fx) return std::strong_ordering::greater;
  }
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
  return surd_cmp(x, y);
}

int last_cmp_rounds() { return g_last_rounds; }

QuadSurd mobius(const Mat2& m, const QuadSurd& x) {
  QuadSurd a = QuadSurd::from_rational(BigRat(m.a));
  QuadSurd b = QuadSurd::from_rational(BigRat(m.b));
  QuadSurd c = QuadSurd::from_rational(BigRat(m.c));
  QuadSurd d = QuadSurd::from_rational(BigRat(m.d));
  return (a * x + b) / (c * x + d);
}

QuadSurd fixed_point(const Mat2& m) {
  if (m.c == 0) throw DomainError("fixed point needs a nonzero (2,1) entry");
  BigInt disc = m.trace() * m.trace() - 4 * m.det();
  if (disc < 0) throw DomainError("matrix has no real fixed point");
  // y = (a - d +/- sqrt(disc)) / (2c); take the larger root.
  BigInt den = 2 * m.c;
  BigInt q = den > 0 ? BigInt(1) : BigInt(-1);
  return QuadSurd::canonical(m.a - m.d, q, disc, den);
}

PeriodicExpansion periodic_cf_expansion(const QuadSurd& x) {
  if (x.is_rational()) {
    throw DomainError("periodic expansion needs an irrational input");
  }
  // Bring x to (P + sqrt(d)) / Q with Q | d - P^2.
  BigInt d = x.q() * x.q() * x.D();
  BigInt P = x.q() > 0 ? x.p() : BigInt(-x.p());
  BigInt Q = x.q() > 0 ? x.r() : BigInt(-x.r());
  {
    BigInt rem = d - P * P;
    if (!mpz_divisible_p(rem.get_mpz_t(), Q.get_mpz_t())) {
      BigInt aq = abs(Q);
      P *= aq;
      d *= Q * Q;
      Q *= aq;
    }
  }
  const BigInt root = sqrt(d);
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> terms;
  for (;;) {
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), terms.size());
    if (!inserted) {
      PeriodicExpansion out;
      out.preperiod.assign(terms.begin(), terms.begin() + it->second);
      out.period.assign(terms.begin() + it->second, terms.end());
      return out;
    }
    BigInt a;
    if (Q > 0) {
      BigInt num = P + root;
      mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    } else {
      // (P + sqrt d)/Q = (-P - sqrt d)/|Q|; d is not a square.
      BigInt num = -P - root - 1;
      BigInt aq = -Q;
      mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), aq.get_mpz_t());
    }
    terms.push_back(a);
    P = a * Q - P;
    BigInt rem = d - P * P;
    if (!mpz_divisible_p(rem.get_mpz_t(), Q.get_mpz_t())) {
      throw InvariantViolation("continued fraction state lost integrality");
    }
    mpz_divexact(Q.get_mpz_t(), rem.get_mpz_t(), Q.get_mpz_t());
  }
}

QuadSurd periodic_value(const PeriodicExpansion& e) {
  if (e.period.empty()) throw DomainError("empty period");
  QuadSurd y = fixed_point(cf_matrix(e.period));
  return mobius(cf_matrix(e.preperiod), y);
}

bool is_block_power(const std::vector<BigInt>& period,
                    const std::vector<BigInt>& block) {
  if (period.empty() || block.empty() || block.size() % period.size() != 0) {
    return false;
  }
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i] != period[i % period.size()]) return false;
  }
  return true;
}

}  // namespace gmspec
