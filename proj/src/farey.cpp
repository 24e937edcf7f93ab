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

#include "gmspec/farey.hpp"

#include <charconv>
#include <numeric>

#include "gmspec/errors.hpp"

namespace gmspec {

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (num < 0 || den < 0 || (num == 0 && den == 0) ||
      std::gcd(num, den) != 1) {
    throw DomainError("not an irreducible nonnegative fraction: " +
                      std::to_string(num) + "/" + std::to_string(den));
  }
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text), 1);
  return Fraction(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::string Fraction::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
  __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
  __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t farey_det(const Fraction& x, const Fraction& y) {
  return x.num() * y.den() - y.num() * x.den();
}

Fraction mediant(const Fraction& x, const Fraction& y) {
  std::int64_t det = farey_det(x, y);
  if (det != 1 && det != -1) {
    throw DomainError("mediant of non-adjacent fractions " + x.to_string() +
                      ", " + y.to_string());
  }
  return Fraction(x.num() + y.num(), x.den() + y.den());
}

bool is_farey_triple(const FareyTriple& t) {
  auto unit = [](std::int64_t d) { return d == 1 || d == -1; };
  return unit(farey_det(t.left, t.mid)) && unit(farey_det(t.mid, t.right)) &&
         unit(farey_det(t.right, t.left)) && t.left < t.mid &&
         t.mid < t.right;
}

std::vector<std::int64_t> cf_digits(const Fraction& t) {
  if (t.is_infinite()) throw DomainError("no digits for 1/0");
  std::vector<std::int64_t> out;
  std::int64_t a = t.num(), b = t.den();
  while (b != 0) {
    out.push_back(a / b);
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return out;
}

FareyLocation farey_locate(const Fraction& t) {
  if (t.num() == 0 || t.is_infinite()) {
    throw DomainError(t.to_string() + " is not the middle of a Farey triple");
  }
  std::vector<std::int64_t> digits = cf_digits(t);
  digits.back() -= 1;
  // Fractions are carried as raw pairs so that the run jumps below stay
  // plain integer arithmetic.
  std::int64_t ln = 0, ld = 1, mn = 1, md = 1, rn = 1, rd = 0;
  FareyLocation out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    std::int64_t j = digits[i];
    if (j == 0) continue;
    Step step = i % 2 == 0 ? Step::kRight : Step::kLeft;
    out.path.insert(out.path.end(), static_cast<std::size_t>(j), step);
    if (step == Step::kRight) {
      // (l, m, r) -> (m + (j-1) r, m + j r, r)
      ln = mn + (j - 1) * rn;
      ld = md + (j - 1) * rd;
      mn += j * rn;
      md += j * rd;
    } else {
      // (l, m, r) -> (l, m + j l, m + (j-1) l)
      rn = mn + (j - 1) * ln;
      rd = md + (j - 1) * ld;
      mn += j * ln;
      md += j * ld;
    }
  }
  out.triple = {Fraction(ln, ld), Fraction(mn, md), Fraction(rn, rd)};
  return out;
}

std::string path_to_string(const std::vector<Step>& path) {
  std::string out;
  for (Step s : path) out += s == Step::kLeft ? 'L' : 'R';
  return out;
}

std::string christoffel_word(const Fraction& t) {
  const std::int64_t a = t.num(), b = t.den();
  std::string word;
  if (a <= b) {
    // One step per column; the path sits at y = floor(i a / b).
    std::int64_t prev = 0;
    for (std::int64_t i = 1; i <= b; ++i) {
      std::int64_t y = static_cast<std::int64_t>(
          static_cast<__int128>(i) * a / b);
      word += y > prev ? 'q' : 'p';
      prev = y;
    }
  } else {
    // One step per row; the path sits at x = ceil(j b / a).
    std::int64_t prev = 0;
    for (std::int64_t j = 1; j <= a; ++j) {
      __int128 num = static_cast<__int128>(j) * b;
      std::int64_t x = static_cast<std::int64_t>((num + a - 1) / a);
      word += x > prev ? 'q' : 'r';
      prev = x;
    }
  }
  return word;
}

}  // namespace gmspec
