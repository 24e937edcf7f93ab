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

#ifndef GMSPEC_FAREY_HPP_
#define GMSPEC_FAREY_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmspec {

// Reduced nonnegative fraction; 1/0 stands for infinity.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  // Throws DomainError unless gcd(num, den) == 1, both are >= 0 and not
  // both zero.
  Fraction(std::int64_t num, std::int64_t den);
  static Fraction infinity() { return Fraction(1, 0); }
  // Accepts "a/b", a bare integer "a", and "inf".
  static Fraction parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  Fraction inverse() const { return Fraction(den_, num_); }
  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  // Order of real values, with infinity above every finite fraction.
  friend std::strong_ordering operator<=>(const Fraction& x,
                                          const Fraction& y);

 private:
  std::int64_t num_, den_;
};

// ad - bc for a/b, c/d.
std::int64_t farey_det(const Fraction& x, const Fraction& y);
// Throws DomainError unless |farey_det(x, y)| == 1.
Fraction mediant(const Fraction& x, const Fraction& y);

struct FareyTriple {
  Fraction left, mid, right;
  FareyTriple left_child() const { return {left, mediant(left, mid), mid}; }
  FareyTriple right_child() const { return {mid, mediant(mid, right), right}; }
  friend bool operator==(const FareyTriple&, const FareyTriple&) = default;
};

inline FareyTriple farey_root() {
  return {Fraction(0, 1), Fraction(1, 1), Fraction::infinity()};
}
bool is_farey_triple(const FareyTriple& t);

enum class Step { kLeft, kRight };

struct FareyLocation {
  std::vector<Step> path;
  FareyTriple triple;
};
// Descent from the root to the vertex whose middle entry is t, driven by the
// continued-fraction digits of t. Throws DomainError for 0/1 and 1/0.
FareyLocation farey_locate(const Fraction& t);
std::string path_to_string(const std::vector<Step>& path);

// Regular continued-fraction digits of a finite positive fraction.
std::vector<std::int64_t> cf_digits(const Fraction& t);

// Lower Christoffel path of (0,0) -> (den, num) over {p, q, r}: p is a
// horizontal unit step, q a diagonal (1,1) step, r a vertical step.
std::string christoffel_word(const Fraction& t);

}  // namespace gmspec

#endif  // GMSPEC_FAREY_HPP_
