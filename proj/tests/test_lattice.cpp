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

#include <doctest.h>

#include <numeric>

#include "gmspec/cohn.hpp"
#include "gmspec/errors.hpp"
#include "gmspec/lattice.hpp"
#include "gmspec/snake.hpp"
#include "oracles.hpp"

using namespace gmspec;

TEST_SUITE("lattice") {

const GMParams kP120{{1, 2, 0}, Permutation()};

TEST_CASE("admissible sequence examples") {
  for (const Permutation& s : Permutation::all()) {
    CHECK(admissible_sequence(Fraction(2, 5), {{0, 0, 0}, s}) ==
          AdmissibleSeq{2, 1, 1, 1, 1, 2, 2, 1, 1, 2});
    CHECK(admissible_sequence(Fraction(3, 2), {{0, 0, 0}, s}) ==
          AdmissibleSeq{2, 2, 2, 2, 1, 1});
  }
  CHECK(admissible_sequence(Fraction(2, 5), kP120) ==
        AdmissibleSeq{5, 1, 3, 3, 1, 5, 4, 1, 3, 4});
  CHECK(admissible_sequence(Fraction(0, 1), kP120) == AdmissibleSeq{3, 1});
  CHECK(admissible_sequence(Fraction::infinity(), kP120) == AdmissibleSeq{4, 1});
}

TEST_CASE("sign strings agree with the rational walker") {
  for (const KTriple& k : {KTriple{0, 0, 0}, KTriple{1, 2, 0}, KTriple{0, 3, 1},
                           KTriple{2, 0, 0}, KTriple{4, 1, 2}}) {
    for (const Permutation& s : Permutation::all()) {
      for (std::int64_t a = 0; a <= 9; ++a) {
        for (std::int64_t b = 0; b <= 9; ++b) {
          if (std::gcd(a, b) != 1) continue;
          CHECK(admissible_sequence(Fraction(a, b), {k, s}).entries() ==
                oracle::sign_runs(a, b, k, s.images()));
        }
      }
    }
  }
}

TEST_CASE("sign string length counts crossed edges") {
  // b vertical, a horizontal (with the start edge) and a + b diagonal signed
  // crossings, each repeated by its copy count, plus one sign per gap between
  // consecutive edges including the unsigned end edge.
  for (const KTriple& k : {KTriple{0, 0, 0}, KTriple{2, 1, 3}}) {
    GMParams p{k, Permutation()};
    for (std::int64_t a = 1; a <= 7; ++a) {
      for (std::int64_t b = 1; b <= 7; ++b) {
        if (std::gcd(a, b) != 1) continue;
        SignString s = admissible_sign_string(Fraction(a, b), p);
        long copies = b * p.k_at(3) + a * p.k_at(1) + (a + b) * p.k_at(2);
        CHECK(static_cast<long>(s.signs.size()) == copies + 2 * (a + b));
        CHECK(s == admissible_sign_string(Fraction(a, b), p, 2));
      }
    }
  }
}

TEST_CASE("crossing events are ordered") {
  std::vector<BigRat> xs{BigRat(-1, 10), BigRat(7, 2), BigRat(5, 1)};
  std::vector<BigRat> ys{BigRat(0), BigRat(23, 10), BigRat(2, 1)};
  std::vector<CrossingEvent> ev = trace_crossings(xs, ys);
  CHECK(!ev.empty());
  for (std::size_t i = 1; i < ev.size(); ++i) {
    bool ordered = ev[i - 1].piece < ev[i].piece ||
                   (ev[i - 1].piece == ev[i].piece && ev[i - 1].param < ev[i].param);
    CHECK(ordered);
  }
}

TEST_CASE("segment sign sequences and distances") {
  CHECK(segment_sign_sequence({0, 0}, {3, 2}, kP120) == AdmissibleSeq{4, 4, 5, 4});
  CHECK(segment_sign_sequence({0, 0}, {6, 4}, kP120) ==
        AdmissibleSeq{4, 5, 4, 4, 5, 1, 3, 5, 4, 4});
  AdmissibleSeq flipped = segment_sign_sequence({0, 0}, {3, 2}, kP120, Side::kLeft,
                                                EndpointSign::kFlip,
                                                EndpointSign::kFlip);
  CHECK(flipped == AdmissibleSeq{1, 3, 4, 5, 3, 1});
  CHECK(gm_length(flipped) == 373);
  CHECK(gm_length(AdmissibleSeq{1, 7, 1, 8, 1, 1, 2, 2, 6, 5}) == 33848);
  CHECK(gm_length(AdmissibleSeq{4, 4, 5, 4}) == 373);
  CHECK(gm_length(AdmissibleSeq{}) == 1);
  CHECK(gm_distance({0, 0}, {3, 2}, kP120) == 373);
  CHECK(gm_distance({2, 5}, {2, 5}, kP120) == 0);
  CHECK(gm_distance({0, 0}, {1, 0}, kP120) == 1);
}

TEST_CASE("distance from the origin to a primitive point is the GM number") {
  for (const Permutation& s : Permutation::all()) {
    GMParams p{{1, 2, 0}, s};
    for (std::int64_t a = 1; a <= 5; ++a) {
      for (std::int64_t b = 1; b <= 5; ++b) {
        if (std::gcd(a, b) != 1) continue;
        CHECK(gm_distance({0, 0}, {b, a}, p) ==
              gm_pair(Fraction(a, b), p).value);
      }
    }
  }
}

TEST_CASE("distance is symmetric and translation invariant") {
  for (long x = -2; x <= 3; ++x) {
    for (long y = -2; y <= 3; ++y) {
      LatticePoint a{0, 0}, b{x, y};
      BigInt d = gm_distance(a, b, kP120);
      CHECK(d == gm_distance(b, a, kP120));
      CHECK(d == gm_distance({a.x + 4, a.y - 1}, {b.x + 4, b.y - 1}, kP120));
    }
  }
}

TEST_CASE("lattice point parsing") {
  CHECK(LatticePoint::parse("3,-2") == LatticePoint{3, -2});
  CHECK_THROWS_AS(LatticePoint::parse("3"), DomainError);
}

}  // TEST_SUITE
