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

#include <set>

#include "gmspec/errors.hpp"
#include "gmspec/gm_tree.hpp"
#include "oracles.hpp"

using namespace gmspec;

TEST_SUITE("gm_tree") {

TEST_CASE("permutation parsing and star") {
  CHECK(Permutation::parse("id") == Permutation());
  CHECK(Permutation::parse("(1 2 3)").images() == std::array<int, 3>{2, 3, 1});
  CHECK(Permutation::parse("(1 3)").images() == std::array<int, 3>{3, 2, 1});
  CHECK_THROWS_AS(Permutation::parse("(1 4)"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("(1 1)"), DomainError);
  CHECK(sigma_star(Permutation()) == Permutation::parse("(1 3)"));
  CHECK(sigma_star(Permutation::parse("(1 2 3)")).images() ==
        std::array<int, 3>{1, 3, 2});
  for (const Permutation& s : Permutation::all()) {
    CHECK(sigma_star(sigma_star(s)) == s);
    CHECK(sigma_star(s) != s);
    CHECK(sigma_star(s)(2) == s(2));
    CHECK(Permutation::parse(s.to_string()) == s);
  }
}

TEST_CASE("gm_check") {
  CHECK(gm_check(1, 81, 17, {1, 2, 0}));
  CHECK(gm_check(7, 81, 2, {1, 2, 0}));
  CHECK(gm_check(1, 1, 2, {0, 0, 0}));
  CHECK_FALSE(gm_check(1, 2, 2, {0, 0, 0}));
}

TEST_CASE("node examples") {
  GMParams p{{1, 2, 0}, Permutation()};
  GMNode root = gm_node(Fraction(1, 1), p);
  CHECK(root == GMNode{{1, 1}, {4, 2}, {1, 3}});
  GMNode n = gm_node(Fraction(2, 3), p);
  CHECK(n == GMNode{{17, 3}, {373, 1}, {4, 2}});
  CHECK(gm_node(Fraction(1, 2), {{0, 0, 0}, Permutation()}).mid.value == 5);
  CHECK(gm_pair(Fraction(0, 1), p) == GMPair{1, 1});
  CHECK(gm_pair(Fraction::infinity(), p) == GMPair{1, 3});
}

TEST_CASE("characteristic numbers") {
  CHECK(characteristic_number(Fraction(1, 2), {{0, 0, 0}, Permutation()}) == 2);
  CHECK(characteristic_number(Fraction(0, 1), {{1, 2, 0}, Permutation()}) == -1);
  CHECK(characteristic_number(Fraction::infinity(), {{3, 1, 2}, Permutation()}) ==
        1);
}

TEST_CASE("enumerate_tree examples") {
  std::vector<TreeEntry> d0 = enumerate_tree({{0, 0, 0}, Permutation()}, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].node == GMNode{{1, 1}, {2, 2}, {1, 3}});
  std::vector<TreeEntry> d1 = enumerate_tree({{1, 2, 0}, Permutation()}, 1);
  REQUIRE(d1.size() == 3);
  CHECK(d1[1].node == GMNode{{1, 1}, {17, 3}, {4, 2}});
  CHECK(d1[2].node == GMNode{{4, 2}, {21, 1}, {1, 3}});
  CHECK(enumerate_tree({{2, 0, 1}, Permutation()}, 6).size() == 127);
}

TEST_CASE("tree nodes solve the equation and stay coprime") {
  for (const KTriple& k : {KTriple{0, 0, 0}, KTriple{1, 2, 0}, KTriple{3, 0, 2},
                           KTriple{2, 2, 2}, KTriple{0, 5, 1}}) {
    for (const Permutation& s : Permutation::all()) {
      for (const TreeEntry& e : enumerate_tree({k, s}, 6)) {
        const GMNode& n = e.node;
        std::array<BigInt, 3> at;
        at[n.left.pos - 1] = n.left.value;
        at[n.mid.pos - 1] = n.mid.value;
        at[n.right.pos - 1] = n.right.value;
        CHECK(oracle::gm_residual(at[0], at[1], at[2], k) == 0);
        std::set<int> pos{n.left.pos, n.mid.pos, n.right.pos};
        CHECK(pos.size() == 3);
        CHECK(gcd(n.left.value, n.mid.value) == 1);
        CHECK(gcd(n.mid.value, n.right.value) == 1);
        CHECK(gcd(n.left.value, n.right.value) == 1);
        CHECK(n.mid.value > n.left.value);
        CHECK(n.mid.value > n.right.value);
        CHECK(gm_node(e.t, {k, s}) == n);
      }
    }
  }
}

TEST_CASE("trees over all permutations reach every small solution") {
  const long bound = 400;
  for (const KTriple& k : {KTriple{0, 0, 0}, KTriple{1, 2, 0}, KTriple{0, 0, 1},
                           KTriple{2, 1, 3}}) {
    std::set<std::pair<long, int>> brute = oracle::gm_pairs_bruteforce(k, bound);
    std::set<std::pair<long, int>> tree;
    for (const Permutation& s : Permutation::all()) {
      GMParams p{k, s};
      std::vector<GMNode> stack{gm_root(p)};
      while (!stack.empty()) {
        GMNode n = stack.back();
        stack.pop_back();
        if (n.mid.value > bound) continue;
        for (const GMPair& x : {n.left, n.mid, n.right}) {
          tree.insert({x.value.get_si(), x.pos});
        }
        stack.push_back(gm_left_child(n, p));
        stack.push_back(gm_right_child(n, p));
      }
    }
    // (1,1,1) solves the classical equation but is not a tree node.
    std::erase_if(brute, [](const auto& x) { return x.first == 1; });
    std::erase_if(tree, [](const auto& x) { return x.first == 1; });
    CHECK(brute == tree);
  }
}

TEST_CASE("duality of number-position pairs") {
  for (const Permutation& s : Permutation::all()) {
    GMParams p{{1, 2, 0}, s}, star{{1, 2, 0}, sigma_star(s)};
    for (const TreeEntry& e : enumerate_tree(p, 5)) {
      CHECK(gm_pair(e.t, p) == gm_pair(e.t.inverse(), star));
      BigInt u = characteristic_number(e.t, p);
      CHECK(u > 0);
      CHECK(u < e.node.mid.value);
      CHECK(characteristic_number(e.t.inverse(), star) ==
            e.node.mid.value - u - p.k_at(e.node.mid.pos));
    }
  }
}

TEST_CASE("tree cache matches direct navigation") {
  GMParams p{{0, 1, 2}, Permutation::parse("(1 2)")};
  GMTreeCache cache(p, 5);
  for (const TreeEntry& e : cache.entries()) CHECK(cache.node(e.t) == gm_node(e.t, p));
}

}  // TEST_SUITE
