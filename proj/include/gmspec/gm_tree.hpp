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

#ifndef GMSPEC_GM_TREE_HPP_
#define GMSPEC_GM_TREE_HPP_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmspec/exact.hpp"
#include "gmspec/farey.hpp"

namespace gmspec {

// Permutation of {1,2,3} stored by images: images()[i-1] == sigma(i).
class Permutation {
 public:
  Permutation() : img_{1, 2, 3} {}
  // Throws DomainError unless the images form a bijection.
  explicit Permutation(std::array<int, 3> images);
  // "id", "(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)".
  static Permutation parse(std::string_view text);
  static const std::array<Permutation, 6>& all();
  static const std::array<Permutation, 3>& alternating();

  int operator()(int i) const { return img_[i - 1]; }
  const std::array<int, 3>& images() const { return img_; }
  bool is_even() const;
  // (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<int, 3> img_;
};

// sigma o (1 3): the other permutation with the same image of 2.
Permutation sigma_star(const Permutation& sigma);

using KTriple = std::array<long, 3>;

struct GMParams {
  KTriple k{0, 0, 0};
  Permutation sigma;

  long K() const { return 3 + k[0] + k[1] + k[2]; }
  // k value at position 1..3.
  long k_at(int pos) const { return k[pos - 1]; }
  std::string to_string() const;
};

// Parses "a,b,c" with nonnegative entries.
KTriple parse_k(std::string_view text);
std::string k_to_string(const KTriple& k);

struct GMPair {
  BigInt value;
  int pos = 1;
  friend bool operator==(const GMPair&, const GMPair&) = default;
};

struct GMNode {
  GMPair left, mid, right;
  friend bool operator==(const GMNode&, const GMNode&) = default;
};

// x^2 + y^2 + z^2 + k1 yz + k2 zx + k3 xy == (3 + k1 + k2 + k3) xyz.
bool gm_check(const BigInt& x, const BigInt& y, const BigInt& z,
              const KTriple& k);
// gm_check with each value placed at its position.
bool gm_check(const GMNode& node, const KTriple& k);

GMNode gm_root(const GMParams& params);
GMNode gm_left_child(const GMNode& node, const GMParams& params);
GMNode gm_right_child(const GMNode& node, const GMParams& params);

// Node of the tree whose middle entry corresponds to t. For t = 0/1 and
// t = 1/0 this is the root with mid replaced by its left or right pair.
GMNode gm_node(const Fraction& t, const GMParams& params);
// (n_t, i_t).
GMPair gm_pair(const Fraction& t, const GMParams& params);
// u_t with n_r u_t = n_s (mod n_t) and 0 < u_t < n_t; boundary values
// u_{0/1} = -k_{sigma(1)} and u_{1/0} = 1.
BigInt characteristic_number(const Fraction& t, const GMParams& params);
// Same, reusing a node already computed by gm_node(t, params).
BigInt characteristic_number(const Fraction& t, const GMNode& node,
                             const GMParams& params);

struct TreeEntry {
  Fraction t;
  GMNode node;
};
// Nodes with Farey depth <= depth, breadth-first, left before right.
std::vector<TreeEntry> enumerate_tree(const GMParams& params, int depth);

// Lookup table over an enumerated tree.
class GMTreeCache {
 public:
  GMTreeCache(const GMParams& params, int depth);
  // Falls back to gm_node for fractions outside the cached depth.
  GMNode node(const Fraction& t) const;
  const std::vector<TreeEntry>& entries() const { return entries_; }

 private:
  GMParams params_;
  std::vector<TreeEntry> entries_;
  std::map<Fraction, std::size_t> index_;
};

}  // namespace gmspec

#endif  // GMSPEC_GM_TREE_HPP_
