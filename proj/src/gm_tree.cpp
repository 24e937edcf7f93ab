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

#include "gmspec/gm_tree.hpp"

#include <charconv>
#include <deque>

#include "gmspec/errors.hpp"

namespace gmspec {

Permutation::Permutation(std::array<int, 3> images) : img_(images) {
  std::array<bool, 3> hit{false, false, false};
  for (int v : img_) {
    if (v < 1 || v > 3 || hit[v - 1]) {
      throw DomainError("not a permutation of {1,2,3}");
    }
    hit[v - 1] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "id" || text == "()" || text == "e") return Permutation();
  std::array<int, 3> img{1, 2, 3};
  std::array<bool, 3> used{false, false, false};
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw DomainError("bad permutation '" + std::string(text) + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) {
      throw DomainError("bad permutation '" + std::string(text) + "'");
    }
    std::vector<int> cycle;
    for (std::size_t j = i + 1; j < close; ++j) {
      char ch = text[j];
      if (ch == ' ' || ch == ',') continue;
      if (ch < '1' || ch > '3' || used[ch - '1']) {
        throw DomainError("bad permutation '" + std::string(text) + "'");
      }
      used[ch - '1'] = true;
      cycle.push_back(ch - '0');
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      img[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
    }
    any = any || !cycle.empty();
    i = close + 1;
  }
  if (!any) throw DomainError("bad permutation '" + std::string(text) + "'");
  return Permutation(img);
}

const std::array<Permutation, 6>& Permutation::all() {
  static const std::array<Permutation, 6> perms = {
      Permutation({1, 2, 3}), Permutation({2, 3, 1}), Permutation({3, 1, 2}),
      Permutation({2, 1, 3}), Permutation({3, 2, 1}), Permutation({1, 3, 2})};
  return perms;
}

const std::array<Permutation, 3>& Permutation::alternating() {
  static const std::array<Permutation, 3> perms = {
      Permutation({1, 2, 3}), Permutation({2, 3, 1}), Permutation({3, 1, 2})};
  return perms;
}

bool Permutation::is_even() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) inversions += img_[i] > img_[j];
  }
  return inversions % 2 == 0;
}

Permutation Permutation::compose(const Permutation& other) const {
  return Permutation({(*this)(other(1)), (*this)(other(2)), (*this)(other(3))});
}

std::string Permutation::to_string() const {
  if (img_ == std::array<int, 3>{1, 2, 3}) return "id";
  std::string out;
  std::array<bool, 3> seen{false, false, false};
  for (int start = 1; start <= 3; ++start) {
    if (seen[start - 1] || (*this)(start) == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    do {
      seen[x - 1] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    } while (x != start);
    out += ")";
  }
  return out;
}

Permutation sigma_star(const Permutation& sigma) {
  return sigma.compose(Permutation({3, 2, 1}));
}

std::string GMParams::to_string() const {
  return "k=" + k_to_string(k) + " sigma=" + sigma.to_string();
}

KTriple parse_k(std::string_view text) {
  KTriple k{0, 0, 0};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', start);
    if ((i < 2) == (comma == std::string_view::npos)) {
      throw DomainError("k must be three comma-separated integers");
    }
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? text.size() - start
                                               : comma - start);
    long v = -1;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() ||
        v < 0) {
      throw DomainError("bad k entry '" + std::string(item) + "'");
    }
    k[i] = v;
    start = comma + 1;
  }
  return k;
}

std::string k_to_string(const KTriple& k) {
  return std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
         std::to_string(k[2]);
}

bool gm_check(const BigInt& x, const BigInt& y, const BigInt& z,
              const KTriple& k) {
  BigInt lhs = x * x + y * y + z * z + k[0] * y * z + k[1] * z * x +
               k[2] * x * y;
  BigInt rhs = (3 + k[0] + k[1] + k[2]) * x * y * z;
  return lhs == rhs;
}

bool gm_check(const GMNode& node, const KTriple& k) {
  std::array<const BigInt*, 3> at{nullptr, nullptr, nullptr};
  for (const GMPair* p : {&node.left, &node.mid, &node.right}) {
    if (p->pos < 1 || p->pos > 3 || at[p->pos - 1]) return false;
    at[p->pos - 1] = &p->value;
  }
  return gm_check(*at[0], *at[1], *at[2], k);
}

GMNode gm_root(const GMParams& params) {
  const Permutation& s = params.sigma;
  return GMNode{GMPair{1, s(1)}, GMPair{params.k_at(s(2)) + 2, s(2)},
                GMPair{1, s(3)}};
}

namespace {

// (x^2 + k x y + y^2) / z, which Vieta's relation makes exact.
BigInt exchange(const BigInt& x, const BigInt& y, long k, const BigInt& z) {
  BigInt num = x * x + k * x * y + y * y;
  if (!mpz_divisible_p(num.get_mpz_t(), z.get_mpz_t())) {
    throw InvariantViolation("inexact division in tree mutation");
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
  return out;
}

}  // namespace

GMNode gm_left_child(const GMNode& n, const GMParams& params) {
  const int j = n.right.pos;
  return GMNode{n.left,
                GMPair{exchange(n.left.value, n.mid.value, params.k_at(j),
                                n.right.value),
                       j},
                n.mid};
}

GMNode gm_right_child(const GMNode& n, const GMParams& params) {
  const int h = n.left.pos;
  return GMNode{n.mid,
                GMPair{exchange(n.mid.value, n.right.value, params.k_at(h),
                                n.left.value),
                       h},
                n.right};
}

GMNode gm_node(const Fraction& t, const GMParams& params) {
  GMNode node = gm_root(params);
  if (t.num() == 0) {
    node.mid = node.left;
    return node;
  }
  if (t.is_infinite()) {
    node.mid = node.right;
    return node;
  }
  for (Step s : farey_locate(t).path) {
    node = s == Step::kLeft ? gm_left_child(node, params)
                            : gm_right_child(node, params);
  }
  return node;
}

GMPair gm_pair(const Fraction& t, const GMParams& params) {
  return gm_node(t, params).mid;
}

BigInt characteristic_number(const Fraction& t, const GMNode& node,
                             const GMParams& params) {
  if (t.num() == 0) return BigInt(-params.k_at(params.sigma(1)));
  if (t.is_infinite()) return BigInt(1);
  const BigInt& n = node.mid.value;
  if (n == 1) return BigInt(0);
  BigInt inv;
  if (!mpz_invert(inv.get_mpz_t(), node.left.value.get_mpz_t(),
                  n.get_mpz_t())) {
    throw InvariantViolation("tree neighbours are not coprime");
  }
  BigInt u = inv * node.right.value;
  mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
  return u;
}

BigInt characteristic_number(const Fraction& t, const GMParams& params) {
  return characteristic_number(t, gm_node(t, params), params);
}

std::vector<TreeEntry> enumerate_tree(const GMParams& params, int depth) {
  std::vector<TreeEntry> out;
  if (depth < 0) return out;
  struct Item {
    FareyTriple f;
    GMNode g;
  };
  std::vector<Item> level{{farey_root(), gm_root(params)}};
  for (int d = 0; d <= depth; ++d) {
    std::vector<Item> next;
    if (d < depth) next.reserve(level.size() * 2);
    for (Item& it : level) {
      out.push_back({it.f.mid, it.g});
      if (d < depth) {
        next.push_back({it.f.left_child(), gm_left_child(it.g, params)});
        next.push_back({it.f.right_child(), gm_right_child(it.g, params)});
      }
    }
    level = std::move(next);
  }
  return out;
}

GMTreeCache::GMTreeCache(const GMParams& params, int depth)
    : params_(params), entries_(enumerate_tree(params, depth)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(entries_[i].t, i);
  }
}

GMNode GMTreeCache::node(const Fraction& t) const {
  auto it = index_.find(t);
  if (it != index_.end()) return entries_[it->second].node;
  return gm_node(t, params_);
}

}  // namespace gmspec
