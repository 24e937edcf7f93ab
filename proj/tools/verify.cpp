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

#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "gmspec/cohn.hpp"
#include "gmspec/errors.hpp"
#include "gmspec/lattice.hpp"
#include "gmspec/parallel.hpp"
#include "gmspec/snake.hpp"
#include "gmspec/spectrum.hpp"

namespace gmspec::cli {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::vector<Fraction> fractions_to_depth(int depth) {
  std::vector<Fraction> out;
  std::vector<FareyTriple> level{farey_root()};
  for (int d = 0; d <= depth; ++d) {
    std::vector<FareyTriple> next;
    for (const FareyTriple& f : level) {
      out.push_back(f.mid);
      if (d < depth) {
        next.push_back(f.left_child());
        next.push_back(f.right_child());
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<GMParams> grid_params(int random_triples, std::uint32_t seed) {
  std::vector<KTriple> ks;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> pick(0, 3);
  for (int i = 0; i < random_triples; ++i) {
    ks.push_back({pick(rng), pick(rng), pick(rng)});
  }
  for (long a = 0; a <= 1; ++a) {
    for (long b = 0; b <= 1; ++b) {
      for (long c = 0; c <= 1; ++c) ks.push_back({a, b, c});
    }
  }
  std::vector<GMParams> out;
  for (const KTriple& k : ks) {
    for (const Permutation& s : Permutation::all()) out.push_back({k, s});
  }
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(std::string suite) { report_.suite = std::move(suite); }

  void expect(const std::string& name, bool ok,
              const std::function<std::string()>& detail) {
    CheckResult& c = find(name);
    ++c.cases;
    if (!ok) {
      if (c.failures == 0) c.first_failure = detail();
      ++c.failures;
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  CheckResult& find(const std::string& name) {
    for (CheckResult& c : report_.checks) {
      if (c.name == name) return c;
    }
    report_.checks.push_back(CheckResult{name, 0, 0, {}});
    return report_.checks.back();
  }

  SuiteReport report_;
};

std::string where(const Fraction& t, const GMParams& p) {
  return "t=" + t.to_string() + " " + p.to_string();
}

// Runs fn over the grid in parallel, one Checker per params entry, and
// merges the results in grid order.
SuiteReport run_grid(const std::string& suite, int depth,
                     const std::function<void(const GMParams&,
                                              const std::vector<Fraction>&,
                                              Checker&)>& fn) {
  const std::vector<GMParams> grid = grid_params();
  const std::vector<Fraction> ts = fractions_to_depth(depth);
  std::vector<SuiteReport> parts(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    Checker c(suite);
    fn(grid[i], ts, c);
    parts[i] = c.take();
  });
  SuiteReport out;
  out.suite = suite;
  for (const SuiteReport& part : parts) {
    for (const CheckResult& r : part.checks) {
      auto it = std::find_if(out.checks.begin(), out.checks.end(),
                             [&](const CheckResult& c) { return c.name == r.name; });
      if (it == out.checks.end()) {
        out.checks.push_back(r);
        continue;
      }
      if (it->failures == 0 && r.failures > 0) it->first_failure = r.first_failure;
      it->cases += r.cases;
      it->failures += r.failures;
    }
  }
  return out;
}

}  // namespace

SuiteReport verify_factorization(int depth) {
  return run_grid("factorization", depth, [](const GMParams& p,
                                             const std::vector<Fraction>& ts,
                                             Checker& c) {
    std::vector<Fraction> all = ts;
    all.push_back(Fraction::infinity());
    for (const Fraction& t : all) {
      GMNode node = gm_node(t, p);
      BigInt u = characteristic_number(t, node, p);
      Mat2 closed = cohn_closed_form(node.mid, u, p);
      AdmissibleSeq s = admissible_sequence(t, p);
      c.expect("cf_matrix(s(t)) == C_t", cf_matrix(s) == closed, [&] {
        return where(t, p) + " s=" + s.to_string() + " C=" + closed.to_string();
      });
      Mat2 rec = cohn_recursive(t, p);
      c.expect("recursive C_t == closed form", rec == closed, [&] {
        return where(t, p) + " rec=" + rec.to_string() +
               " closed=" + closed.to_string();
      });
      c.expect("det C_t == 1", closed.det() == 1,
               [&] { return where(t, p); });
      c.expect("tr C_t == K n_t - k_t",
               closed.trace() == p.K() * node.mid.value - p.k_at(node.mid.pos),
               [&] { return where(t, p); });
      c.expect("sequence recovered from C_t == s(t)",
               sequence_from_cohn(closed) == s, [&] { return where(t, p); });
    }
  });
}

SuiteReport verify_snake(long max_sum, int random_count, long random_max_sum) {
  Checker c("snake");
  auto check_one = [&](const AdmissibleSeq& s) {
    BigInt m = continuant(s);
    BigInt brute = count_matchings_bruteforce(build_snake_graph(s),
                                              static_cast<std::size_t>(
                                                  std::max(random_max_sum, max_sum)));
    c.expect("continuant == perfect matchings", m == brute, [&] {
      return "S=(" + s.to_string() + ") m=" + m.get_str() +
             " brute=" + brute.get_str();
    });
    c.expect("reversal invariance", continuant(s.reversed()) == m,
             [&] { return "S=(" + s.to_string() + ")"; });
    if (!s.empty()) {
      BigRat value(s[s.size() - 1]);
      for (std::size_t i = s.size() - 1; i-- > 0;) value = s[i] + 1 / value;
      BigRat ratio(m, continuant(s.tail()));
      ratio.canonicalize();
      c.expect("continuant ratio == continued fraction", ratio == value,
               [&] { return "S=(" + s.to_string() + ")"; });
    }
  };
  // Every composition of every n <= max_sum.
  check_one(AdmissibleSeq());
  for (long n = 1; n <= max_sum; ++n) {
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
      std::vector<long> parts;
      long run = 1;
      for (long i = 0; i < n - 1; ++i) {
        if (mask & (1UL << i)) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      check_one(AdmissibleSeq(parts));
    }
  }
  std::mt19937 rng(7);
  for (int i = 0; i < random_count; ++i) {
    long target = std::uniform_int_distribution<long>(max_sum + 1,
                                                      random_max_sum)(rng);
    std::vector<long> parts;
    long left = target;
    while (left > 0) {
      long a = std::uniform_int_distribution<long>(1, std::min(left, 5L))(rng);
      parts.push_back(a);
      left -= a;
    }
    check_one(AdmissibleSeq(parts));
  }
  // Semi-palindromes (a1..a_{l-1}, a_l + k, a_l, ..., a1).
  for (int i = 0; i < 500; ++i) {
    int l = std::uniform_int_distribution<int>(1, 6)(rng);
    long k = std::uniform_int_distribution<long>(0, 5)(rng);
    std::vector<long> a(l);
    for (long& x : a) x = std::uniform_int_distribution<long>(1, 5)(rng);
    std::vector<long> seq(a.begin(), a.end() - 1);
    seq.push_back(a.back() + k);
    seq.insert(seq.end(), a.rbegin(), a.rend());
    AdmissibleSeq s(seq);
    BigInt lhs = continuant(s.tail()) -
                 continuant(AdmissibleSeq(std::vector<long>(seq.begin(),
                                                            seq.end() - 1)));
    long expect = (l % 2 == 0 ? 1 : -1) * k;
    c.expect("semi-palindrome difference", lhs == expect,
             [&] { return "S=(" + s.to_string() + ")"; });
  }
  // m(a1, 1, a3, ..., an) = (a1 + 1) m(a3 + 1, a4, ..., an) - m(a4, ..., an).
  for (int i = 0; i < 500; ++i) {
    int n = std::uniform_int_distribution<int>(3, 9)(rng);
    std::vector<long> a(n);
    for (long& x : a) x = std::uniform_int_distribution<long>(1, 6)(rng);
    a[1] = 1;
    std::vector<long> shifted(a.begin() + 2, a.end());
    shifted[0] += 1;
    std::vector<long> rest(a.begin() + 3, a.end());
    BigInt rhs = (a[0] + 1) * continuant(AdmissibleSeq(shifted)) -
                 continuant(AdmissibleSeq(rest));
    c.expect("leading (x, 1) reduction", continuant(AdmissibleSeq(a)) == rhs,
             [&] { return "S=(" + AdmissibleSeq(a).to_string() + ")"; });
  }
  return c.take();
}

SuiteReport verify_rotation(int depth) {
  SuiteReport grid = run_grid("rotation", depth, [](const GMParams& p,
                                                    const std::vector<Fraction>& ts,
                                                    Checker& c) {
    for (const Fraction& t : ts) {
      AdmissibleSeq s = admissible_sequence(t, p);
      BigInt own = continuant(s.tail());
      bool minimal = true;
      for (const AdmissibleSeq& w : rotation_tails(s)) {
        if (continuant(w) < own) minimal = false;
      }
      c.expect("tail of s(t) minimizes rotation tails", minimal,
               [&] { return where(t, p) + " s=" + s.to_string(); });
      QuadSurd L = lagrange_value(s);
      QuadSurd ell = ell_periodic(s);
      QuadSurd mv = markov_value(t, p).value;
      c.expect("L(s(t)) == ell(s(t)) == sqrt(Delta)/n", L == ell && L == mv,
               [&] { return where(t, p); });
    }
  });
  Checker c("rotation");
  GMParams p{{1, 2, 0}, Permutation()};
  std::vector<BigInt> got;
  for (const AdmissibleSeq& w : rotation_tails(admissible_sequence(Fraction(2, 5), p))) {
    got.push_back(continuant(w));
  }
  const std::vector<BigInt> want = {8227, 32957, 12039, 12041, 32937,
                                    8261, 9997,  31881, 12199, 11127};
  c.expect("tail values for 2/5 under (1,2,0,id)", got == want,
           [] { return std::string("mismatch"); });
  for (CheckResult& r : c.take().checks) grid.checks.push_back(r);
  return grid;
}

SuiteReport verify_duality(int depth) {
  return run_grid("duality", depth, [](const GMParams& p,
                                       const std::vector<Fraction>& ts,
                                       Checker& c) {
    GMParams star{p.k, sigma_star(p.sigma)};
    std::vector<Fraction> all = ts;
    all.push_back(Fraction(0, 1));
    all.push_back(Fraction::infinity());
    for (const Fraction& t : all) {
      const Fraction inv = t.inverse();
      GMPair a = gm_pair(t, p), b = gm_pair(inv, star);
      c.expect("(n_t, i_t) == (n*_{1/t}, i*_{1/t})", a == b,
               [&] { return where(t, p); });
      if (t.num() == 0 || t.is_infinite()) continue;
      // The starred characteristic number is taken at 1/t, where the dual
      // tree carries n_t.
      BigInt u = characteristic_number(t, p);
      BigInt u_star_inv = characteristic_number(inv, star);
      c.expect("u*_{1/t} == n_t - u_t - k_t",
               u_star_inv == a.value - u - p.k_at(a.pos),
               [&] { return where(t, p); });
      AdmissibleSeq s = admissible_sequence(t, p);
      AdmissibleSeq d = admissible_sequence(inv, star);
      std::vector<long> want{s[0]};
      for (std::size_t i = s.size(); i-- > 1;) want.push_back(s[i]);
      c.expect("s*(1/t) == (a1, an, ..., a2)", d.entries() == want,
               [&] { return where(t, p); });
      c.expect("L(s(t)) == L(s*(1/t))", lagrange_value(s) == lagrange_value(d),
               [&] { return where(t, p); });
    }
  });
}

SuiteReport verify_squares(int depth) {
  Checker c("squares");
  const KTriple k0{0, 0, 0}, k2{2, 2, 2};
  for (const Permutation& s : Permutation::all()) {
    std::vector<TreeEntry> a = enumerate_tree({k0, s}, depth);
    std::vector<TreeEntry> b = enumerate_tree({k2, s}, depth);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const GMNode& x = a[i].node;
      const GMNode& y = b[i].node;
      bool ok = y.left.value == x.left.value * x.left.value &&
                y.mid.value == x.mid.value * x.mid.value &&
                y.right.value == x.right.value * x.right.value &&
                y.left.pos == x.left.pos && y.mid.pos == x.mid.pos &&
                y.right.pos == x.right.pos;
      c.expect("squared (0,0,0) node is the (2,2,2) node", ok, [&] {
        return "t=" + a[i].t.to_string() + " sigma=" + s.to_string();
      });
    }
  }
  std::vector<SpectrumElement> m0 = enumerate_spectrum(k0, depth);
  std::vector<SpectrumElement> m2 = enumerate_spectrum(k2, depth);
  const QuadSurd three = QuadSurd::from_int(3);
  bool same = m0.size() == m2.size();
  for (std::size_t i = 0; same && i < m0.size(); ++i) {
    same = three * m0[i].value == m2[i].value;
  }
  c.expect("r -> 3r maps enumerated spectra onto each other", same, [&] {
    return "sizes " + std::to_string(m0.size()) + " vs " +
           std::to_string(m2.size());
  });
  return c.take();
}

SuiteReport verify_transition(long kmax, int depth) {
  Checker c("transition");
  std::vector<TransitionHit> hits = transition_scan(kmax, depth);
  const QuadSurd three = QuadSurd::from_int(3);
  const QuadSurd root5 = QuadSurd::sqrt_over(5, 1);
  const QuadSurd two_root5 = QuadSurd::sqrt_over(20, 1);
  std::vector<QuadSurd> expected;
  for (const SpectrumElement& e : enumerate_spectrum({0, 0, 1}, depth)) {
    if (e.value == root5) continue;
    if (surd_cmp(e.value, three) >= 0 &&
        surd_cmp(e.value, freiman_constant()) < 0) {
      expected.push_back(e.value);
    }
  }
  expected.push_back(two_root5);
  auto less = [](const QuadSurd& a, const QuadSurd& b) {
    return surd_cmp(a, b) < 0;
  };
  std::sort(expected.begin(), expected.end(), less);
  std::vector<QuadSurd> got;
  for (const TransitionHit& h : hits) got.push_back(h.element.value);
  std::sort(got.begin(), got.end(), less);
  got.erase(std::unique(got.begin(), got.end()), got.end());
  c.expect("window values == (M001 minus sqrt5) plus 2 sqrt5", got == expected,
           [&] {
             return std::to_string(got.size()) + " values vs " +
                    std::to_string(expected.size()) + " expected";
           });
  bool witnessed = false;
  for (const TransitionHit& h : hits) {
    if (h.k == KTriple{0, 0, 2} && h.element.value == two_root5) {
      witnessed = h.element.n == 4 &&
                  h.element.pos == h.element.params.sigma(2);
    }
  }
  c.expect("2 sqrt5 witnessed by n = 4 at position sigma(2) for (0,0,2)",
           witnessed, [] { return std::string("no such witness"); });
  return c.take();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "factorization", "snake", "rotation", "duality", "squares", "transition"};
  return names;
}

std::vector<SuiteReport> run_suites(const std::string& name) {
  std::vector<SuiteReport> out;
  auto run = [&](const std::string& n) {
    if (n == "factorization") out.push_back(verify_factorization());
    if (n == "snake") out.push_back(verify_snake());
    if (n == "rotation") out.push_back(verify_rotation());
    if (n == "duality") out.push_back(verify_duality());
    if (n == "squares") out.push_back(verify_squares());
    if (n == "transition") out.push_back(verify_transition());
  };
  if (name == "all") {
    for (const std::string& n : suite_names()) run(n);
  } else if (std::find(suite_names().begin(), suite_names().end(), name) !=
             suite_names().end()) {
    run(name);
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace gmspec::cli
