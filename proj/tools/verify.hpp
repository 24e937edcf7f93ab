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

#ifndef GMSPEC_TOOLS_VERIFY_HPP_
#define GMSPEC_TOOLS_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gmspec/farey.hpp"
#include "gmspec/gm_tree.hpp"

namespace gmspec::cli {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Fractions t with Farey depth <= depth (root 1/1 has depth 0),
// breadth-first.
std::vector<Fraction> fractions_to_depth(int depth);

// `random_triples` k-triples drawn from {0..3}^3 with a fixed seed, then
// every triple with entries in {0, 1}, each paired with all six sigma.
std::vector<GMParams> grid_params(int random_triples = 20,
                                  std::uint32_t seed = 20260415);

SuiteReport verify_factorization(int depth = 7);
SuiteReport verify_snake(long max_sum = 12, int random_count = 200,
                         long random_max_sum = 16);
SuiteReport verify_rotation(int depth = 6);
SuiteReport verify_duality(int depth = 6);
SuiteReport verify_squares(int depth = 8);
SuiteReport verify_transition(long kmax = 5, int depth = 8);

const std::vector<std::string>& suite_names();
// Throws DomainError for an unknown suite name.
std::vector<SuiteReport> run_suites(const std::string& name);

}  // namespace gmspec::cli

#endif  // GMSPEC_TOOLS_VERIFY_HPP_
