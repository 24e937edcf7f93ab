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

#ifndef GMSPEC_TOOLS_TABLES_HPP_
#define GMSPEC_TOOLS_TABLES_HPP_

#include <string>
#include <vector>

#include "gmspec/exact.hpp"
#include "gmspec/farey.hpp"
#include "gmspec/gm_tree.hpp"

namespace gmspec::cli {

struct GoldenRow {
  std::string table;
  GMParams params;
  Fraction t;
  AdmissibleSeq s;
  QuadSurd alpha;
  BigInt n;
  QuadSurd L;
  int line = 0;
};

// Parses the tab-separated fixture format; '#' starts a comment line.
std::vector<GoldenRow> parse_golden(const std::string& text);
std::vector<GoldenRow> golden_rows();

struct RowCheck {
  GoldenRow row;
  AdmissibleSeq s;
  QuadSurd alpha;
  BigInt n;
  QuadSurd L;
  bool s_ok = false, alpha_ok = false, n_ok = false, L_ok = false;
  bool ok() const { return s_ok && alpha_ok && n_ok && L_ok; }
};

// Recomputes s(t), [s(t)^inf], n_t and L(s(t)) for every golden row.
std::vector<RowCheck> reproduce_tables(const std::vector<GoldenRow>& rows);

}  // namespace gmspec::cli

#endif  // GMSPEC_TOOLS_TABLES_HPP_
