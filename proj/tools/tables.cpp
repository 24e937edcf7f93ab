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

#include "tables.hpp"

#include <sstream>

#include "fixtures.hpp"
#include "gmspec/errors.hpp"
#include "gmspec/lattice.hpp"
#include "gmspec/spectrum.hpp"

namespace gmspec::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

QuadSurd parse_surd(const std::string& text) {
  std::istringstream in(text);
  std::string p, q, d, r;
  if (!(in >> p >> q >> d >> r)) {
    throw DomainError("bad surd field '" + text + "'");
  }
  return QuadSurd::canonical(BigInt(p), BigInt(q), BigInt(d), BigInt(r));
}

}  // namespace

std::vector<GoldenRow> parse_golden(const std::string& text) {
  std::vector<GoldenRow> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 8) {
      throw DomainError("fixture line " + std::to_string(lineno) +
                        ": expected 8 fields");
    }
    GoldenRow row;
    row.table = f[0];
    row.params.k = parse_k(f[1]);
    row.params.sigma = Permutation::parse(f[2]);
    row.t = Fraction::parse(f[3]);
    row.s = AdmissibleSeq::parse(f[4]);
    row.alpha = parse_surd(f[5]);
    row.n = BigInt(f[6]);
    row.L = parse_surd(f[7]);
    row.line = lineno;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<GoldenRow> golden_rows() { return parse_golden(golden_tables_tsv()); }

std::vector<RowCheck> reproduce_tables(const std::vector<GoldenRow>& rows) {
  std::vector<RowCheck> out;
  for (const GoldenRow& row : rows) {
    RowCheck c;
    c.row = row;
    c.s = admissible_sequence(row.t, row.params);
    c.alpha = alpha_fixed_point(c.s);
    c.n = gm_pair(row.t, row.params).value;
    c.L = lagrange_value(c.s);
    c.s_ok = c.s == row.s;
    c.alpha_ok = c.alpha == row.alpha;
    c.n_ok = c.n == row.n;
    c.L_ok = c.L == row.L;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gmspec::cli
