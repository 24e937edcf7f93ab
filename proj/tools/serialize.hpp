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

#ifndef GMSPEC_TOOLS_SERIALIZE_HPP_
#define GMSPEC_TOOLS_SERIALIZE_HPP_

#include <json.hpp>

#include "gmspec/exact.hpp"
#include "gmspec/farey.hpp"
#include "gmspec/gm_tree.hpp"
#include "gmspec/lattice.hpp"
#include "gmspec/spectrum.hpp"

namespace gmspec {

using json = nlohmann::json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings. Both forms are accepted when reading.
json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

// {"p", "q", "D", "r"}.
json to_json(const QuadSurd& x);
QuadSurd surd_from_json(const json& j);

// [[a, b], [c, d]].
json to_json(const Mat2& m);
Mat2 mat2_from_json(const json& j);

json to_json(const AdmissibleSeq& s);
AdmissibleSeq seq_from_json(const json& j);

// "a/b".
json to_json(const Fraction& t);
Fraction fraction_from_json(const json& j);

// {"value", "decimal", "n", "pos", "t", "k", "sigma"}.
json to_json(const SpectrumElement& e);
SpectrumElement element_from_json(const json& j);

json to_json(const GMNode& node);

}  // namespace gmspec

#endif  // GMSPEC_TOOLS_SERIALIZE_HPP_
