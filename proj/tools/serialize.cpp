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

#include "serialize.hpp"

#include <limits>

#include "gmspec/errors.hpp"

namespace gmspec {

json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return BigInt(std::to_string(j.get<std::uint64_t>()));
    }
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw DomainError("bad integer string in JSON");
    }
    return v;
  }
  throw DomainError("expected an integer in JSON");
}

json to_json(const QuadSurd& x) {
  return json{{"p", to_json(x.p())},
              {"q", to_json(x.q())},
              {"D", to_json(x.D())},
              {"r", to_json(x.r())}};
}

QuadSurd surd_from_json(const json& j) {
  return QuadSurd::canonical(bigint_from_json(j.at("p")),
                             bigint_from_json(j.at("q")),
                             bigint_from_json(j.at("D")),
                             bigint_from_json(j.at("r")));
}

json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}),
                      json::array({to_json(m.c), to_json(m.d)})});
}

Mat2 mat2_from_json(const json& j) {
  return Mat2{bigint_from_json(j.at(0).at(0)), bigint_from_json(j.at(0).at(1)),
              bigint_from_json(j.at(1).at(0)), bigint_from_json(j.at(1).at(1))};
}

json to_json(const AdmissibleSeq& s) { return json(s.entries()); }

AdmissibleSeq seq_from_json(const json& j) {
  return AdmissibleSeq(j.get<std::vector<long>>());
}

json to_json(const Fraction& t) { return json(t.to_string()); }

Fraction fraction_from_json(const json& j) {
  return Fraction::parse(j.get<std::string>());
}

json to_json(const SpectrumElement& e) {
  return json{{"value", to_json(e.value)},
              {"decimal", e.value.to_decimal()},
              {"n", to_json(e.n)},
              {"pos", e.pos},
              {"t", to_json(e.t)},
              {"k", json(e.params.k)},
              {"sigma", e.params.sigma.to_string()}};
}

SpectrumElement element_from_json(const json& j) {
  SpectrumElement e;
  e.value = surd_from_json(j.at("value"));
  e.n = bigint_from_json(j.at("n"));
  e.pos = j.at("pos").get<int>();
  e.t = fraction_from_json(j.at("t"));
  e.params.k = j.at("k").get<KTriple>();
  e.params.sigma = Permutation::parse(j.at("sigma").get<std::string>());
  return e;
}

json to_json(const GMNode& node) {
  auto pair = [](const GMPair& p) {
    return json{{"value", to_json(p.value)}, {"pos", p.pos}};
  };
  return json{{"left", pair(node.left)},
              {"mid", pair(node.mid)},
              {"right", pair(node.right)}};
}

}  // namespace gmspec
