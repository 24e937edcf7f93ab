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

#include "gmspec/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "gmspec/errors.hpp"
#include "gmspec/snake.hpp"

namespace gmspec {

LatticePoint LatticePoint::parse(std::string_view text) {
  std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw DomainError("lattice point must be 'x,y'");
  }
  auto num = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("bad coordinate '" + std::string(s) + "'");
    }
    return v;
  };
  return LatticePoint{num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

std::string LatticePoint::to_string() const {
  return std::to_string(x) + "," + std::to_string(y);
}

AdmissibleSeq SignString::runs() const {
  std::vector<long> out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i > 0 && signs[i] == signs[i - 1]) {
      ++out.back();
    } else {
      out.push_back(1);
    }
  }
  return AdmissibleSeq(std::move(out));
}

std::string SignString::to_string() const {
  std::string out;
  for (signed char s : signs) out += s > 0 ? '+' : '-';
  return out;
}

namespace {

// Polyline with coordinates multiplied by a common scale so that all
// vertices are integral.
struct Polyline {
  std::vector<BigInt> x, y;
  BigInt scale;
};

struct Edge {
  LatticePoint u, v;
};

bool shares(const Edge& e, const LatticePoint& p) {
  return e.u == p || e.v == p;
}

struct Crossed {
  LineKind kind;
  long index;
  std::size_t piece;
  // Position along the piece: num / den in [0, 1].
  BigInt num, den;
  Edge edge;
  bool signed_edge = true;
};

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw ResourceError("lattice coordinate overflow");
  return v.get_si();
}

// Scaled coordinate of the crossing point, times den.
BigInt coord_at(const BigInt& p, const BigInt& d, const Crossed& c) {
  return p * c.den + c.num * d;
}

void crossings_on_piece(const Polyline& poly, std::size_t piece,
                        std::vector<Crossed>& out) {
  const BigInt& L = poly.scale;
  const BigInt& px = poly.x[piece];
  const BigInt& py = poly.y[piece];
  const BigInt dx = poly.x[piece + 1] - px;
  const BigInt dy = poly.y[piece + 1] - py;
  std::vector<Crossed> found;
  auto scan = [&](LineKind kind, const BigInt& v0, const BigInt& dv) {
    if (dv == 0) return;
    const BigInt v1 = v0 + dv;
    BigInt lo, hi;
    if (dv > 0) {
      lo = floor_div(v0, L) + 1;
      hi = ceil_div(v1, L) - 1;
    } else {
      lo = floor_div(v1, L) + 1;
      hi = ceil_div(v0, L) - 1;
    }
    const BigInt den = abs(dv);
    for (BigInt m = lo; m <= hi; ++m) {
      Crossed c;
      c.kind = kind;
      c.index = to_long(m);
      c.piece = piece;
      c.num = (m * L - v0) * sgn(dv);
      c.den = den;
      found.push_back(std::move(c));
    }
  };
  scan(LineKind::kVertical, px, dx);
  scan(LineKind::kHorizontal, py, dy);
  scan(LineKind::kDiagonal, px + py, dx + dy);
  std::sort(found.begin(), found.end(), [](const Crossed& a, const Crossed& b) {
    return a.num * b.den < b.num * a.den;
  });
  for (std::size_t i = 0; i + 1 < found.size(); ++i) {
    if (found[i].num * found[i + 1].den == found[i + 1].num * found[i].den) {
      throw DomainError("traced curve passes through a lattice point");
    }
  }
  for (Crossed& c : found) {
    const BigInt xs = coord_at(px, dx, c);
    const BigInt ys = coord_at(py, dy, c);
    const BigInt unit = c.den * L;
    const long m = c.index;
    if (c.kind == LineKind::kVertical) {
      if (mpz_divisible_p(ys.get_mpz_t(), unit.get_mpz_t())) {
        throw DomainError("traced curve passes through a lattice point");
      }
      long j = to_long(floor_div(ys, unit));
      c.edge = {{m, j}, {m, j + 1}};
    } else {
      if (mpz_divisible_p(xs.get_mpz_t(), unit.get_mpz_t())) {
        throw DomainError("traced curve passes through a lattice point");
      }
      long i = to_long(floor_div(xs, unit));
      if (c.kind == LineKind::kHorizontal) {
        c.edge = {{i, m}, {i + 1, m}};
      } else {
        c.edge = {{i + 1, m - i - 1}, {i, m - i}};
      }
    }
    out.push_back(std::move(c));
  }
}

std::vector<Crossed> all_crossings(const Polyline& poly) {
  std::vector<Crossed> out;
  for (std::size_t p = 0; p + 1 < poly.x.size(); ++p) {
    crossings_on_piece(poly, p, out);
  }
  return out;
}

// Sign of cross(d, q - p) for scaled integer vectors.
int side_of(const BigInt& dx, const BigInt& dy, const BigInt& qx,
            const BigInt& qy) {
  BigInt c = dx * qy - dy * qx;
  return sgn(c);
}

class SignTracer {
 public:
  SignTracer(const Polyline& poly, const GMParams& params)
      : poly_(poly), params_(params) {}

  SignString run(const std::vector<Crossed>& edges) const {
    SignString out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      emit_edge(edges[i], out);
      if (i + 1 < edges.size()) emit_triangle(edges[i], edges[i + 1], out);
    }
    return out;
  }

 private:
  long copies(LineKind kind) const {
    const Permutation& s = params_.sigma;
    switch (kind) {
      case LineKind::kHorizontal:
        return params_.k_at(s(1));
      case LineKind::kDiagonal:
        return params_.k_at(s(2));
      case LineKind::kVertical:
        return params_.k_at(s(3));
    }
    return 0;
  }

  void emit_edge(const Crossed& e, SignString& out) const {
    if (!e.signed_edge) return;
    const long n = copies(e.kind);
    if (n == 0) return;
    const BigInt& L = poly_.scale;
    const std::size_t p = e.piece;
    const BigInt dx = poly_.x[p + 1] - poly_.x[p];
    const BigInt dy = poly_.y[p + 1] - poly_.y[p];
    // Twice the midpoint, relative to twice the piece start.
    BigInt mx = BigInt(e.edge.u.x + e.edge.v.x) * L - 2 * poly_.x[p];
    BigInt my = BigInt(e.edge.u.y + e.edge.v.y) * L - 2 * poly_.y[p];
    const signed char s = side_of(dx, dy, mx, my) < 0 ? 1 : -1;
    out.signs.insert(out.signs.end(), static_cast<std::size_t>(n), s);
  }

  void emit_triangle(const Crossed& e, const Crossed& f,
                     SignString& out) const {
    std::optional<LatticePoint> v;
    for (const LatticePoint& p : {e.edge.u, e.edge.v}) {
      if (shares(f.edge, p)) {
        if (v) throw InvariantViolation("consecutive crossings on one edge");
        v = p;
      }
    }
    if (!v) throw InvariantViolation("consecutive crossed edges do not meet");
    const BigInt& L = poly_.scale;
    int side;
    if (e.piece == f.piece) {
      const std::size_t p = e.piece;
      side = side_of(poly_.x[p + 1] - poly_.x[p], poly_.y[p + 1] - poly_.y[p],
                     v->x * L - poly_.x[p], v->y * L - poly_.y[p]);
    } else {
      // Chord from the entry point to the exit point.
      auto point = [&](const Crossed& c, BigInt& x, BigInt& y) {
        const std::size_t p = c.piece;
        x = coord_at(poly_.x[p], poly_.x[p + 1] - poly_.x[p], c);
        y = coord_at(poly_.y[p], poly_.y[p + 1] - poly_.y[p], c);
      };
      BigInt ex, ey, fx, fy;
      point(e, ex, ey);
      point(f, fx, fy);
      BigInt cx = fx * e.den - ex * f.den;
      BigInt cy = fy * e.den - ey * f.den;
      side = side_of(cx, cy, v->x * L * e.den - ex, v->y * L * e.den - ey);
    }
    out.signs.push_back(side < 0 ? -1 : 1);
  }

  const Polyline& poly_;
  const GMParams& params_;
};

BigRat to_rat(const BigInt& num, const BigInt& den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<CrossingEvent> trace_crossings(const std::vector<BigRat>& xs,
                                           const std::vector<BigRat>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("polyline needs at least two points");
  }
  Polyline poly;
  poly.scale = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    poly.scale = lcm(poly.scale, BigInt(xs[i].get_den()));
    poly.scale = lcm(poly.scale, BigInt(ys[i].get_den()));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    poly.x.push_back(xs[i].get_num() * (poly.scale / xs[i].get_den()));
    poly.y.push_back(ys[i].get_num() * (poly.scale / ys[i].get_den()));
  }
  std::vector<CrossingEvent> out;
  for (const Crossed& c : all_crossings(poly)) {
    out.push_back({c.kind, c.index, c.piece, to_rat(c.num, c.den)});
  }
  return out;
}

SignString admissible_sign_string(const Fraction& t, const GMParams& params,
                                  int refine) {
  if (t.num() == 0 || t.is_infinite()) {
    throw DomainError("sign tracing needs t in (0, infinity)");
  }
  const long a = t.num(), b = t.den();
  Polyline poly;
  poly.scale = BigInt(4) * (a + b) * (a + b);
  poly.scale <<= refine;
  const BigInt& L = poly.scale;
  poly.x = {BigInt(-1), b * L - 1};
  poly.y = {BigInt(0), a * L};
  std::vector<Crossed> edges;
  Crossed start;
  start.kind = LineKind::kHorizontal;
  start.index = 0;
  start.piece = 0;
  start.num = 0;
  start.den = 1;
  start.edge = {{-1, 0}, {0, 0}};
  edges.push_back(start);
  crossings_on_piece(poly, 0, edges);
  Crossed end;
  end.kind = LineKind::kHorizontal;
  end.index = a;
  end.piece = 0;
  end.num = 1;
  end.den = 1;
  end.edge = {{b - 1, a}, {b, a}};
  end.signed_edge = false;
  edges.push_back(end);
  return SignTracer(poly, params).run(edges);
}

AdmissibleSeq admissible_sequence(const Fraction& t, const GMParams& params) {
  const Permutation& s = params.sigma;
  if (t.num() == 0) {
    return AdmissibleSeq{1 + params.k_at(s(2)) + params.k_at(s(3)), 1};
  }
  if (t.is_infinite()) {
    return AdmissibleSeq{1 + params.k_at(s(1)) + params.k_at(s(2)), 1};
  }
  SignString coarse = admissible_sign_string(t, params, 0);
  SignString fine = admissible_sign_string(t, params, 1);
  if (!(coarse == fine)) {
    throw InvariantViolation("sign string of " + t.to_string() +
                             " depends on the displacement size");
  }
  return coarse.runs();
}

namespace {

bool is_unit_step(long dx, long dy) {
  return (std::labs(dx) + std::labs(dy) == 1) ||
         (dx == 1 && dy == -1) || (dx == -1 && dy == 1);
}

}  // namespace

SignString segment_sign_string(const LatticePoint& a, const LatticePoint& b,
                               const GMParams& params, Side side,
                               EndpointSign start, EndpointSign end,
                               int refine) {
  if (a == b) throw DomainError("segment endpoints coincide");
  const long dx = b.x - a.x, dy = b.y - a.y;
  if (is_unit_step(dx, dy)) return SignString{};
  Polyline poly;
  if (std::gcd(std::labs(dx), std::labs(dy)) == 1) {
    poly.scale = 1;
    poly.x = {BigInt(a.x), BigInt(b.x)};
    poly.y = {BigInt(a.y), BigInt(b.y)};
  } else {
    const long n = std::labs(dx) + std::labs(dy) + 1;
    BigInt n3 = BigInt(n) * n * n;
    poly.scale = 64 * n3 * n;
    poly.scale <<= refine;
    BigInt eta = 8 * n3;  // eta * scale
    eta <<= refine;
    const long nx = side == Side::kLeft ? -dy : dy;
    const long ny = side == Side::kLeft ? dx : -dx;
    const BigInt& L = poly.scale;
    poly.x = {a.x * L, a.x * L + eta * dx + nx, b.x * L - eta * dx + nx,
              b.x * L};
    poly.y = {a.y * L, a.y * L + eta * dy + ny, b.y * L - eta * dy + ny,
              b.y * L};
  }
  std::vector<Crossed> edges = all_crossings(poly);
  if (edges.empty()) throw InvariantViolation("segment crosses no edge");
  if (shares(edges.front().edge, a) || shares(edges.back().edge, b)) {
    throw DomainError("segment leaves an endpoint along a grid edge");
  }
  SignString inner = SignTracer(poly, params).run(edges);
  SignString out;
  signed char first = inner.signs.empty() ? -1 : inner.signs.front();
  if (start == EndpointSign::kFlip) first = -first;
  signed char last = inner.signs.empty() ? first : inner.signs.back();
  if (end == EndpointSign::kFlip) last = -last;
  out.signs.push_back(first);
  out.signs.insert(out.signs.end(), inner.signs.begin(), inner.signs.end());
  out.signs.push_back(last);
  return out;
}

AdmissibleSeq segment_sign_sequence(const LatticePoint& a,
                                    const LatticePoint& b,
                                    const GMParams& params, Side side,
                                    EndpointSign start, EndpointSign end) {
  SignString coarse = segment_sign_string(a, b, params, side, start, end, 0);
  SignString fine = segment_sign_string(a, b, params, side, start, end, 1);
  if (!(coarse == fine)) {
    throw InvariantViolation("segment sign string depends on the displacement");
  }
  return coarse.runs();
}

BigInt gm_length(const AdmissibleSeq& s) { return continuant(s); }

BigInt gm_distance(const LatticePoint& a, const LatticePoint& b,
                   const GMParams& params) {
  if (a == b) return BigInt(0);
  return gm_length(segment_sign_sequence(a, b, params));
}

}  // namespace gmspec
