// Copyright 2026 The cartier library developers
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
//
// Curve models: the Artin--Schreier family A_t (y^sqrt_q + y = x^m with
// m = (sqrt_q+1)/t), hyperelliptic curves y^2 = f(x), and the generalized
// Hermitian family y^m = x + x^l + ... + x^{l^{2r-1}}. Holomorphic
// differential bases, rational-point enumeration, and maximality reports.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cartier/bipoly.hpp"
#include "cartier/errors.hpp"
#include "cartier/gf.hpp"
#include "cartier/unipoly.hpp"

namespace cartier {

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 62) / base) throw field_too_large_error("integer power overflow");
    r *= base;
  }
  return r;
}

struct ArtinSchreierCurve {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t sqrt_q = 0;          // p^{s/2}
  std::int64_t m = 0;               // (sqrt_q + 1) / t
  std::int64_t genus = 0;           // (sqrt_q - 1)(m - 1) / 2
  std::int64_t ambient_degree = 0;  // 2s, the degree of F_{q^2} over F_p
};

inline ArtinSchreierCurve make_curve_At(std::int64_t p, std::int64_t s, std::int64_t t) {
  if (p == 2) throw even_characteristic_error();
  if (!is_prime(p)) throw non_prime_error(p);
  if (s < 2 || s % 2 != 0) throw odd_s_error(s);
  ArtinSchreierCurve c;
  c.p = p;
  c.s = s;
  c.t = t;
  c.sqrt_q = ipow(p, s / 2);
  if (t < 1 || (c.sqrt_q + 1) % t != 0) throw bad_divisor_error(t, c.sqrt_q);
  c.m = (c.sqrt_q + 1) / t;
  c.genus = (c.sqrt_q - 1) * (c.m - 1) / 2;
  c.ambient_degree = 2 * s;
  return c;
}

// F = y^sqrt_q + y - x^m over the given field (coefficients +-1).
inline BiPoly curve_relation(const ArtinSchreierCurve& c, const FiniteField& f) {
  BiPoly F(f);
  F.add_term(0, c.sqrt_q, f.one());
  F.add_term(0, 1, f.one());
  F.add_term(c.m, 0, -f.one());
  return F;
}

// Rewriting rule y^sqrt_q = x^m - y used to keep numerators reduced.
inline BiPoly reduction_rhs(const ArtinSchreierCurve& c, const FiniteField& f) {
  BiPoly g(f);
  g.add_term(c.m, 0, f.one());
  g.add_term(0, 1, -f.one());
  return g;
}

enum class BasisMode { valuation, swapped };

inline std::string to_string(BasisMode mode) {
  return mode == BasisMode::valuation ? "valuation" : "swapped";
}

// Basis of holomorphic differentials x^i y^j dx, as exponent pairs. The two
// modes differ in the weight assignment for membership: "valuation" uses the
// pole orders v_inf(x) = -sqrt_q, v_inf(y) = -m; "swapped" exchanges the two
// weights. Both are ordered by w(i,j) = sqrt_q*i + m*j, ties by i, giving a
// deterministic matrix layout.
struct DifferentialBasis {
  std::vector<std::pair<std::int64_t, std::int64_t>> monomials;
  BasisMode mode = BasisMode::valuation;
};

inline DifferentialBasis differential_basis(const ArtinSchreierCurve& c,
                                            BasisMode mode = BasisMode::valuation) {
  const std::int64_t wx = mode == BasisMode::valuation ? c.sqrt_q : c.m;
  const std::int64_t wy = mode == BasisMode::valuation ? c.m : c.sqrt_q;
  const std::int64_t bound = 2 * c.genus - 2;
  DifferentialBasis b;
  b.mode = mode;
  for (std::int64_t j = 0; j <= c.sqrt_q - 2 && wy * j <= bound; ++j)
    for (std::int64_t i = 0; wx * i + wy * j <= bound; ++i) b.monomials.emplace_back(i, j);
  std::sort(b.monomials.begin(), b.monomials.end(),
            [&c](const auto& a, const auto& d) {
              const std::int64_t wa = c.sqrt_q * a.first + c.m * a.second;
              const std::int64_t wd = c.sqrt_q * d.first + c.m * d.second;
              return wa != wd ? wa < wd : a.first < d.first;
            });
  if (b.monomials.size() != static_cast<std::size_t>(c.genus))
    throw error("differential basis cardinality " + std::to_string(b.monomials.size()) +
                " does not match genus " + std::to_string(c.genus));
  return b;
}

struct HyperellipticCurve {
  FieldPtr base;  // F_p; owns the coefficient field of f
  UniPoly f;      // squarefree, deg >= 3
  std::int64_t p = 0;
  std::int64_t field_degree = 1;  // ambient degree used for point counting
  std::int64_t genus = 0;         // ceil(deg f / 2) - 1
};

inline HyperellipticCurve make_hyperelliptic(std::int64_t p,
                                             const std::vector<std::int64_t>& coeffs,
                                             std::int64_t field_degree = 1) {
  if (p == 2) throw even_characteristic_error();
  if (!is_prime(p)) throw non_prime_error(p);
  FieldPtr base = make_field(p, 1);
  UniPoly f = UniPoly::from_coeffs(*base, coeffs);
  if (f.degree() < 3) throw error("y^2 = f(x) requires deg f >= 3");
  if (UniPoly::gcd(f, f.derivative()).degree() != 0) throw error("f is not squarefree");
  HyperellipticCurve h{std::move(base), std::move(f), p, field_degree, 0};
  h.genus = (h.f.degree() + 1) / 2 - 1;  // ceil(deg/2) - 1
  return h;
}

struct GeneralizedHermitian {
  std::int64_t ell = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;
  std::int64_t genus = 0;         // (m-1)(ell^{2r-1}-1)/2
  std::int64_t field_degree = 0;  // 2r, the ambient F_{ell^{2r}}

  bool hyperelliptic() const { return m == 2; }
  // 1 + ell^{2r-1} + m(ell-1)ell^{2r-1}, the count over F_{ell^{2r}}.
  std::int64_t expected_count() const {
    const std::int64_t t = ipow(ell, 2 * r - 1);
    return 1 + t + m * (ell - 1) * t;
  }
};

inline GeneralizedHermitian make_generalized_hermitian(std::int64_t ell, std::int64_t r,
                                                       std::int64_t m) {
  if (ell == 2) throw even_characteristic_error();
  if (!is_prime(ell)) throw non_prime_error(ell);
  if (r < 1) throw bad_r_error("r = " + std::to_string(r) + " must be >= 1");
  if (m < 2) throw bad_m_error("m = " + std::to_string(m) + " must be >= 2");
  if (std::gcd(m, ell) != 1) throw bad_m_error("m must be coprime to ell");
  if ((ipow(ell, r) + 1) % m != 0)
    throw bad_m_error("m = " + std::to_string(m) + " does not divide ell^r + 1 = " +
                      std::to_string(ipow(ell, r) + 1));
  GeneralizedHermitian g;
  g.ell = ell;
  g.r = r;
  g.m = m;
  g.genus = (m - 1) * (ipow(ell, 2 * r - 1) - 1) / 2;
  g.field_degree = 2 * r;
  return g;
}

// x + x^ell + ... + x^{ell^{2r-1}} as coefficients over F_ell.
inline std::vector<std::int64_t> hermitian_trace_coeffs(const GeneralizedHermitian& g) {
  std::vector<std::int64_t> coeffs(ipow(g.ell, 2 * g.r - 1) + 1, 0);
  for (std::int64_t i = 0; i < 2 * g.r; ++i) coeffs[ipow(g.ell, i)] = 1;
  return coeffs;
}

inline HyperellipticCurve as_hyperelliptic(const GeneralizedHermitian& g) {
  if (!g.hyperelliptic()) throw bad_m_error("only m = 2 members are hyperelliptic");
  return make_hyperelliptic(g.ell, hermitian_trace_coeffs(g), g.field_degree);
}

// Affine rational points plus the number of places at infinity, over the
// field the enumeration ran in. Points are sorted lexicographically by
// (x, y) coefficient vectors.
struct PointList {
  FieldPtr field;
  std::vector<std::pair<FieldElement, FieldElement>> affine;
  std::int64_t at_infinity = 0;
  std::int64_t total() const { return static_cast<std::int64_t>(affine.size()) + at_infinity; }
};

namespace detail {

// Enumerates solutions of lhs(y) = rhs(x) by bucketing y under lhs; both
// value maps iterate elements() in lexicographic order, so the result is
// sorted without an explicit sort.
template <typename Lhs, typename Rhs>
PointList enumerate_plane(FieldPtr field, Lhs&& lhs, Rhs&& rhs, std::int64_t at_infinity) {
  PointList out;
  out.field = field;
  out.at_infinity = at_infinity;
  const std::vector<FieldElement> all = field->elements();
  std::map<FieldElement, std::vector<FieldElement>> fibers;
  for (const FieldElement& y : all) fibers[lhs(y)].push_back(y);
  for (const FieldElement& x : all) {
    auto it = fibers.find(rhs(x));
    if (it == fibers.end()) continue;
    for (const FieldElement& y : it->second) out.affine.emplace_back(x, y);
  }
  return out;
}

}  // namespace detail

inline PointList rational_points(const ArtinSchreierCurve& c, std::int64_t degree) {
  FieldPtr field = make_field(c.p, degree);
  const std::uint64_t sq = static_cast<std::uint64_t>(c.sqrt_q);
  const std::uint64_t m = static_cast<std::uint64_t>(c.m);
  return detail::enumerate_plane(
      field, [sq](const FieldElement& y) { return y.pow(sq) + y; },
      [m](const FieldElement& x) { return x.pow(m); }, 1);
}

inline PointList rational_points(const HyperellipticCurve& h, std::int64_t degree) {
  FieldPtr field = make_field(h.p, degree);
  std::int64_t at_inf = 1;
  if (h.f.degree() % 2 == 0) {
    // two points at infinity on the smooth model iff the leading coefficient
    // is a square in the enumeration field
    const FieldElement lc = field->from_int(h.f.leading().coeffs()[0]);
    at_inf = lc.pow((field->order() - 1) / 2) == field->one() ? 2 : 0;
  }
  const UniPoly& f = h.f;
  return detail::enumerate_plane(
      field, [](const FieldElement& y) { return y * y; },
      [&f](const FieldElement& x) { return eval_lifted(f, x); }, at_inf);
}

inline PointList rational_points(const GeneralizedHermitian& g, std::int64_t degree) {
  FieldPtr field = make_field(g.ell, degree);
  FieldPtr base = make_field(g.ell, 1);
  const UniPoly f = UniPoly::from_coeffs(*base, hermitian_trace_coeffs(g));
  const std::uint64_t m = static_cast<std::uint64_t>(g.m);
  return detail::enumerate_plane(
      field, [m](const FieldElement& y) { return y.pow(m); },
      [&f](const FieldElement& x) { return eval_lifted(f, x); }, 1);
}

inline PointList rational_points(const GeneralizedHermitian& g) {
  return rational_points(g, g.field_degree);
}

struct MaximalityReport {
  std::int64_t field_order = 0;       // ell
  std::int64_t count = 0;             // total points over F_ell
  std::int64_t hasse_weil_bound = 0;  // ell + 1 + 2g*sqrt(ell)
  bool maximal = false;
};

namespace detail {

inline MaximalityReport maximality_from_count(std::int64_t p, std::int64_t degree,
                                              std::int64_t genus, std::int64_t count) {
  if (degree % 2 != 0) throw odd_s_error(degree);
  MaximalityReport r;
  r.field_order = ipow(p, degree);
  r.count = count;
  r.hasse_weil_bound = r.field_order + 1 + 2 * genus * ipow(p, degree / 2);
  r.maximal = r.count == r.hasse_weil_bound;
  return r;
}

}  // namespace detail

inline MaximalityReport is_maximal(const ArtinSchreierCurve& c, std::int64_t degree) {
  return detail::maximality_from_count(c.p, degree, c.genus, rational_points(c, degree).total());
}

inline MaximalityReport is_maximal(const HyperellipticCurve& h, std::int64_t degree) {
  return detail::maximality_from_count(h.p, degree, h.genus, rational_points(h, degree).total());
}

inline MaximalityReport is_maximal(const GeneralizedHermitian& g, std::int64_t degree) {
  return detail::maximality_from_count(g.ell, degree, g.genus,
                                       rational_points(g, degree).total());
}

inline MaximalityReport is_maximal(const GeneralizedHermitian& g) {
  return is_maximal(g, g.field_degree);
}

/// CSV with columns x,y; cells are ':'-joined coefficient digits.
inline void write_points_csv(std::ostream& os, const PointList& points) {
  os << "x,y\n";
  for (const auto& [x, y] : points.affine) os << coeff_string(x) << "," << coeff_string(y) << "\n";
}

}  // namespace cartier
