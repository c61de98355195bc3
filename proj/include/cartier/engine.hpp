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
// The Cartier engine. Images of differentials under the Cartier operator on
// A_t curves, the Cartier matrix and a-number by three routes (matrix rank,
// congruence counting, closed formulas), the Cartier--Manin matrix for
// hyperelliptic curves, and the a-number conjecture checker for the
// generalized Hermitian family.
//
// The a-number is dim ker of the 1/p-linear Cartier operator on the space of
// holomorphic differentials. Because Frobenius is bijective, the kernel
// dimension equals genus minus the ordinary linear rank of the coefficient
// matrix, so exact Gaussian elimination suffices.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartier/bipoly.hpp"
#include "cartier/curves.hpp"
#include "cartier/errors.hpp"
#include "cartier/gf.hpp"
#include "cartier/linalg.hpp"
#include "cartier/parallel.hpp"
#include "cartier/unipoly.hpp"

namespace cartier {

inline constexpr std::int64_t kGenusGuard = 2000;
inline constexpr std::int64_t kAmbientOrderGuard = 1000000;  // p^{2s} <= 10^6

// The ambient coefficient field F_{p^{2s}} used for all A_t matrix work.
inline FieldPtr ambient_field(const ArtinSchreierCurve& c) {
  if (ipow(c.p, c.ambient_degree) > kAmbientOrderGuard)
    throw field_too_large_error("ambient field order p^(2s) exceeds 10^6");
  return make_field(c.p, c.ambient_degree);
}

struct CartierMatrix {
  FieldPtr field;
  FieldMatrix entries;  // column j = coordinates of the image of basis[j]
  std::vector<std::pair<std::int64_t, std::int64_t>> basis_monomials;
  BasisMode mode = BasisMode::valuation;
};

enum class HRange { half, full };

inline std::string to_string(HRange h) { return h == HRange::half ? "half" : "full"; }

struct RankReport {
  std::string method;  // nabla_matrix | congruence | closed_formula
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t genus = 0;
  std::int64_t rank = 0;
  std::int64_t a_number = 0;
  std::optional<std::string> basis_mode;  // set for nabla_matrix and congruence
  std::optional<std::string> h_range;     // set for congruence
};

// F^{p-1} x^i y^j, then the nabla selector, coefficient p-th roots, and
// reduction below y^sqrt_q: the numerator of the Cartier image of
// x^i y^j dx (F_y = 1 for A_t, so no denominator correction is needed).
inline BiPoly cartier_image(const ArtinSchreierCurve& c, const FiniteField& field,
                            const BiPoly& numerator) {
  if (numerator.degree_y() >= c.sqrt_q)
    throw error("numerator must be reduced: y-degree below sqrt_q");
  const BiPoly f_pm1 = artin_schreier_expand(field, c.sqrt_q, c.m, 0, 0);
  const BiPoly img = pth_root_poly(nabla(f_pm1 * numerator));
  return reduce_y(img, c.sqrt_q, reduction_rhs(c, field));
}

inline CartierMatrix cartier_matrix(const ArtinSchreierCurve& c, const DifferentialBasis& basis,
                                    FieldPtr field) {
  const std::size_t g = basis.monomials.size();
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> row_of;
  for (std::size_t i = 0; i < g; ++i) row_of.emplace(basis.monomials[i], i);

  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> columns(g);
  std::vector<std::optional<Monomial>> escapes(g);
  parallel_for(g, [&](std::size_t col) {
    const auto [i, j] = basis.monomials[col];
    const BiPoly raw = pth_root_poly(nabla(artin_schreier_expand(*field, c.sqrt_q, c.m, i, j)));
    const BiPoly img = reduce_y(raw, c.sqrt_q, reduction_rhs(c, *field));
    for (const auto& [mono, coeff] : img.terms()) {
      auto it = row_of.find({mono.x, mono.y});
      if (it == row_of.end()) {
        if (!escapes[col]) escapes[col] = mono;  // first escape in term order
        continue;
      }
      columns[col].emplace_back(it->second, coeff);
    }
  });
  for (std::size_t col = 0; col < g; ++col)
    if (escapes[col])
      throw basis_not_stable_error(basis.monomials[col], {escapes[col]->x, escapes[col]->y});

  CartierMatrix out{field, FieldMatrix(*field, g, g), basis.monomials, basis.mode};
  for (std::size_t col = 0; col < g; ++col)
    for (const auto& [row, coeff] : columns[col]) out.entries.at(row, col) = coeff;
  return out;
}

inline CartierMatrix cartier_matrix(const ArtinSchreierCurve& c,
                                    BasisMode mode = BasisMode::valuation) {
  return cartier_matrix(c, differential_basis(c, mode), ambient_field(c));
}

inline RankReport a_number(const ArtinSchreierCurve& c, BasisMode mode = BasisMode::valuation) {
  if (c.genus > kGenusGuard) throw size_guard_error("genus exceeds the desk-scale guard 2000");
  const CartierMatrix m = cartier_matrix(c, mode);
  RankReport r;
  r.method = "nabla_matrix";
  r.p = c.p;
  r.s = c.s;
  r.t = c.t;
  r.genus = c.genus;
  r.rank = static_cast<std::int64_t>(rank(m.entries));
  r.a_number = r.genus - r.rank;
  r.basis_mode = to_string(mode);
  return r;
}

inline RankReport a_number_At_experimental(std::int64_t p, std::int64_t s, std::int64_t t) {
  return a_number(make_curve_At(p, s, t));
}

// Counts basis monomials (i,j) for which the mod-p system
//   (p-1-h)m + i = p-1,   k sqrt_q + (h-k) + j = p-1
// has a solution with 0 <= k <= h and h in the selected range. The y-side
// congruence is stated with 0 on the right in some sources; p-1 is the value
// forced by the nabla selector (sqrt_q vanishes mod p) and by the known
// rank 0 of every s = 2 case.
inline RankReport rank_congruence(std::int64_t p, std::int64_t s, HRange h_range = HRange::full,
                                  BasisMode mode = BasisMode::valuation) {
  const ArtinSchreierCurve c = make_curve_At(p, s, 2);
  const DifferentialBasis basis = differential_basis(c, mode);
  const std::int64_t h_max = h_range == HRange::half ? (p - 1) / 2 : p - 1;
  std::int64_t count = 0;
  for (const auto& [i, j] : basis.monomials) {
    bool solvable = false;
    for (std::int64_t h = 0; h <= h_max && !solvable; ++h) {
      if (((p - 1 - h) * c.m + i) % p != p - 1) continue;
      for (std::int64_t k = 0; k <= h; ++k) {
        if ((k * c.sqrt_q + (h - k) + j) % p == p - 1) {
          solvable = true;
          break;
        }
      }
    }
    if (solvable) ++count;
  }
  RankReport r;
  r.method = "congruence";
  r.p = p;
  r.s = s;
  r.t = 2;
  r.genus = c.genus;
  r.rank = count;
  r.a_number = r.genus - r.rank;
  r.basis_mode = to_string(mode);
  r.h_range = to_string(h_range);
  return r;
}

namespace detail {

inline void check_closed_args(std::int64_t p, std::int64_t s) {
  if (p == 2) throw even_characteristic_error();
  if (!is_prime(p)) throw non_prime_error(p);
  if (s < 2 || s % 2 != 0) throw odd_s_error(s);
}

inline std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (num % den != 0) throw error("closed formula did not produce an integer");
  return num / den;
}

}  // namespace detail

// a = (p-1)/8 * (sqrt(p^{s-2}) + 1) * (sqrt(p^s) - 1)
inline std::int64_t a_closed(std::int64_t p, std::int64_t s) {
  detail::check_closed_args(p, s);
  return detail::exact_div((p - 1) * (ipow(p, (s - 2) / 2) + 1) * (ipow(p, s / 2) - 1), 8);
}

// rank = (p+1)/8 * (sqrt(p^s) - 1) * (sqrt(p^{s-2}) - 1)
inline std::int64_t rank_closed(std::int64_t p, std::int64_t s) {
  detail::check_closed_args(p, s);
  return detail::exact_div((p + 1) * (ipow(p, s / 2) - 1) * (ipow(p, (s - 2) / 2) - 1), 8);
}

inline RankReport closed_report(std::int64_t p, std::int64_t s) {
  RankReport r;
  r.method = "closed_formula";
  r.p = p;
  r.s = s;
  r.t = 2;
  r.genus = (ipow(p, s / 2) - 1) * (ipow(p, s / 2) - 1) / 4;
  r.rank = rank_closed(p, s);
  r.a_number = a_closed(p, s);
  return r;
}

// The step rank(s) - rank(s-2) = (sqrt(p^{s-2}) - 1)(p+1) sqrt(p^{s-4}) (p^2-1) / 8
// for even s >= 4.
inline std::int64_t recursion_increment(std::int64_t p, std::int64_t s) {
  detail::check_closed_args(p, s);
  if (s < 4) throw odd_s_error(s);
  return detail::exact_div(
      (ipow(p, (s - 2) / 2) - 1) * (p + 1) * ipow(p, (s - 4) / 2) * (p * p - 1), 8);
}

// ---------------------------------------------------------------------------
// Hyperelliptic curves y^2 = f(x)

// Cartier--Manin matrix: basis x^{i-1} dx/y, i = 1..g; with column-as-image
// layout the (row i, col j) entry is the p-th root of the coefficient of
// x^{p*i - j} in f^{(p-1)/2}.
inline CartierMatrix cartier_manin(const HyperellipticCurve& h) {
  const std::int64_t g = h.genus;
  const UniPoly c = h.f.pow(static_cast<std::uint64_t>((h.p - 1) / 2));
  CartierMatrix out{h.base, FieldMatrix(*h.base, g, g), {}, BasisMode::valuation};
  for (std::int64_t i = 1; i <= g; ++i) out.basis_monomials.emplace_back(i - 1, 0);
  for (std::int64_t i = 1; i <= g; ++i)
    for (std::int64_t j = 1; j <= g; ++j)
      out.entries.at(i - 1, j - 1) = c.coeff(h.p * i - j).pth_root();
  return out;
}

// Independent route through the generic machinery: numerators 2 x^{i-1}
// (that is, F_y x^{i-1} / y with F_y = 2y), reduced by y^2 = f; the image
// must come out y-free of degree at most g-1, and dividing by 2 gives the
// column in the x^{j-1} dx/y basis.
inline CartierMatrix hyperelliptic_nabla_matrix(const HyperellipticCurve& h) {
  const FiniteField& k = *h.base;
  const std::int64_t g = h.genus;
  const std::int64_t p = h.p;
  BiPoly F(k);  // y^2 - f(x)
  F.add_term(0, 2, k.one());
  for (std::int64_t d = 0; d <= h.f.degree(); ++d) F.add_term(d, 0, -h.f.coeff(d));
  const BiPoly f_pm1 = F.pow(static_cast<std::uint64_t>(p - 1));
  BiPoly f_rhs(k);  // y^2 = f(x)
  for (std::int64_t d = 0; d <= h.f.degree(); ++d) f_rhs.add_term(d, 0, h.f.coeff(d));
  const FieldElement half = k.from_int(2).inv();

  CartierMatrix out{h.base, FieldMatrix(k, g, g), {}, BasisMode::valuation};
  for (std::int64_t i = 1; i <= g; ++i) out.basis_monomials.emplace_back(i - 1, 0);
  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> columns(g);
  parallel_for(static_cast<std::size_t>(g), [&](std::size_t col) {
    const BiPoly numerator = BiPoly::monomial(k, static_cast<std::int64_t>(col), 0, 2);
    const BiPoly img = reduce_y(pth_root_poly(nabla(f_pm1 * numerator)), 2, f_rhs);
    for (const auto& [mono, coeff] : img.terms()) {
      if (mono.y != 0 || mono.x > g - 1)
        throw error("hyperelliptic nabla route produced an unreduced image");
      columns[col].emplace_back(static_cast<std::size_t>(mono.x), coeff * half);
    }
  });
  for (std::int64_t col = 0; col < g; ++col)
    for (const auto& [row, coeff] : columns[col]) out.entries.at(row, col) = coeff;
  return out;
}

struct HyperellipticReport {
  std::int64_t genus = 0;
  std::int64_t rank_cm = 0;
  std::int64_t a_cm = 0;
  std::int64_t rank_nabla = 0;
  std::int64_t a_nabla = 0;
  bool routes_agree = false;
};

inline HyperellipticReport hyperelliptic_a_number(const HyperellipticCurve& h) {
  if (h.genus > kGenusGuard) throw size_guard_error("genus exceeds the desk-scale guard 2000");
  HyperellipticReport r;
  r.genus = h.genus;
  r.rank_cm = static_cast<std::int64_t>(rank(cartier_manin(h).entries));
  r.a_cm = r.genus - r.rank_cm;
  r.rank_nabla = static_cast<std::int64_t>(rank(hyperelliptic_nabla_matrix(h).entries));
  r.a_nabla = r.genus - r.rank_nabla;
  r.routes_agree = r.a_cm == r.a_nabla;
  return r;
}

// ---------------------------------------------------------------------------
// Conjecture: a(Y) = (l^{2r-2} + 1)(l - 1)/4 for y^2 = x + x^l + ... + x^{l^{2r-1}}

struct ConjectureReport {
  std::int64_t ell = 0;
  std::int64_t r = 0;
  std::int64_t genus = 0;
  std::int64_t a_conjectured = 0;
  std::int64_t a_computed = 0;  // Cartier--Manin route
  std::int64_t a_nabla = 0;     // generic route cross-check
  bool routes_agree = false;
  bool agrees = false;  // computed vs conjectured; reported, never asserted
};

inline ConjectureReport conjecture_check(std::int64_t ell, std::int64_t r) {
  if (r < 2) throw bad_r_error("conjecture check requires r >= 2");
  const GeneralizedHermitian g = make_generalized_hermitian(ell, r, 2);
  if (g.genus > kGenusGuard) throw size_guard_error("genus exceeds the desk-scale guard 2000");
  const HyperellipticCurve h = as_hyperelliptic(g);
  const HyperellipticReport hr = hyperelliptic_a_number(h);
  ConjectureReport out;
  out.ell = ell;
  out.r = r;
  out.genus = g.genus;
  out.a_conjectured = detail::exact_div((ipow(ell, 2 * r - 2) + 1) * (ell - 1), 4);
  out.a_computed = hr.a_cm;
  out.a_nabla = hr.a_nabla;
  out.routes_agree = hr.routes_agree;
  out.agrees = out.a_computed == out.a_conjectured;
  return out;
}

// ---------------------------------------------------------------------------
// Multi-route summaries (CLI and acceptance surface)

struct AllRoutes {
  RankReport nabla;
  RankReport congruence;  // at the calibrated default h-range
  RankReport closed;
  std::int64_t congruence_half = 0;
  std::int64_t congruence_full = 0;
  bool h_ranges_agree = false;
  bool consistent = false;
};

inline AllRoutes anumber_all(std::int64_t p, std::int64_t s,
                             BasisMode mode = BasisMode::valuation) {
  AllRoutes out;
  out.nabla = a_number(make_curve_At(p, s, 2), mode);
  out.congruence = rank_congruence(p, s, HRange::full, mode);
  out.closed = closed_report(p, s);
  out.congruence_half = rank_congruence(p, s, HRange::half, mode).rank;
  out.congruence_full = out.congruence.rank;
  out.h_ranges_agree = out.congruence_half == out.congruence_full;
  out.consistent = out.nabla.rank == out.congruence.rank && out.nabla.rank == out.closed.rank &&
                   out.nabla.a_number == out.closed.a_number;
  return out;
}

struct RankTableRow {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t genus = 0;
  std::int64_t rank_closed = 0;
  std::int64_t a_closed = 0;
  std::optional<std::int64_t> matrix_rank;  // present when the guards admit the matrix
};

inline std::vector<RankTableRow> rank_table(std::int64_t p_max,
                                            const std::vector<std::int64_t>& s_list) {
  std::vector<RankTableRow> rows;
  for (std::int64_t p = 3; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t s : s_list) {
      const ArtinSchreierCurve c = make_curve_At(p, s, 2);
      RankTableRow row;
      row.p = p;
      row.s = s;
      row.genus = c.genus;
      row.rank_closed = rank_closed(p, s);
      row.a_closed = a_closed(p, s);
      if (c.genus <= kGenusGuard && ipow(p, c.ambient_degree) <= kAmbientOrderGuard)
        row.matrix_rank = a_number(c).rank;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace cartier
