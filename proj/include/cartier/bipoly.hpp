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
// Sparse bivariate polynomials over a FiniteField, plus the exponent-level
// Cartier building blocks: the nabla selector, polynomial p-th roots,
// reduction by a curve relation y^D = g(x,y), and the closed-form expansion
// of F^{p-1} x^i y^j for Artin--Schreier curves.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartier/errors.hpp"
#include "cartier/gf.hpp"

namespace cartier {

struct Monomial {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order with x weighted before y: by total degree, then by x.
// Reverse iteration therefore prints x^2 > xy > y^2 > x > y > 1.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
    return a.x < b.x;
  }
};

class BiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElement, MonomialOrder>;

  explicit BiPoly(const FiniteField& f) : field_(&f) {}

  static BiPoly monomial(const FiniteField& f, std::int64_t i, std::int64_t j,
                         const FieldElement& c) {
    BiPoly r(f);
    r.add_term(i, j, c);
    return r;
  }
  static BiPoly monomial(const FiniteField& f, std::int64_t i, std::int64_t j, std::int64_t c) {
    return monomial(f, i, j, f.from_int(c));
  }

  const FiniteField& field() const { return *field_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  FieldElement coeff(std::int64_t i, std::int64_t j) const {
    auto it = t_.find(Monomial{i, j});
    return it == t_.end() ? field_->zero() : it->second;
  }

  void add_term(std::int64_t i, std::int64_t j, const FieldElement& c) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0) throw error("negative exponent in bivariate term");
    auto [it, fresh] = t_.try_emplace(Monomial{i, j}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  BiPoly operator+(const BiPoly& o) const {
    require_same(o);
    BiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m.x, m.y, c);
    return r;
  }

  BiPoly operator-(const BiPoly& o) const {
    require_same(o);
    BiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m.x, m.y, -c);
    return r;
  }

  BiPoly operator*(const BiPoly& o) const {
    require_same(o);
    BiPoly r(*field_);
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) r.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
    return r;
  }

  BiPoly scaled(const FieldElement& s) const {
    BiPoly r(*field_);
    for (const auto& [m, c] : t_) r.add_term(m.x, m.y, c * s);
    return r;
  }

  BiPoly pow(std::uint64_t n) const {
    BiPoly base = *this;
    BiPoly r = monomial(*field_, 0, 0, 1);
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  std::int64_t degree_x() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.x);
    return d;
  }
  std::int64_t degree_y() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.y);
    return d;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    a.require_same(b);
    return a.t_ == b.t_;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const std::string cs = cartier::to_string(it->second);
      const auto& m = it->first;
      std::string mono;
      if (m.x > 0) mono += m.x > 1 ? "x^" + std::to_string(m.x) : "x";
      if (m.y > 0) {
        if (!mono.empty()) mono += "*";
        mono += m.y > 1 ? "y^" + std::to_string(m.y) : "y";
      }
      if (mono.empty()) {
        out += cs;
      } else {
        if (cs != "1") out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  void require_same(const BiPoly& o) const {
    if (!field_->same(*o.field_)) throw context_mismatch_error();
  }

  const FiniteField* field_;
  TermMap t_;
};

// Keeps exactly the terms whose exponents are both congruent to p-1 mod p and
// lowers each exponent by p-1; every surviving exponent is then a multiple of
// p, ready for pth_root_poly.
inline BiPoly nabla(const BiPoly& t) {
  const std::int64_t p = t.field().characteristic();
  BiPoly r(t.field());
  for (const auto& [m, c] : t.terms())
    if (m.x % p == p - 1 && m.y % p == p - 1) r.add_term(m.x - (p - 1), m.y - (p - 1), c);
  return r;
}

// c * X^{ip} Y^{jp}  ->  pth_root(c) * X^i Y^j.
inline BiPoly pth_root_poly(const BiPoly& t) {
  const std::int64_t p = t.field().characteristic();
  BiPoly r(t.field());
  for (const auto& [m, c] : t.terms()) {
    if (m.x % p != 0 || m.y % p != 0)
      throw not_a_pth_power_error("exponent pair (" + std::to_string(m.x) + ", " +
                                  std::to_string(m.y) + ") is not divisible by p");
    r.add_term(m.x / p, m.y / p, c.pth_root());
  }
  return r;
}

// Substitutes y^D = g(x,y) until every y-exponent is below D, eliminating the
// highest y-power first. Requires deg_y(g) < D so the rewriting terminates.
inline BiPoly reduce_y(const BiPoly& t, std::int64_t D, const BiPoly& g) {
  if (D < 1) throw error("reduce_y requires D >= 1");
  if (g.degree_y() >= D) throw error("reduce_y requires deg_y(g) < D");
  BiPoly cur = t;
  for (;;) {
    const std::int64_t dy = cur.degree_y();
    if (dy < D) return cur;
    BiPoly rest(cur.field());
    BiPoly top(cur.field());  // sum of c x^a y^{b-D} over terms with b maximal
    for (const auto& [m, c] : cur.terms()) {
      if (m.y == dy)
        top.add_term(m.x, m.y - D, c);
      else
        rest.add_term(m.x, m.y, c);
    }
    cur = rest + top * g;
  }
}

// Closed-form expansion of F^{p-1} x^i y^j for F = y^sqrt_q + y - x^m:
//   sum over 0 <= k <= h <= p-1 of
//   (-1)^{p-1-h} C(p-1,h) C(h,k) x^{(p-1-h)m + i} y^{k sqrt_q + (h-k) + j}.
inline BiPoly artin_schreier_expand(const FiniteField& f, std::int64_t sqrt_q, std::int64_t m,
                                    std::int64_t i, std::int64_t j) {
  const std::int64_t p = f.characteristic();
  // Pascal triangle mod p up to row p-1
  std::vector<std::vector<std::int64_t>> binom(p);
  for (std::int64_t n = 0; n < p; ++n) {
    binom[n].assign(n + 1, 1);
    for (std::int64_t k = 1; k < n; ++k)
      binom[n][k] = (binom[n - 1][k - 1] + binom[n - 1][k]) % p;
  }
  BiPoly r(f);
  for (std::int64_t h = 0; h <= p - 1; ++h) {
    for (std::int64_t k = 0; k <= h; ++k) {
      std::int64_t c = binom[p - 1][h] * binom[h][k] % p;
      if ((p - 1 - h) % 2 != 0) c = p - c;  // (-1)^{p-1-h}
      r.add_term((p - 1 - h) * m + i, k * sqrt_q + (h - k) + j, f.from_int(c));
    }
  }
  return r;
}

}  // namespace cartier
