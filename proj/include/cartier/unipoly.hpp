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
// Dense univariate polynomials over a FiniteField: the support layer for
// hyperelliptic curves (y^2 = f(x)) and the Cartier--Manin route.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cartier/errors.hpp"
#include "cartier/gf.hpp"

namespace cartier {

class UniPoly {
 public:
  explicit UniPoly(const FiniteField& f) : field_(&f) {}

  static UniPoly from_coeffs(const FiniteField& f, const std::vector<std::int64_t>& coeffs) {
    UniPoly r(f);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.set_coeff(i, f.from_int(coeffs[i]));
    return r;
  }

  const FiniteField& field() const { return *field_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

  FieldElement coeff(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(c_.size())) return field_->zero();
    return c_[k];
  }

  void set_coeff(std::int64_t k, const FieldElement& v) {
    if (k >= static_cast<std::int64_t>(c_.size())) {
      if (v.is_zero()) return;
      c_.resize(k + 1, field_->zero());
    }
    c_[k] = v;
    trim();
  }

  FieldElement leading() const { return c_.empty() ? field_->zero() : c_.back(); }

  UniPoly operator+(const UniPoly& o) const {
    require_same(o);
    UniPoly r(*field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i < c_.size()) r.c_[i] += c_[i];
      if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
  }

  UniPoly operator-(const UniPoly& o) const {
    require_same(o);
    UniPoly r(*field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i < c_.size()) r.c_[i] += c_[i];
      if (i < o.c_.size()) r.c_[i] -= o.c_[i];
    }
    r.trim();
    return r;
  }

  UniPoly operator*(const UniPoly& o) const {
    require_same(o);
    UniPoly r(*field_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
  }

  UniPoly pow(std::uint64_t n) const {
    UniPoly base = *this;
    UniPoly r = from_coeffs(*field_, {1});
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  UniPoly derivative() const {
    UniPoly r(*field_);
    for (std::size_t k = 1; k < c_.size(); ++k)
      r.set_coeff(k - 1, c_[k] * field_->from_int(static_cast<std::int64_t>(k)));
    return r;
  }

  FieldElement eval(const FieldElement& x) const {
    FieldElement r = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    a.require_same(b);
    while (!b.is_zero()) {
      // a mod b
      const FieldElement lead_inv = b.leading().inv();
      while (!a.is_zero() && a.degree() >= b.degree()) {
        const FieldElement c = a.leading() * lead_inv;
        const std::int64_t off = a.degree() - b.degree();
        for (std::int64_t i = 0; i <= b.degree(); ++i)
          a.c_[off + i] -= c * b.c_[i];
        a.trim();
      }
      std::swap(a, b);
    }
    if (!a.is_zero()) {  // monic normalization
      const FieldElement s = a.leading().inv();
      for (auto& c : a.c_) c = c * s;
    }
    return a;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    a.require_same(b);
    return a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      const std::string cs = cartier::to_string(c_[i]);
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void require_same(const UniPoly& o) const {
    if (!field_->same(*o.field_)) throw context_mismatch_error();
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  const FiniteField* field_;
  std::vector<FieldElement> c_;
};

// Evaluates a prime-field polynomial at a point of an extension of the same
// characteristic, lifting coefficients through the canonical embedding.
inline FieldElement eval_lifted(const UniPoly& f, const FieldElement& x) {
  const FiniteField& kf = f.field();
  const FiniteField& kx = x.field();
  if (kf.degree() != 1 || kf.characteristic() != kx.characteristic())
    throw context_mismatch_error();
  FieldElement r = kx.zero();
  for (std::int64_t i = f.degree(); i >= 0; --i)
    r = r * x + kx.from_int(static_cast<std::int64_t>(f.coeff(i).coeffs()[0]));
  return r;
}

}  // namespace cartier
