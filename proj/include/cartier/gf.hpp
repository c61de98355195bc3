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
// Exact arithmetic in F_{p^e} for odd p: polynomial basis over a
// deterministically chosen irreducible modulus, Frobenius, p-th roots,
// and guarded full enumeration.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cartier/errors.hpp"

namespace cartier {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

// Dense univariate polynomials over F_p (little-endian coefficients, no
// trailing zeros) — used only for modulus selection and verification.
using PModPoly = std::vector<std::int64_t>;

inline void pm_trim(PModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a*b reduced modulo the monic polynomial f.
inline PModPoly pm_mulmod(const PModPoly& a, const PModPoly& b, const PModPoly& f,
                          std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PModPoly t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
  const std::size_t e = f.size() - 1;
  for (std::size_t k = t.size(); k-- > e;) {
    const std::int64_t c = t[k];
    if (c == 0) continue;
    t[k] = 0;
    for (std::size_t i = 0; i < e; ++i) t[k - e + i] = (t[k - e + i] + (p - f[i]) * c) % p;
  }
  t.resize(e < t.size() ? e : t.size());
  pm_trim(t);
  return t;
}

inline PModPoly pm_powmod(PModPoly base, std::uint64_t n, const PModPoly& f, std::int64_t p) {
  PModPoly r{1};
  while (n > 0) {
    if (n & 1) r = pm_mulmod(r, base, f, p);
    base = pm_mulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

inline PModPoly pm_gcd(PModPoly a, PModPoly b, std::int64_t p) {
  auto inv_mod_p = [p](std::int64_t v) {
    std::int64_t r = 1, b2 = v % p, n = p - 2;
    while (n > 0) {
      if (n & 1) r = r * b2 % p;
      b2 = b2 * b2 % p;
      n >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    const std::int64_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      const std::int64_t c = a.back() * lead_inv % p;
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - c * b[i]) % p + p) % p;
      pm_trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's irreducibility test for monic f of degree e over F_p:
// X^{p^e} = X (mod f) and gcd(X^{p^{e/d}} - X, f) = 1 for every prime d | e.
inline bool pm_irreducible(const PModPoly& f, std::int64_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 0) return false;
  if (e == 1) return true;
  std::vector<PModPoly> frob(e + 1);
  frob[0] = PModPoly{0, 1};  // X
  for (std::size_t k = 1; k <= e; ++k) frob[k] = pm_powmod(frob[k - 1], std::uint64_t(p), f, p);
  if (frob[e] != frob[0]) return false;
  std::size_t rem = e;
  for (std::size_t d = 2; d * d <= e; ++d) {
    if (rem % d != 0) continue;
    while (rem % d == 0) rem /= d;
    PModPoly g = frob[e / d];
    g.resize(g.size() < 2 ? 2 : g.size(), 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    pm_trim(g);
    if (pm_gcd(g, f, p).size() != 1) return false;
  }
  if (rem > 1) {
    PModPoly g = frob[e / rem];
    g.resize(g.size() < 2 ? 2 : g.size(), 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    pm_trim(g);
    if (pm_gcd(g, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class FiniteField;

// Element of F_{p^e} in the polynomial basis: a length-e coefficient vector
// (constant term first), entries reduced mod p. An element references its
// FiniteField and must not outlive it.
class FieldElement {
 public:
  FieldElement() = default;

  bool is_zero() const {
    for (auto c : c_)
      if (c != 0) return false;
    return true;
  }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  const FiniteField& field() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ == nullptr && b.field_ == nullptr) return true;
    a.require_same_field(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  // Lexicographic on the coefficient vector (constant term compared first);
  // the deterministic order used for point lists and enumeration.
  friend bool operator<(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    return a.c_ < b.c_;
  }

  FieldElement pow(std::uint64_t n) const;
  FieldElement inv() const;
  FieldElement frobenius() const;  // a^p
  FieldElement pth_root() const;   // the unique b with b^p = a

 private:
  friend class FiniteField;
  FieldElement(const FiniteField* f, std::vector<std::uint32_t> c)
      : field_(f), c_(std::move(c)) {}
  void require_same_field(const FieldElement& o) const;

  const FiniteField* field_ = nullptr;
  std::vector<std::uint32_t> c_;
};

// Immutable field context F_{p^e}, p an odd prime. The modulus is the
// lexicographically smallest monic irreducible of degree e, scanning
// candidate coefficient lists (c_0, ..., c_{e-1}) in increasing order of the
// integer sum(c_i p^i) — the constant term is the least-significant digit.
class FiniteField {
 public:
  FiniteField(std::int64_t p, std::int64_t e) : FiniteField(p, e, find_modulus(p, e)) {}

  FiniteField(std::int64_t p, std::int64_t e, std::vector<std::uint32_t> modulus)
      : p_(p), e_(e), mod_(std::move(modulus)) {
    if (p == 2) throw even_characteristic_error();
    if (!is_prime(p)) throw non_prime_error(p);
    if (e < 1) throw error("extension degree e must be >= 1");
    if (p > (std::int64_t{1} << 20)) throw field_too_large_error("p exceeds 2^20");
    if (mod_.size() != static_cast<std::size_t>(e) + 1 || mod_.back() != 1)
      throw error("modulus must be monic of degree e");
    for (auto c : mod_)
      if (c >= static_cast<std::uint32_t>(p)) throw error("modulus coefficients must be reduced mod p");
    order_ = 1;
    for (std::int64_t i = 0; i < e_; ++i) {
      if (order_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p_))
        throw field_too_large_error("p^e exceeds 2^62");
      order_ *= static_cast<std::uint64_t>(p_);
    }
    detail::PModPoly f(mod_.begin(), mod_.end());
    if (!detail::pm_irreducible(f, p_)) throw error("modulus is not irreducible over F_p");
  }

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::int64_t characteristic() const { return p_; }
  std::int64_t degree() const { return e_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  bool same(const FiniteField& o) const {
    return this == &o || (p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_);
  }

  FieldElement zero() const { return FieldElement(this, std::vector<std::uint32_t>(e_, 0)); }
  FieldElement one() const { return from_int(1); }

  FieldElement from_int(std::int64_t v) const {
    std::vector<std::uint32_t> c(e_, 0);
    c[0] = static_cast<std::uint32_t>(((v % p_) + p_) % p_);
    return FieldElement(this, std::move(c));
  }

  FieldElement element(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(e_))
      throw error("coefficient vector longer than the extension degree");
    std::vector<std::uint32_t> c(e_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      c[i] = static_cast<std::uint32_t>(((coeffs[i] % p_) + p_) % p_);
    return FieldElement(this, std::move(c));
  }

  // Residue class of X, the polynomial-basis generator (zero when e = 1,
  // where the modulus is X itself).
  FieldElement u() const {
    std::vector<std::uint32_t> c(e_, 0);
    if (e_ > 1) c[1] = 1;
    return FieldElement(this, std::move(c));
  }

  // All p^e elements in lexicographic coefficient order. Guarded at 10^6.
  std::vector<FieldElement> elements() const {
    if (order_ > 1000000) throw field_too_large_error("enumeration guard: p^e exceeds 10^6");
    std::vector<FieldElement> out;
    out.reserve(order_);
    std::vector<std::uint32_t> c(e_, 0);
    for (std::uint64_t n = 0;; ++n) {
      out.push_back(FieldElement(this, c));
      if (n + 1 == order_) break;
      // lexicographic successor: increment the last coordinate with carry
      for (std::int64_t i = e_ - 1; i >= 0; --i) {
        if (++c[i] < static_cast<std::uint32_t>(p_)) break;
        c[i] = 0;
      }
    }
    return out;
  }

  static std::vector<std::uint32_t> find_modulus(std::int64_t p, std::int64_t e) {
    if (p == 2) throw even_characteristic_error();
    if (!is_prime(p)) throw non_prime_error(p);
    if (e < 1) throw error("extension degree e must be >= 1");
    std::vector<std::uint32_t> c(e + 1, 0);
    c[e] = 1;
    for (std::uint64_t n = 0;; ++n) {
      std::uint64_t v = n;
      for (std::int64_t i = 0; i < e; ++i) {
        c[i] = static_cast<std::uint32_t>(v % static_cast<std::uint64_t>(p));
        v /= static_cast<std::uint64_t>(p);
      }
      if (v != 0) throw error("no irreducible modulus found");  // unreachable
      detail::PModPoly f(c.begin(), c.end());
      if (detail::pm_irreducible(f, p)) return c;
    }
  }

 private:
  friend class FieldElement;
  std::int64_t p_;
  std::int64_t e_;
  std::uint64_t order_;
  std::vector<std::uint32_t> mod_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline FieldPtr make_field(std::int64_t p, std::int64_t e) {
  return std::make_shared<const FiniteField>(p, e);
}

inline const FiniteField& FieldElement::field() const {
  if (field_ == nullptr) throw error("null field element");
  return *field_;
}

inline void FieldElement::require_same_field(const FieldElement& o) const {
  if (field_ == nullptr || o.field_ == nullptr || !field_->same(*o.field_))
    throw context_mismatch_error();
}

inline FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const auto p = static_cast<std::uint32_t>(field().p_);
  for (auto& c : r.c_) c = c == 0 ? 0 : p - c;
  return r;
}

inline FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(o);
  const auto p = static_cast<std::uint32_t>(field_->p_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p) c_[i] -= p;
  }
  return *this;
}

inline FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(o);
  const auto p = static_cast<std::uint32_t>(field_->p_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return *this;
}

inline FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(o);
  const std::int64_t p = field_->p_;
  const std::size_t e = c_.size();
  std::vector<std::int64_t> t(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j)
      t[i + j] = (t[i + j] + static_cast<std::int64_t>(c_[i]) * o.c_[j]) % p;
  }
  const auto& mod = field_->mod_;
  for (std::size_t k = t.size(); k-- > e;) {
    const std::int64_t c = t[k];
    if (c == 0) continue;
    t[k] = 0;
    for (std::size_t i = 0; i < e; ++i) t[k - e + i] = (t[k - e + i] + (p - mod[i]) * c) % p;
  }
  for (std::size_t i = 0; i < e; ++i) c_[i] = static_cast<std::uint32_t>(t[i]);
  return *this;
}

inline FieldElement FieldElement::pow(std::uint64_t n) const {
  FieldElement base = *this;
  FieldElement r = field().one();
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

inline FieldElement FieldElement::inv() const {
  if (is_zero()) throw error("division by zero");
  return pow(field().order() - 2);
}

inline FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inv(); }

inline FieldElement FieldElement::frobenius() const {
  return pow(static_cast<std::uint64_t>(field().characteristic()));
}

inline FieldElement FieldElement::pth_root() const {
  FieldElement r = *this;
  for (std::int64_t i = 1; i < field().degree(); ++i) r = r.frobenius();
  return r;
}

// "0", "2", "u", "2*u^3+u+2" — human-readable polynomial-basis form.
inline std::string to_string(const FieldElement& a) {
  const auto& c = a.coeffs();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += i == 1 ? "u" : "u^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// Compact coefficient form "c0:c1:...:c{e-1}" used in CSV cells.
inline std::string coeff_string(const FieldElement& a) {
  const auto& c = a.coeffs();
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ":";
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace cartier
