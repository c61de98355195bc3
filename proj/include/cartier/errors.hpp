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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cartier {

// Base class of every failure this library raises on purpose.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class non_prime_error : public error {
 public:
  explicit non_prime_error(std::int64_t p)
      : error("p = " + std::to_string(p) + " is not prime"), p_(p) {}
  std::int64_t p() const noexcept { return p_; }

 private:
  std::int64_t p_;
};

class even_characteristic_error : public error {
 public:
  even_characteristic_error()
      : error("characteristic 2 is not supported; p must be an odd prime") {}
};

class field_too_large_error : public error {
 public:
  using error::error;
};

class context_mismatch_error : public error {
 public:
  context_mismatch_error()
      : error("operands belong to different field contexts") {}
};

class not_a_pth_power_error : public error {
 public:
  using error::error;
};

// t does not divide sqrt_q + 1.
class bad_divisor_error : public error {
 public:
  bad_divisor_error(std::int64_t t, std::int64_t sqrt_q)
      : error("t = " + std::to_string(t) + " is not a positive divisor of sqrt_q + 1 = " +
              std::to_string(sqrt_q + 1)) {}
};

class odd_s_error : public error {
 public:
  explicit odd_s_error(std::int64_t s)
      : error("s = " + std::to_string(s) + " must be an even integer >= 2") {}
};

// m violates the generalized-Hermitian constraints (m >= 2, m | l^r + 1, gcd(m, l) = 1).
class bad_m_error : public error {
 public:
  using error::error;
};

class bad_r_error : public error {
 public:
  using error::error;
};

class degree_too_large_error : public error {
 public:
  using error::error;
};

class search_too_large_error : public error {
 public:
  using error::error;
};

// Desk-scale guard (genus above 2000).
class size_guard_error : public error {
 public:
  using error::error;
};

// A Cartier image left the span of the chosen differential basis. Carries the
// basis element whose image escaped and the first escaping monomial, so the
// failing basis mode can be reported precisely.
class basis_not_stable_error : public error {
 public:
  basis_not_stable_error(std::pair<std::int64_t, std::int64_t> element,
                         std::pair<std::int64_t, std::int64_t> escaped)
      : error("cartier image of basis element x^" + std::to_string(element.first) + " y^" +
              std::to_string(element.second) + " contains x^" + std::to_string(escaped.first) +
              " y^" + std::to_string(escaped.second) + ", outside the basis span"),
        element_(element),
        escaped_(escaped) {}
  std::pair<std::int64_t, std::int64_t> element() const noexcept { return element_; }
  std::pair<std::int64_t, std::int64_t> escaped() const noexcept { return escaped_; }

 private:
  std::pair<std::int64_t, std::int64_t> element_;
  std::pair<std::int64_t, std::int64_t> escaped_;
};

}  // namespace cartier
