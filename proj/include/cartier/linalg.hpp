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
// Dense matrices over a FiniteField and exact rank by Gaussian elimination.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cartier/errors.hpp"
#include "cartier/gf.hpp"

namespace cartier {

class FieldMatrix {
 public:
  FieldMatrix() : field_(nullptr), rows_(0), cols_(0) {}
  FieldMatrix(const FiniteField& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FiniteField& field() const { return *field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const FiniteField* field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

// Exact rank by row reduction with first-nonzero pivoting (deterministic).
inline std::size_t rank(FieldMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const FieldElement inv = m.at(rank, col).inv();
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      const FieldElement factor = m.at(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace cartier
