// Copyright 2026 The rnbs-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RNBS_COMPLEX_MATRIX_HPP_
#define RNBS_COMPLEX_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "rnbs/errors.hpp"

namespace rnbs {

using cplx = std::complex<double>;

// Dense complex matrix, row-major storage. Dimensions are fixed at
// construction and always at least 1x1.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
      throw InvalidDimensionError("matrix dimensions must be at least 1x1");
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  bool operator==(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

// Returns a^H * a for a square matrix a.
ComplexMatrix mat_mul_adjoint(const ComplexMatrix& a);

// Max-norm distance of u^H * u from the identity. Zero for exact unitaries.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace rnbs

#endif  // RNBS_COMPLEX_MATRIX_HPP_
