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

#include "rnbs/complex_matrix.hpp"

#include <cmath>

namespace rnbs {

ComplexMatrix mat_mul_adjoint(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw InvalidDimensionError("adjoint product requires a square matrix");
  }
  const std::size_t n = a.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        acc += std::conj(a(k, i)) * a(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix gram = mat_mul_adjoint(u);
  const std::size_t n = gram.rows();
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx target = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      defect = std::max(defect, std::abs(gram(i, j) - target));
    }
  }
  return defect;
}

}  // namespace rnbs
