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

// Internal (not installed): compensated summation helper.

#ifndef RNBS_SRC_KAHAN_SUM_HPP_
#define RNBS_SRC_KAHAN_SUM_HPP_

namespace rnbs::detail {

// Kahan step: adds term to sum, tracking the rounding remainder in c.
template <typename T>
inline void kahan_add(T& sum, T& c, T term) {
  const T y = term - c;
  const T t = sum + y;
  c = (t - sum) - y;
  sum = t;
}

}  // namespace rnbs::detail

#endif  // RNBS_SRC_KAHAN_SUM_HPP_
