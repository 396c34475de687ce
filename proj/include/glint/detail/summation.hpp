// Copyright 2026 The glint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLINT_DETAIL_SUMMATION_HPP
#define GLINT_DETAIL_SUMMATION_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace glint::detail {

// Pairwise summation with a fixed reduction tree. Deterministic for a given
// input order and better conditioned than left-to-right accumulation.
inline double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

// Sample mean and its standard error (two-pass, pairwise reductions).
inline MeanAndError mean_and_std_error(const std::vector<double>& v) {
  MeanAndError out;
  const std::size_t n = v.size();
  if (n == 0) return out;
  out.mean = pairwise_sum(v) / static_cast<double>(n);
  if (n == 1) return out;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = v[i] - out.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
  out.std_error = std::sqrt(var / static_cast<double>(n));
  return out;
}

}  // namespace glint::detail

#endif  // GLINT_DETAIL_SUMMATION_HPP
