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

#include "glint/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace glint {

void check_matrix(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw DimensionError("matrix must have at least one row and one column");
  }
  if (!m.allFinite()) {
    throw ValidationError("matrix has non-finite entries");
  }
}

double unitarity_residual(const ComplexMatrix& m) {
  ComplexMatrix d = m.adjoint() * m;
  d.diagonal().array() -= 1.0;
  return d.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {
  check_matrix(m_);
  if (m_.rows() != m_.cols()) {
    throw DimensionError("unitary matrix must be square");
  }
  residual_ = unitarity_residual(m_);
  if (residual_ > residual_tolerance()) {
    throw ValidationError("matrix fails unitarity check: residual " +
                          std::to_string(residual_) + " exceeds 1e-10");
  }
}

namespace {

void check_square(const ComplexMatrix& m) {
  check_matrix(m);
  if (m.rows() != m.cols()) {
    throw DimensionError("permanent requires a square matrix");
  }
}

// Glynn's formula: per(A) = 2^{1-n} sum over delta in {+1,-1}^n, delta_0 = +1,
// of (prod_k delta_k) * prod_j (sum_k delta_k A_{kj}).
// Deltas walk a Gray code so each step updates the column sums with one row.
Complex permanent_glynn(const ComplexMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Complex> colsum(n);
  for (int j = 0; j < n; ++j) {
    Complex s = 0.0;
    for (int i = 0; i < n; ++i) s += a(i, j);
    colsum[j] = s;
  }
  auto product = [&]() {
    Complex p = 1.0;
    for (int j = 0; j < n; ++j) p *= colsum[j];
    return p;
  };
  Complex total = product();
  double sign = 1.0;
  std::uint64_t gray = 0;
  const std::uint64_t steps = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ next;
    const int bit = std::countr_zero(diff);
    const int row = bit + 1;  // delta_0 stays +1 throughout
    const double delta = (next & diff) ? -2.0 : 2.0;
    for (int j = 0; j < n; ++j) colsum[j] += delta * a(row, j);
    gray = next;
    sign = -sign;
    total += sign * product();
  }
  return total * std::ldexp(1.0, -(n - 1));
}

// Ryser's formula with subset Gray codes:
// per(A) = (-1)^n sum over nonempty column subsets S of
//          (-1)^{|S|} prod_i (sum_{j in S} A_{ij}).
Complex permanent_ryser(const ComplexMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Complex> rowsum(n, Complex{0.0, 0.0});
  Complex total = 0.0;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ next;
    const int col = std::countr_zero(diff);
    if (next & diff) {
      for (int i = 0; i < n; ++i) rowsum[i] += a(i, col);
    } else {
      for (int i = 0; i < n; ++i) rowsum[i] -= a(i, col);
    }
    Complex p = 1.0;
    for (int i = 0; i < n; ++i) p *= rowsum[i];
    const int card = std::popcount(next);
    total += ((n - card) & 1) ? -p : p;
    gray = next;
  }
  return total;
}

}  // namespace

Complex permanent(const ComplexMatrix& m, PermanentAlgo algo) {
  check_square(m);
  const int n = static_cast<int>(m.rows());
  if (n > 30) {
    throw SizeError("permanent limited to 30x30 (2^N work)");
  }
  return algo == PermanentAlgo::Glynn ? permanent_glynn(m)
                                      : permanent_ryser(m);
}

Complex permanent_naive(const ComplexMatrix& m) {
  check_square(m);
  const int n = static_cast<int>(m.rows());
  if (n > 9) {
    throw SizeError("permanent_naive limited to 9x9 (N! work)");
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Complex total = 0.0;
  do {
    Complex p = 1.0;
    for (int i = 0; i < n; ++i) p *= m(i, idx[i]);
    total += p;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

UnitaryMatrix haar_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw DimensionError("haar_unitary requires dim >= 1");
  }
  if (dim > 64) {
    throw SizeError("haar_unitary limited to dim <= 64");
  }
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = normal(engine);
      const double im = normal(engine);
      z(i, j) = Complex{re * inv_sqrt2, im * inv_sqrt2};
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  // Fix the gauge: absorb the phases of R's diagonal into Q so the result is
  // Haar-distributed instead of carrying the QR sign convention.
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag == 0.0) {
      throw NumericRangeError("degenerate QR pivot in haar_unitary");
    }
    q.col(j) *= rjj / mag;
  }
  return UnitaryMatrix(std::move(q));
}

UnitaryMatrix beam_splitter_50_50() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m << s, s, s, -s;
  return UnitaryMatrix(std::move(m));
}

double circulant_det(const CirculantSpec& spec) {
  if (spec.n < 1) {
    throw DimensionError("circulant requires n >= 1");
  }
  if (static_cast<int>(spec.a.size()) != spec.n) {
    throw DimensionError("circulant generator size must equal n");
  }
  const int n = spec.n;
  Complex det = 1.0;
  for (int j = 0; j < n; ++j) {
    // Evaluate the generator polynomial at the j-th root of unity.
    Complex f = 0.0;
    for (int k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * j * k / n;
      f += spec.a[k] * std::polar(1.0, angle);
    }
    det *= f;
  }
  return det.real();
}

}  // namespace glint
