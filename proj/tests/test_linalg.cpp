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

#include <cmath>
#include <random>

#include "doctest.h"

namespace {

using glint::Complex;
using glint::ComplexMatrix;

ComplexMatrix random_complex(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex{u(eng), u(eng)};
  return m;
}

double rel_err(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace

TEST_CASE("permanent of identity and all-ones matrices") {
  ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  CHECK(std::abs(glint::permanent(id) - Complex{1.0, 0.0}) < 1e-14);

  ComplexMatrix ones = ComplexMatrix::Ones(3, 3);
  CHECK(std::abs(glint::permanent(ones) - Complex{6.0, 0.0}) < 1e-12);
}

TEST_CASE("permanent_naive basics") {
  ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  CHECK(std::abs(glint::permanent_naive(id) - Complex{1.0, 0.0}) < 1e-15);

  ComplexMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  CHECK(std::abs(glint::permanent_naive(swap) - Complex{1.0, 0.0}) < 1e-15);

  ComplexMatrix ones = ComplexMatrix::Ones(4, 4);
  CHECK(std::abs(glint::permanent_naive(ones) - Complex{24.0, 0.0}) < 1e-12);

  ComplexMatrix big = ComplexMatrix::Identity(10, 10);
  CHECK_THROWS_AS(glint::permanent_naive(big), glint::SizeError);
}

TEST_CASE("glynn and ryser match the naive permanent on random input") {
  for (int n = 1; n <= 8; ++n) {
    ComplexMatrix m = random_complex(n, 1000 + n);
    const Complex want = glint::permanent_naive(m);
    const Complex glynn = glint::permanent(m, glint::PermanentAlgo::Glynn);
    const Complex ryser = glint::permanent(m, glint::PermanentAlgo::Ryser);
    CHECK(rel_err(glynn, want) < 1e-12);
    CHECK(rel_err(ryser, want) < 1e-12);
  }
}

TEST_CASE("permanent rejects bad shapes") {
  ComplexMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(glint::permanent(rect), glint::DimensionError);

  ComplexMatrix bad(2, 2);
  bad << 1.0, 0.0, 0.0, std::nan("");
  CHECK_THROWS_AS(glint::permanent(bad), glint::ValidationError);
}

TEST_CASE("permanent of a matrix with a zero row vanishes") {
  for (int n = 2; n <= 6; ++n) {
    ComplexMatrix m = random_complex(n, 2000 + n);
    m.row(n / 2).setZero();
    CHECK(std::abs(glint::permanent(m)) < 1e-12);
  }
}

TEST_CASE("permanent is invariant under row and column permutations") {
  std::mt19937_64 eng(77);
  for (int n = 2; n <= 6; ++n) {
    ComplexMatrix m = random_complex(n, 3000 + n);
    const Complex want = glint::permanent(m);

    std::vector<int> rows(n), cols(n);
    for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
    std::shuffle(rows.begin(), rows.end(), eng);
    std::shuffle(cols.begin(), cols.end(), eng);
    ComplexMatrix shuffled(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) shuffled(i, j) = m(rows[i], cols[j]);

    CHECK(rel_err(glint::permanent(shuffled), want) < 1e-12);
  }
}

TEST_CASE("haar_unitary satisfies the unitarity bound") {
  for (int m : {1, 2, 4, 8, 16, 32}) {
    const auto u = glint::haar_unitary(m, 42);
    CHECK(u.residual() <= 1e-10);
    CHECK(glint::unitarity_residual(u.mat()) <= 1e-10);
  }
}

TEST_CASE("haar_unitary m=1 yields a unit-modulus scalar") {
  const auto u = glint::haar_unitary(1, 7);
  CHECK(std::abs(std::abs(u.mat()(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("haar_unitary is deterministic in the seed") {
  const auto a = glint::haar_unitary(6, 42);
  const auto b = glint::haar_unitary(6, 42);
  const auto c = glint::haar_unitary(6, 43);
  CHECK((a.mat() - b.mat()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.mat() - c.mat()).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("unitary validation rejects non-unitary input") {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 0) = 1.5;
  CHECK_THROWS_AS(glint::UnitaryMatrix{m}, glint::ValidationError);
}

TEST_CASE("beam splitter is balanced and unitary") {
  const auto bs = glint::beam_splitter_50_50();
  CHECK(bs.dim() == 2);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(std::abs(bs.mat()(i, j)) - s) < 1e-15);
  CHECK(bs.residual() <= 1e-15);
}

TEST_CASE("circulant determinant closed form") {
  // 1x1: the determinant is the single generator entry.
  CHECK(glint::circulant_det({1, {3.25}}) == doctest::Approx(3.25));

  // 2x2 with the merged off-diagonal entry used by the purity matrices:
  // det [[a0, a1], [a1, a0]] = (a0 - a1)(a0 + a1).
  const double eta = 0.1;
  const double a0 = 1.0 + 2.0 * eta * eta;
  glint::CirculantSpec two{2, {a0, -2.0 * eta * eta}};
  CHECK(glint::circulant_det(two) == doctest::Approx(1.0 + 4.0 * eta * eta).epsilon(1e-14));
}

TEST_CASE("circulant determinant matches a dense LU determinant") {
  auto dense_det = [](const glint::CirculantSpec& spec) {
    const int n = spec.n;
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = spec.a[((c - r) % n + n) % n];
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
  };

  // The nearest-neighbor generator produced by the purity quadratic form.
  const double eta = 0.1;
  glint::CirculantSpec purity5{5, {1.0 + 2 * eta * eta, -eta * eta, 0.0, 0.0, -eta * eta}};
  CHECK(glint::circulant_det(purity5) ==
        doctest::Approx(dense_det(purity5)).epsilon(1e-12));

  // Random diagonally dominant generators up to n = 12.
  std::mt19937_64 eng(99);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int n = 1; n <= 12; ++n) {
    glint::CirculantSpec spec{n, std::vector<double>(n)};
    spec.a[0] = 2.0 + u(eng);
    for (int k = 1; k < n; ++k) spec.a[k] = u(eng);
    const double want = dense_det(spec);
    CHECK(glint::circulant_det(spec) == doctest::Approx(want).epsilon(1e-10));
  }
}
