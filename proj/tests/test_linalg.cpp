// Copyright 2026 The qclone authors
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

#include "qclone/eigen.hpp"
#include "qclone/linalg.hpp"
#include "qclone/rng.hpp"

#include "gtest/gtest.h"

using namespace qclone;

namespace {

Matrix random_hermitian(std::size_t n, Rng &rng) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = rng.gaussian_complex();
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

} // namespace

TEST(matrix, product_and_adjoint) {
  Matrix a(2, 3);
  a(0, 0) = {1, 1};
  a(0, 2) = {0, -2};
  a(1, 1) = 3.0;
  Matrix b = a.adjoint();
  EXPECT_EQ(b.rows(), 3u);
  EXPECT_EQ(b(0, 0), cxd(1, -1));
  EXPECT_EQ(b(2, 0), cxd(0, 2));

  Matrix p = a * b; // 2x2, Hermitian by construction
  EXPECT_LT(p.hermiticity_defect(), 1e-15);
  EXPECT_NEAR(p(0, 0).real(), 2.0 + 4.0, 1e-15);
}

TEST(eigh, two_by_two_analytic) {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  Matrix h(2, 2);
  h(0, 0) = 2.0;
  h(1, 1) = 2.0;
  h(0, 1) = {0, 1};
  h(1, 0) = {0, -1};
  auto es = eigh(h);
  ASSERT_EQ(es.values.size(), 2u);
  EXPECT_NEAR(es.values[0], 1.0, 1e-12);
  EXPECT_NEAR(es.values[1], 3.0, 1e-12);
}

TEST(eigh, diagonal_passthrough) {
  Matrix h(3, 3);
  h(0, 0) = 5.0;
  h(1, 1) = -2.0;
  h(2, 2) = 0.5;
  auto es = eigh(h);
  EXPECT_NEAR(es.values[0], -2.0, 1e-14);
  EXPECT_NEAR(es.values[1], 0.5, 1e-14);
  EXPECT_NEAR(es.values[2], 5.0, 1e-14);
}

TEST(eigh, reconstruction_random) {
  Rng rng(11);
  for (std::size_t n : {4u, 9u, 16u, 40u}) {
    Matrix h = random_hermitian(n, rng);
    auto es = eigh(h);
    // V Lambda V^dagger == H
    Matrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i)
      lam(i, i) = es.values[i];
    Matrix rec = es.vectors * lam * es.vectors.adjoint();
    EXPECT_LT((rec - h).max_abs(), 1e-10 * std::max(1.0, h.max_abs()));
    // columns orthonormal
    Matrix g = es.vectors.adjoint() * es.vectors;
    EXPECT_LT((g - Matrix::identity(n)).max_abs(), 1e-11);
    // ascending order
    for (std::size_t i = 1; i < n; ++i)
      EXPECT_LE(es.values[i - 1], es.values[i] + 1e-14);
  }
}

TEST(eigh, rejects_non_hermitian) {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eigh(m), std::invalid_argument);
}

TEST(rng, deterministic_per_seed) {
  Rng a(123), b(123), c(124);
  for (int i = 0; i < 100; ++i) {
    const double va = a.uniform();
    EXPECT_EQ(va, b.uniform());
    EXPECT_GE(va, 0.0);
    EXPECT_LT(va, 1.0);
  }
  bool differs = false;
  Rng a2(123);
  for (int i = 0; i < 10; ++i)
    differs |= (a2.uniform() != c.uniform());
  EXPECT_TRUE(differs);
}

TEST(rng, gaussian_moments) {
  Rng rng(7);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sum2 += g * g;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.02);
  EXPECT_NEAR(sum2 / n, 1.0, 0.02);
}

TEST(rng, fork_streams_independent) {
  Rng base(42);
  Rng s0 = base.fork(0);
  Rng s1 = base.fork(1);
  Rng s0_again = Rng(42).fork(0);
  EXPECT_EQ(s0.uniform(), s0_again.uniform());
  EXPECT_NE(s0.uniform(), s1.uniform());
}
