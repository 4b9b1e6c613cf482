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

#ifndef QCLONE_EIGEN_HPP
#define QCLONE_EIGEN_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qclone/linalg.hpp"

namespace qclone {

//=========================================================================
// Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
// Robustness over speed: the matrices here stay below ~750 dimensions.
//=========================================================================

struct EigenSystem {
  std::vector<double> values; // ascending
  Matrix vectors;             // columns; empty when not requested
};

namespace detail {

inline double offdiagonal_norm(const Matrix &h) {
  const std::size_t n = h.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      s += std::norm(h(i, j));
  return std::sqrt(2.0 * s);
}

} // namespace detail

// Diagonalize a Hermitian matrix. Convergence: off-diagonal Frobenius norm
// below tol * max(1, ||H||_F). Throws if the input is visibly non-Hermitian.
inline EigenSystem eigh(const Matrix &h_in, bool want_vectors = true,
                        double tol = 1e-12) {
  const std::size_t n = h_in.rows();
  if (n != h_in.cols())
    throw std::invalid_argument("eigh: matrix not square");
  if (h_in.hermiticity_defect() > 1e-10 * std::max(1.0, h_in.max_abs()))
    throw std::invalid_argument("eigh: matrix not Hermitian");

  Matrix h = h_in;
  // Symmetrize round-off so the invariants below hold exactly.
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = cxd(h(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cxd m = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = m;
      h(j, i) = std::conj(m);
    }
  }

  Matrix v = want_vectors ? Matrix::identity(n) : Matrix();
  const double scale = std::max(1.0, h.frobenius_norm());
  const double threshold = tol * scale;

  const int max_sweeps = 64;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    const double off = detail::offdiagonal_norm(h);
    if (off <= threshold)
      break;
    // Rotate only entries that still matter this sweep.
    const double skip = off / (n * n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cxd apq = h(p, q);
        const double r = std::abs(apq);
        if (r <= skip * 1e-3 || r == 0.0)
          continue;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const cxd u = apq / r; // phase of the pivot
        const double tau = (aqq - app) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cxd su = s * std::conj(u);

        // Columns p and q of H and the accumulated basis get the plane
        // rotation G with G[p][p]=c, G[q][p]=-s*conj(u), G[p][q]=s, G[q][q]=c*conj(u).
        for (std::size_t j = 0; j < n; ++j) {
          const cxd hjp = h(j, p);
          const cxd hjq = h(j, q);
          h(j, p) = c * hjp - su * hjq;
          h(j, q) = s * hjp + c * std::conj(u) * hjq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          h(p, j) = std::conj(h(j, p));
          h(q, j) = std::conj(h(j, q));
        }
        h(p, p) = cxd(app - t * r, 0.0);
        h(q, q) = cxd(aqq + t * r, 0.0);
        h(p, q) = cxd(0.0, 0.0);
        h(q, p) = cxd(0.0, 0.0);
        if (want_vectors) {
          for (std::size_t j = 0; j < n; ++j) {
            const cxd vjp = v(j, p);
            const cxd vjq = v(j, q);
            v(j, p) = c * vjp - su * vjq;
            v(j, q) = s * vjp + c * std::conj(u) * vjq;
          }
        }
      }
    }
  }
  if (sweep == max_sweeps)
    throw std::runtime_error("eigh: Jacobi sweeps did not converge");

  EigenSystem out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.values[i] = h(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.values[a] < out.values[b];
  });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i)
    sorted[i] = out.values[order[i]];
  out.values = std::move(sorted);
  if (want_vectors) {
    out.vectors = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

inline double eig_max(const Matrix &h) {
  return eigh(h, /*want_vectors=*/false).values.back();
}

inline double eig_min(const Matrix &h) {
  return eigh(h, /*want_vectors=*/false).values.front();
}

} // namespace qclone

#endif // QCLONE_EIGEN_HPP
