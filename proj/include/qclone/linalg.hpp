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

#ifndef QCLONE_LINALG_HPP
#define QCLONE_LINALG_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qclone {

using cxd = std::complex<double>;

//=========================================================================
// Dense complex matrix, row major. Sized for registers of at most a few
// hundred dimensions; no sparse machinery on purpose.
//=========================================================================

class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cxd(0.0, 0.0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cxd &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cxd &operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  cxd *data() { return a_.data(); }
  const cxd *data() const { return a_.data(); }

  Matrix adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(j, i) = (*this)(i, j);
    return m;
  }

  cxd trace() const {
    if (rows_ != cols_)
      throw std::invalid_argument("trace of non-square matrix");
    cxd t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto &v : a_)
      m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto &v : a_)
      s += std::norm(v);
    return std::sqrt(s);
  }

  // Largest |entry| of M - M^dagger; zero for exactly Hermitian input.
  double hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

  Matrix &operator+=(const Matrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      a_[k] += o.a_[k];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      a_[k] -= o.a_[k];
    return *this;
  }
  Matrix &operator*=(cxd s) {
    for (auto &v : a_)
      v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, cxd s) { return a *= s; }
  friend Matrix operator*(cxd s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cxd aik = a(i, k);
        if (aik == cxd(0.0, 0.0))
          continue;
        const cxd *brow = b.data() + k * b.cols_;
        cxd *crow = c.data() + i * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j)
          crow[j] += aik * brow[j];
      }
    return c;
  }

  std::vector<cxd> apply(const std::vector<cxd> &v) const {
    if (cols_ != v.size())
      throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<cxd> r(rows_, cxd(0.0, 0.0));
    for (std::size_t i = 0; i < rows_; ++i) {
      cxd s = 0.0;
      const cxd *row = data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        s += row[j] * v[j];
      r[i] = s;
    }
    return r;
  }

private:
  void check_same_shape(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<cxd> a_;
};

inline cxd inner(const std::vector<cxd> &a, const std::vector<cxd> &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("inner product length mismatch");
  cxd s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    s += std::conj(a[k]) * b[k];
  return s;
}

inline double norm2(const std::vector<cxd> &a) {
  double s = 0.0;
  for (const auto &v : a)
    s += std::norm(v);
  return s;
}

} // namespace qclone

#endif // QCLONE_LINALG_HPP
