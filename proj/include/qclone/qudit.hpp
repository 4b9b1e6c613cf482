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

#ifndef QCLONE_QUDIT_HPP
#define QCLONE_QUDIT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "qclone/eigen.hpp"
#include "qclone/linalg.hpp"
#include "qclone/rng.hpp"

namespace qclone {

//! Levels per qudit. Every register carries one.
struct Dim {
  int value;
  explicit Dim(int d) : value(d) {
    if (d < 2)
      throw std::invalid_argument("qudit dimension must be at least 2");
  }
  friend bool operator==(Dim a, Dim b) { return a.value == b.value; }
};

//=========================================================================
// Register: an ordered set of labeled qudits. Amplitude indexing is
// big-endian in register order (first label = most significant digit).
//=========================================================================

class Register {
public:
  Register(Dim d, std::vector<std::string> labels)
      : d_(d), labels_(std::move(labels)) {
    std::unordered_set<std::string> seen;
    for (const auto &l : labels_)
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate qudit label: " + l);
    dim_ = 1;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      dim_ *= static_cast<std::size_t>(d_.value);
  }

  Dim d() const { return d_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string> &labels() const { return labels_; }

  bool contains(const std::string &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
  }

  std::size_t position(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
      throw std::invalid_argument("unknown qudit label: " + label);
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t encode(std::span<const int> digits) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
      idx = idx * static_cast<std::size_t>(d_.value) +
            static_cast<std::size_t>(digits[i]);
    return idx;
  }

  void decode(std::size_t index, std::span<int> digits) const {
    for (std::size_t i = labels_.size(); i-- > 0;) {
      digits[i] = static_cast<int>(index % static_cast<std::size_t>(d_.value));
      index /= static_cast<std::size_t>(d_.value);
    }
  }

  friend bool operator==(const Register &a, const Register &b) {
    return a.d_ == b.d_ && a.labels_ == b.labels_;
  }

private:
  Dim d_;
  std::vector<std::string> labels_;
  std::size_t dim_;
};

//=========================================================================
// StateVector / Operator over a register.
//=========================================================================

class StateVector {
public:
  StateVector(Register reg, std::vector<cxd> amplitudes)
      : reg_(std::move(reg)), amp_(std::move(amplitudes)) {
    if (amp_.size() != reg_.dim())
      throw std::invalid_argument("amplitude count does not match register");
  }

  static StateVector zero(const Register &reg) {
    return StateVector(reg, std::vector<cxd>(reg.dim(), cxd(0.0, 0.0)));
  }

  static StateVector basis(const Register &reg, std::size_t index) {
    StateVector s = zero(reg);
    s.amp_[index] = 1.0;
    return s;
  }

  const Register &reg() const { return reg_; }
  const std::vector<cxd> &amplitudes() const { return amp_; }
  std::vector<cxd> &amplitudes() { return amp_; }
  cxd &operator[](std::size_t i) { return amp_[i]; }
  const cxd &operator[](std::size_t i) const { return amp_[i]; }

  double norm_squared() const { return norm2(amp_); }
  double norm() const { return std::sqrt(norm_squared()); }

  StateVector scaled(cxd s) const {
    StateVector out = *this;
    for (auto &a : out.amp_)
      a *= s;
    return out;
  }

  StateVector normalized() const {
    const double n = norm();
    if (n == 0.0)
      throw std::invalid_argument("cannot normalize the zero vector");
    return scaled(1.0 / n);
  }

  StateVector &operator+=(const StateVector &o) {
    if (!(reg_ == o.reg_))
      throw std::invalid_argument("state register mismatch");
    for (std::size_t k = 0; k < amp_.size(); ++k)
      amp_[k] += o.amp_[k];
    return *this;
  }
  friend StateVector operator+(StateVector a, const StateVector &b) {
    return a += b;
  }

  friend cxd inner(const StateVector &a, const StateVector &b) {
    if (!(a.reg_ == b.reg_))
      throw std::invalid_argument("state register mismatch");
    return inner(a.amp_, b.amp_);
  }

private:
  Register reg_;
  std::vector<cxd> amp_;
};

class Operator {
public:
  Operator(Register reg, Matrix m) : reg_(std::move(reg)), m_(std::move(m)) {
    if (m_.rows() != reg_.dim() || m_.cols() != reg_.dim())
      throw std::invalid_argument("operator shape does not match register");
  }

  static Operator identity(const Register &reg) {
    return Operator(reg, Matrix::identity(reg.dim()));
  }

  const Register &reg() const { return reg_; }
  const Matrix &matrix() const { return m_; }
  Matrix &matrix() { return m_; }

  cxd trace() const { return m_.trace(); }
  double hermiticity_defect() const { return m_.hermiticity_defect(); }

  double unitarity_defect() const {
    Matrix p = m_.adjoint() * m_;
    return (p - Matrix::identity(reg_.dim())).max_abs();
  }

  // Real expectation <psi|M|psi>; asserts nothing about hermiticity.
  cxd expectation(const StateVector &psi) const {
    if (!(psi.reg() == reg_))
      throw std::invalid_argument("state register mismatch");
    return inner(psi.amplitudes(), m_.apply(psi.amplitudes()));
  }

  Operator &operator+=(const Operator &o) {
    if (!(reg_ == o.reg_))
      throw std::invalid_argument("operator register mismatch");
    m_ += o.m_;
    return *this;
  }
  friend Operator operator+(Operator a, const Operator &b) { return a += b; }
  friend Operator operator*(const Operator &a, const Operator &b) {
    if (!(a.reg_ == b.reg_))
      throw std::invalid_argument("operator register mismatch");
    return Operator(a.reg_, a.m_ * b.m_);
  }
  friend Operator operator*(cxd s, Operator a) {
    a.m_ *= s;
    return a;
  }

private:
  Register reg_;
  Matrix m_;
};

//=========================================================================
// Construction helpers.
//=========================================================================

//! Subnormalized maximally entangled pair: sum_n |nn>, squared norm d.
inline StateVector max_entangled(Dim d, const std::string &label_a,
                                 const std::string &label_b) {
  Register reg(d, {label_a, label_b});
  StateVector s = StateVector::zero(reg);
  const std::size_t dd = static_cast<std::size_t>(d.value);
  for (std::size_t n = 0; n < dd; ++n)
    s[n * dd + n] = 1.0;
  return s;
}

inline Operator projector(const StateVector &s) {
  const std::size_t n = s.reg().dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const cxd ai = s[i];
    if (ai == cxd(0.0, 0.0))
      continue;
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = ai * std::conj(s[j]);
  }
  return Operator(s.reg(), std::move(m));
}

//! Cyclic shift on the acting labels, identity elsewhere:
//! |n1,n2,...,nk> -> |n2,...,nk,n1>.
inline Operator cyclic_perm(Dim d, const std::vector<std::string> &acting,
                            const Register &full) {
  if (!(full.d() == d))
    throw std::invalid_argument("cyclic_perm dimension mismatch");
  std::vector<std::size_t> pos(acting.size());
  for (std::size_t i = 0; i < acting.size(); ++i)
    pos[i] = full.position(acting[i]);
  const std::size_t n = full.dim();
  Matrix m(n, n);
  std::vector<int> digits(full.size());
  for (std::size_t col = 0; col < n; ++col) {
    full.decode(col, digits);
    std::vector<int> out = digits;
    for (std::size_t i = 0; i < pos.size(); ++i)
      out[pos[i]] = digits[pos[(i + 1) % pos.size()]];
    m(full.encode(out), col) = 1.0;
  }
  return Operator(full, std::move(m));
}

//! Same shift applied directly to a state; avoids materializing the matrix.
inline StateVector cyclic_shift_state(const StateVector &s,
                                      const std::vector<std::string> &acting,
                                      int power = 1) {
  const Register &reg = s.reg();
  std::vector<std::size_t> pos(acting.size());
  for (std::size_t i = 0; i < acting.size(); ++i)
    pos[i] = reg.position(acting[i]);
  const int k = static_cast<int>(acting.size());
  const int shift = ((power % k) + k) % k;
  StateVector out = StateVector::zero(reg);
  std::vector<int> digits(reg.size());
  std::vector<int> moved(reg.size());
  for (std::size_t idx = 0; idx < reg.dim(); ++idx) {
    const cxd a = s[idx];
    if (a == cxd(0.0, 0.0))
      continue;
    reg.decode(idx, digits);
    moved = digits;
    for (std::size_t i = 0; i < pos.size(); ++i)
      moved[pos[i]] = digits[pos[(i + shift) % pos.size()]];
    out[reg.encode(moved)] += a;
  }
  return out;
}

//! P_a = (1/N) sum_k w^{ka} X^k with w = exp(2 pi i / N); Hermitian idempotent.
inline Operator projector_cyclic(Dim d, int n_qudits, int a) {
  if (a < 0 || a >= n_qudits)
    throw std::invalid_argument("cyclic projector index out of range");
  std::vector<std::string> labels;
  for (int i = 1; i <= n_qudits; ++i)
    labels.push_back(std::to_string(i));
  Register reg(d, labels);
  Operator x = cyclic_perm(d, labels, reg);
  Operator xk = Operator::identity(reg);
  Matrix acc(reg.dim(), reg.dim());
  const double two_pi = 2.0 * 3.14159265358979323846;
  for (int k = 0; k < n_qudits; ++k) {
    const double ang = two_pi * k * a / n_qudits;
    acc += cxd(std::cos(ang), std::sin(ang)) * xk.matrix();
    xk = xk * x;
  }
  acc *= cxd(1.0 / n_qudits, 0.0);
  return Operator(reg, std::move(acc));
}

namespace detail {

inline void symmetric_tuples(int d, int m, std::vector<int> &tuple,
                             std::vector<std::vector<int>> &out, int min_digit) {
  if (static_cast<int>(tuple.size()) == m) {
    out.push_back(tuple);
    return;
  }
  for (int v = min_digit; v < d; ++v) {
    tuple.push_back(v);
    symmetric_tuples(d, m, tuple, out, v);
    tuple.pop_back();
  }
}

} // namespace detail

//! Orthonormal basis of the symmetric subspace of m qudits;
//! binom(d+m-1, m) states, each a normalized permutation sum.
inline std::vector<StateVector> symmetric_basis(Dim d, int m,
                                                const Register &reg) {
  if (static_cast<int>(reg.size()) != m || !(reg.d() == d))
    throw std::invalid_argument("register does not match symmetric basis request");
  std::vector<std::vector<int>> tuples;
  std::vector<int> scratch;
  detail::symmetric_tuples(d.value, m, scratch, tuples, 0);
  std::vector<StateVector> basis;
  basis.reserve(tuples.size());
  for (const auto &t : tuples) {
    StateVector s = StateVector::zero(reg);
    std::vector<int> perm = t;
    std::sort(perm.begin(), perm.end());
    std::size_t count = 0;
    do {
      s[reg.encode(perm)] += 1.0;
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    basis.push_back(s.scaled(1.0 / std::sqrt(static_cast<double>(count))));
  }
  return basis;
}

inline std::vector<StateVector> symmetric_basis(Dim d, int m) {
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i)
    labels.push_back(std::to_string(i));
  return symmetric_basis(d, m, Register(d, labels));
}

//=========================================================================
// Multilinear assembly: tensor, embed, partial trace.
//=========================================================================

inline StateVector tensor(const StateVector &a, const StateVector &b) {
  for (const auto &l : b.reg().labels())
    if (a.reg().contains(l))
      throw std::invalid_argument("tensor label collision: " + l);
  std::vector<std::string> labels = a.reg().labels();
  labels.insert(labels.end(), b.reg().labels().begin(), b.reg().labels().end());
  Register reg(a.reg().d(), labels);
  StateVector out = StateVector::zero(reg);
  const std::size_t nb = b.reg().dim();
  for (std::size_t i = 0; i < a.reg().dim(); ++i) {
    if (a[i] == cxd(0.0, 0.0))
      continue;
    for (std::size_t j = 0; j < nb; ++j)
      out[i * nb + j] = a[i] * b[j];
  }
  return out;
}

inline Operator tensor(const Operator &a, const Operator &b) {
  for (const auto &l : b.reg().labels())
    if (a.reg().contains(l))
      throw std::invalid_argument("tensor label collision: " + l);
  std::vector<std::string> labels = a.reg().labels();
  labels.insert(labels.end(), b.reg().labels().begin(), b.reg().labels().end());
  Register reg(a.reg().d(), labels);
  const std::size_t na = a.reg().dim(), nb = b.reg().dim();
  Matrix m(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cxd aij = a.matrix()(i, j);
      if (aij == cxd(0.0, 0.0))
        continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          m(i * nb + k, j * nb + l) = aij * b.matrix()(k, l);
    }
  return Operator(reg, std::move(m));
}

//! Lift an operator onto a larger register (identity on the other labels).
inline Operator embed(const Operator &op, const Register &full) {
  const Register &sub = op.reg();
  std::vector<std::size_t> pos(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i)
    pos[i] = full.position(sub.labels()[i]);
  const std::size_t n = full.dim();
  Matrix m(n, n);
  std::vector<int> row_digits(full.size()), col_digits(full.size());
  std::vector<int> sub_row(sub.size()), sub_col(sub.size());

  // Iterate rest-space blocks: indices sharing the same digits off the
  // embedded positions connect exactly like the small operator.
  std::vector<std::size_t> rest_pos;
  for (std::size_t i = 0; i < full.size(); ++i)
    if (std::find(pos.begin(), pos.end(), i) == pos.end())
      rest_pos.push_back(i);
  const int d = full.d().value;
  std::size_t rest_dim = 1;
  for (std::size_t i = 0; i < rest_pos.size(); ++i)
    rest_dim *= static_cast<std::size_t>(d);

  std::vector<int> digits(full.size(), 0);
  for (std::size_t rest = 0; rest < rest_dim; ++rest) {
    std::size_t r = rest;
    for (std::size_t i = rest_pos.size(); i-- > 0;) {
      digits[rest_pos[i]] = static_cast<int>(r % d);
      r /= d;
    }
    for (std::size_t si = 0; si < sub.dim(); ++si) {
      sub.decode(si, sub_row);
      row_digits = digits;
      for (std::size_t k = 0; k < pos.size(); ++k)
        row_digits[pos[k]] = sub_row[k];
      const std::size_t row = full.encode(row_digits);
      for (std::size_t sj = 0; sj < sub.dim(); ++sj) {
        const cxd v = op.matrix()(si, sj);
        if (v == cxd(0.0, 0.0))
          continue;
        sub.decode(sj, sub_col);
        col_digits = digits;
        for (std::size_t k = 0; k < pos.size(); ++k)
          col_digits[pos[k]] = sub_col[k];
        m(row, full.encode(col_digits)) = v;
      }
    }
  }
  return Operator(full, std::move(m));
}

inline StateVector apply_operator(const Operator &op, const StateVector &s) {
  if (op.reg() == s.reg())
    return StateVector(s.reg(), op.matrix().apply(s.amplitudes()));
  return StateVector(s.reg(), embed(op, s.reg()).matrix().apply(s.amplitudes()));
}

namespace detail {

struct SplitIndex {
  std::vector<std::size_t> keep_pos, drop_pos;
  std::size_t keep_dim = 1, drop_dim = 1;
};

inline SplitIndex split_register(const Register &reg,
                                 const std::vector<std::string> &keep) {
  SplitIndex s;
  for (const auto &l : keep)
    s.keep_pos.push_back(reg.position(l));
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (std::find(s.keep_pos.begin(), s.keep_pos.end(), i) == s.keep_pos.end())
      s.drop_pos.push_back(i);
  const std::size_t d = static_cast<std::size_t>(reg.d().value);
  for (std::size_t i = 0; i < s.keep_pos.size(); ++i)
    s.keep_dim *= d;
  for (std::size_t i = 0; i < s.drop_pos.size(); ++i)
    s.drop_dim *= d;
  return s;
}

inline void split_index(const Register &reg, const SplitIndex &sp,
                        std::size_t index, std::size_t &keep_idx,
                        std::size_t &drop_idx, std::vector<int> &scratch) {
  reg.decode(index, scratch);
  keep_idx = 0;
  for (std::size_t p : sp.keep_pos)
    keep_idx = keep_idx * reg.d().value + static_cast<std::size_t>(scratch[p]);
  drop_idx = 0;
  for (std::size_t p : sp.drop_pos)
    drop_idx = drop_idx * reg.d().value + static_cast<std::size_t>(scratch[p]);
}

} // namespace detail

//! Trace out every label not in `keep`; trace preserving and linear.
inline Operator partial_trace(const Operator &op,
                              const std::vector<std::string> &keep) {
  const Register &reg = op.reg();
  auto sp = detail::split_register(reg, keep);
  Register out_reg(reg.d(), keep);
  Matrix m(sp.keep_dim, sp.keep_dim);

  // Map every full index to its (keep, drop) pair once.
  std::vector<std::size_t> keep_of(reg.dim()), drop_of(reg.dim());
  std::vector<int> scratch(reg.size());
  for (std::size_t i = 0; i < reg.dim(); ++i)
    detail::split_index(reg, sp, i, keep_of[i], drop_of[i], scratch);

  std::vector<std::size_t> index_of(sp.keep_dim * sp.drop_dim);
  for (std::size_t i = 0; i < reg.dim(); ++i)
    index_of[keep_of[i] * sp.drop_dim + drop_of[i]] = i;

  for (std::size_t ki = 0; ki < sp.keep_dim; ++ki)
    for (std::size_t kj = 0; kj < sp.keep_dim; ++kj) {
      cxd s = 0.0;
      for (std::size_t t = 0; t < sp.drop_dim; ++t)
        s += op.matrix()(index_of[ki * sp.drop_dim + t],
                         index_of[kj * sp.drop_dim + t]);
      m(ki, kj) = s;
    }
  return Operator(out_reg, std::move(m));
}

//! Partial trace of |psi><psi| without forming the full projector.
inline Operator partial_trace_pure(const StateVector &psi,
                                   const std::vector<std::string> &keep) {
  const Register &reg = psi.reg();
  auto sp = detail::split_register(reg, keep);
  Register out_reg(reg.d(), keep);

  // Reshape psi into a keep x drop matrix, then rho = M M^dagger.
  Matrix reshaped(sp.keep_dim, sp.drop_dim);
  std::vector<int> scratch(reg.size());
  for (std::size_t i = 0; i < reg.dim(); ++i) {
    std::size_t ki, di;
    detail::split_index(reg, sp, i, ki, di, scratch);
    reshaped(ki, di) = psi[i];
  }
  Matrix rho(sp.keep_dim, sp.keep_dim);
  for (std::size_t i = 0; i < sp.keep_dim; ++i)
    for (std::size_t j = 0; j < sp.keep_dim; ++j) {
      cxd s = 0.0;
      for (std::size_t t = 0; t < sp.drop_dim; ++t)
        s += reshaped(i, t) * std::conj(reshaped(j, t));
      rho(i, j) = s;
    }
  return Operator(out_reg, std::move(rho));
}

//=========================================================================
// Haar sampling: complex Gaussian amplitudes, then normalize.
//=========================================================================

inline StateVector haar_state(const Register &reg, Rng &rng) {
  std::vector<cxd> amp(reg.dim());
  for (auto &a : amp)
    a = rng.gaussian_complex();
  return StateVector(reg, std::move(amp)).normalized();
}

inline StateVector haar_state(const Register &reg, std::uint64_t seed) {
  Rng rng(seed);
  return haar_state(reg, rng);
}

//! Haar state inside span(basis): Gaussian coefficients in that basis.
inline StateVector haar_state_in_span(const std::vector<StateVector> &basis,
                                      Rng &rng) {
  if (basis.empty())
    throw std::invalid_argument("empty basis for subspace sampling");
  StateVector s = StateVector::zero(basis.front().reg());
  for (const auto &b : basis) {
    const cxd c = rng.gaussian_complex();
    for (std::size_t k = 0; k < s.amplitudes().size(); ++k)
      s[k] += c * b[k];
  }
  return s.normalized();
}

} // namespace qclone

#endif // QCLONE_QUDIT_HPP
