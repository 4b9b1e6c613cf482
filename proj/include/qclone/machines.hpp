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

#ifndef QCLONE_MACHINES_HPP
#define QCLONE_MACHINES_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qclone/qudit.hpp"

namespace qclone {

enum class Sign { plus, minus };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

//=========================================================================
// Coefficient algebra for the 1->3 and 1->N machine families.
//=========================================================================

//! Coefficients (alpha, beta, gamma) of a 1->3 machine, normalized so that
//! alpha^2 + beta^2 + gamma^2 +- (2/d)(alpha beta + beta gamma + gamma alpha) = 1.
struct Coeffs3 {
  double alpha, beta, gamma;
  Sign sign;
  Dim d;

  double quadratic_form() const {
    const double cross = alpha * beta + beta * gamma + gamma * alpha;
    return alpha * alpha + beta * beta + gamma * gamma +
           sign_value(sign) * (2.0 / d.value) * cross;
  }
  double normalization_defect() const {
    return std::abs(quadratic_form() - 1.0);
  }
};

//! Coefficients alpha_0..alpha_{N-1} of a 1->N machine, normalized so that
//! sum_a alpha_a^2 + (2/d) sum_{a>b} alpha_a alpha_b = 1.
struct CoeffsN {
  std::vector<double> alphas;
  Dim d;

  int n() const { return static_cast<int>(alphas.size()); }
  double quadratic_form() const {
    double sq = 0.0, sum = 0.0;
    for (double a : alphas) {
      sq += a * a;
      sum += a;
    }
    return sq + (sum * sum - sq) / d.value;
  }
  double normalization_defect() const {
    return std::abs(quadratic_form() - 1.0);
  }
};

inline Coeffs3 normalize_coeffs3(double alpha, double beta, double gamma,
                                 Sign sign, Dim d) {
  Coeffs3 raw{alpha, beta, gamma, sign, d};
  const double q = raw.quadratic_form();
  if (q <= 1e-12)
    throw std::invalid_argument(
        "coefficient direction not normalizable (quadratic form <= 0)");
  const double s = 1.0 / std::sqrt(q);
  return Coeffs3{alpha * s, beta * s, gamma * s, sign, d};
}

inline CoeffsN normalize_coeffsN(std::vector<double> alphas, Dim d) {
  if (alphas.size() < 2)
    throw std::invalid_argument("need at least two outputs");
  CoeffsN raw{std::move(alphas), d};
  const double q = raw.quadratic_form();
  if (q <= 1e-12)
    throw std::invalid_argument(
        "coefficient direction not normalizable (quadratic form <= 0)");
  const double s = 1.0 / std::sqrt(q);
  for (double &a : raw.alphas)
    a *= s;
  return raw;
}

//! Root-fidelity targets x = d a +- (b+c), y = d b +- (a+c), z = d c +- (a+b).
struct RootTargets {
  double x, y, z;
};

inline RootTargets targets_from_coeffs(const Coeffs3 &c) {
  const double s = sign_value(c.sign);
  return RootTargets{c.d.value * c.alpha + s * (c.beta + c.gamma),
                     c.d.value * c.beta + s * (c.alpha + c.gamma),
                     c.d.value * c.gamma + s * (c.beta + c.alpha)};
}

//! x_{a+1} = (d-1) alpha_a + sum_b alpha_b, one target per output.
inline std::vector<double> targets_from_coeffs(const CoeffsN &c) {
  double sum = 0.0;
  for (double a : c.alphas)
    sum += a;
  std::vector<double> x;
  x.reserve(c.alphas.size());
  for (double a : c.alphas)
    x.push_back((c.d.value - 1) * a + sum);
  return x;
}

//! Invert the linear target map, then renormalize onto the coefficient
//! quadric. The minus map (d+1)I - J is singular at d = 2: solvable only
//! for targets with x + y + z = 0.
inline Coeffs3 coeffs_from_targets(const RootTargets &t, Sign sign, Dim d) {
  const double sum = t.x + t.y + t.z;
  double a, b, g;
  if (sign == Sign::plus) {
    // ((d-1)I + J)^-1 = (I - J/(d+2)) / (d-1)
    const double k = sum / (d.value + 2);
    a = (t.x - k) / (d.value - 1);
    b = (t.y - k) / (d.value - 1);
    g = (t.z - k) / (d.value - 1);
  } else if (d.value == 2) {
    if (std::abs(sum) > 1e-9 * (std::abs(t.x) + std::abs(t.y) + std::abs(t.z) + 1.0))
      throw std::invalid_argument(
          "minus-map singular at d=2: target must satisfy x+y+z=0");
    a = t.x / 3.0;
    b = t.y / 3.0;
    g = t.z / 3.0;
  } else {
    // ((d+1)I - J)^-1 = (I + J/(d-2)) / (d+1)
    const double k = sum / (d.value - 2);
    a = (t.x + k) / (d.value + 1);
    b = (t.y + k) / (d.value + 1);
    g = (t.z + k) / (d.value + 1);
  }
  return normalize_coeffs3(a, b, g, sign, d);
}

//=========================================================================
// Cloning machines as isometries. Only the physical input column space is
// represented: column m is the image of |m> (x) |0...0>. Registers are
// ordered outputs first, then ancillas.
//=========================================================================

class CloningMachine {
public:
  CloningMachine(Dim d, std::vector<std::string> outputs,
                 std::vector<std::string> ancillas,
                 std::vector<StateVector> columns, std::string provenance)
      : d_(d), outputs_(std::move(outputs)), ancillas_(std::move(ancillas)),
        columns_(std::move(columns)), provenance_(std::move(provenance)) {
    if (columns_.size() != static_cast<std::size_t>(d.value))
      throw std::invalid_argument("machine needs one column per input level");
  }

  Dim d() const { return d_; }
  const std::vector<std::string> &outputs() const { return outputs_; }
  const std::vector<std::string> &ancillas() const { return ancillas_; }
  const StateVector &column(int m) const { return columns_.at(m); }
  const Register &image_register() const { return columns_.front().reg(); }
  const std::string &provenance() const { return provenance_; }

  //! max |<col_i|col_j> - delta_ij|; below 1e-10 for a valid isometry.
  double isometry_defect() const {
    double defect = 0.0;
    for (int i = 0; i < d_.value; ++i)
      for (int j = i; j < d_.value; ++j) {
        const cxd g = inner(columns_[i], columns_[j]);
        defect = std::max(defect, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    return defect;
  }

  //! V|psi> for a single-qudit input.
  StateVector apply_isometry(const StateVector &input) const {
    if (input.reg().dim() != static_cast<std::size_t>(d_.value))
      throw std::invalid_argument("machine input must be a single qudit");
    StateVector out = StateVector::zero(image_register());
    for (int m = 0; m < d_.value; ++m) {
      const cxd c = input[m];
      if (c == cxd(0.0, 0.0))
        continue;
      for (std::size_t k = 0; k < out.amplitudes().size(); ++k)
        out[k] += c * columns_[m][k];
    }
    return out;
  }

private:
  Dim d_;
  std::vector<std::string> outputs_, ancillas_;
  std::vector<StateVector> columns_;
  std::string provenance_;
};

//! The 1->3 machines U+- on qudits A,B,C with ancillas E,F. The input |m>
//! enters on A; the cyclic shift walks it to B (beta) and C (gamma):
//! |m,n,k>_ABC -> |k,m,n>_ABC. The overall constant is fixed by V^dag V = I.
inline CloningMachine build_u3(const Coeffs3 &c) {
  if (c.normalization_defect() > 1e-9)
    throw std::invalid_argument("coefficients violate the 1->3 normalization");
  const int d = c.d.value;
  Register reg(c.d, {"A", "B", "C", "E", "F"});
  const double s = sign_value(c.sign);
  const double norm_const = 1.0 / std::sqrt(2.0 * d * (d + s));

  std::vector<StateVector> columns;
  columns.reserve(d);
  std::vector<int> digits(5);
  for (int m = 0; m < d; ++m) {
    StateVector base = StateVector::zero(reg);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        digits = {m, j, k, j, k};
        base[reg.encode(digits)] += 1.0;
        digits = {m, k, j, j, k};
        base[reg.encode(digits)] += s;
      }
    StateVector y1 = cyclic_shift_state(base, {"A", "B", "C"}, -1);
    StateVector y2 = cyclic_shift_state(base, {"A", "B", "C"}, -2);
    StateVector col = StateVector::zero(reg);
    for (std::size_t i = 0; i < reg.dim(); ++i)
      col[i] = norm_const *
               (c.alpha * base[i] + c.beta * y1[i] + c.gamma * y2[i]);
    columns.push_back(std::move(col));
  }
  std::string prov = "u3";
  prov += sign_char(c.sign);
  return CloningMachine(c.d, {"A", "B", "C"}, {"E", "F"}, std::move(columns),
                        prov);
}

//! The 1->N machine family: sum_a alpha_a X^a |m>_1 |Phi_sym>_{rest,primes}.
//! X walks the input from output 1 to output a+1. The printed overall
//! constant does not produce an isometry; it is fixed here by V^dag V = I,
//! which lands on binom(d+N-2, N-1) with an orthonormal symmetric basis.
inline CloningMachine build_uN(const CoeffsN &c) {
  const int d = c.d.value;
  const int n = c.n();
  if (n < 2)
    throw std::invalid_argument("1->N machine needs N >= 2");
  if (c.normalization_defect() > 1e-9)
    throw std::invalid_argument("coefficients violate the 1->N normalization");

  std::vector<std::string> outputs, ancillas;
  for (int i = 1; i <= n; ++i)
    outputs.push_back(std::to_string(i));
  for (int i = 2; i <= n; ++i)
    ancillas.push_back(std::to_string(i) + "'");
  std::vector<std::string> all = outputs;
  all.insert(all.end(), ancillas.begin(), ancillas.end());
  Register reg(c.d, all);

  // Orthonormal symmetric basis of the N-1 broadcast qudits.
  Register sym_reg(c.d, ancillas); // same shape as outputs 2..N
  auto sym = symmetric_basis(c.d, n - 1, sym_reg);
  const double norm_const = 1.0 / std::sqrt(static_cast<double>(sym.size()));

  const std::size_t sym_dim = sym_reg.dim();
  std::vector<int> digits(reg.size());
  std::vector<int> sdig(static_cast<std::size_t>(n - 1));
  std::vector<StateVector> columns;
  columns.reserve(d);
  for (int m = 0; m < d; ++m) {
    StateVector base = StateVector::zero(reg);
    for (const auto &s : sym) {
      for (std::size_t i = 0; i < sym_dim; ++i) {
        const cxd ai = s[i];
        if (ai == cxd(0.0, 0.0))
          continue;
        sym_reg.decode(i, sdig);
        for (std::size_t jj = 0; jj < sym_dim; ++jj) {
          const cxd aj = s[jj];
          if (aj == cxd(0.0, 0.0))
            continue;
          std::vector<int> sdig2(static_cast<std::size_t>(n - 1));
          sym_reg.decode(jj, sdig2);
          digits[0] = m;
          for (int k = 0; k < n - 1; ++k) {
            digits[1 + k] = sdig[k];
            digits[n + k] = sdig2[k];
          }
          base[reg.encode(digits)] += ai * aj;
        }
      }
    }
    StateVector col = StateVector::zero(reg);
    for (int a = 0; a < n; ++a) {
      if (c.alphas[a] == 0.0)
        continue;
      StateVector shifted = cyclic_shift_state(base, outputs, -a);
      for (std::size_t i = 0; i < reg.dim(); ++i)
        col[i] += c.alphas[a] * shifted[i];
    }
    for (std::size_t i = 0; i < reg.dim(); ++i)
      col[i] *= norm_const;
    columns.push_back(std::move(col));
  }
  return CloningMachine(c.d, outputs, ancillas, std::move(columns), "uN");
}

//! 1->1 identity channel as a machine; the f = d^2 reference point.
inline CloningMachine identity_machine(Dim d) {
  Register reg(d, {"A"});
  std::vector<StateVector> columns;
  for (int m = 0; m < d.value; ++m)
    columns.push_back(StateVector::basis(reg, m));
  return CloningMachine(d, {"A"}, {}, std::move(columns), "identity");
}

//=========================================================================
// Probabilistic mixtures.
//=========================================================================

struct MachineMixture {
  std::vector<std::pair<double, CloningMachine>> components;

  void validate() const {
    double sum = 0.0;
    for (const auto &[w, m] : components) {
      if (w < -1e-12)
        throw std::invalid_argument("mixture weights must be non-negative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("mixture weights must sum to 1");
  }
};

//! Output density matrix of a machine or mixture on its output labels.
inline Operator apply_machine(const CloningMachine &machine,
                              const StateVector &input) {
  StateVector image = machine.apply_isometry(input);
  return partial_trace_pure(image, machine.outputs());
}

inline Operator apply_machine(const MachineMixture &mix,
                              const StateVector &input) {
  mix.validate();
  std::optional<Operator> acc;
  for (const auto &[w, machine] : mix.components) {
    Operator rho = apply_machine(machine, input);
    rho.matrix() *= cxd(w, 0.0);
    if (acc)
      acc->matrix() += rho.matrix();
    else
      acc = std::move(rho);
  }
  return *acc;
}

//! A mixture hitting a target on a hull face. The target must be the
//! componentwise f-space combination p*f_first + (1-p)*f_second; the Choi
//! state of a mixture is the weight-sum of the component Choi states, so the
//! machine weights are exactly (p, 1-p). The root-space position q of the
//! target between the endpoints solves
//!     (q y + (1-q) y')^2 = p y^2 + (1-p) y'^2
//! on the differing coordinate; it is reported alongside the mixture.
struct MixtureSolution {
  MachineMixture mixture;
  double weight_p; // applied to the first endpoint
  double paper_q;  // root-space coordinate of the target on the face
  std::size_t coordinate; // index of the (dominant) differing coordinate
};

//! Solve (q y + (1-q) y')^2 = p y^2 + (1-p) y'^2 for q in [0, 1].
inline double solve_face_position(double y, double yprime, double p) {
  if (std::abs(y - yprime) < 1e-12)
    return p; // degenerate face: fidelity unchanged, any weight works
  const double target_f = p * y * y + (1.0 - p) * yprime * yprime;
  if (target_f < -1e-12)
    throw std::invalid_argument("face target has negative fidelity");
  const double root = std::sqrt(std::max(0.0, target_f));
  // y, y' >= 0 on a face; the matching root lies between them.
  const double q = (root - yprime) / (y - yprime);
  if (q < -1e-9 || q > 1.0 + 1e-9)
    throw std::invalid_argument("target not on the claimed face");
  return std::min(1.0, std::max(0.0, q));
}

inline MixtureSolution
mixture_for_target(const std::vector<double> &target_f,
                   const CloningMachine &first,
                   const std::vector<double> &f_first,
                   const CloningMachine &second,
                   const std::vector<double> &f_second, double p) {
  if (target_f.size() != f_first.size() || f_first.size() != f_second.size())
    throw std::invalid_argument("fidelity tuple lengths differ");
  if (p < -1e-12 || p > 1.0 + 1e-12)
    throw std::invalid_argument("convexity parameter outside [0, 1]");
  double scale = 1.0;
  for (std::size_t k = 0; k < target_f.size(); ++k)
    scale = std::max({scale, std::abs(f_first[k]), std::abs(f_second[k])});
  std::size_t dominant = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < target_f.size(); ++k) {
    const double mix = p * f_first[k] + (1.0 - p) * f_second[k];
    if (std::abs(target_f[k] - mix) > 1e-9 * scale)
      throw std::invalid_argument(
          "target is not the stated f-space combination of the endpoints");
    const double gap = std::abs(f_first[k] - f_second[k]);
    if (gap > best) {
      best = gap;
      dominant = k;
    }
  }
  const double q = solve_face_position(std::sqrt(std::max(0.0, f_first[dominant])),
                                       std::sqrt(std::max(0.0, f_second[dominant])), p);
  MixtureSolution sol{MachineMixture{{{p, first}, {1.0 - p, second}}}, p, q,
                      dominant};
  sol.mixture.validate();
  return sol;
}

} // namespace qclone

#endif // QCLONE_MACHINES_HPP
