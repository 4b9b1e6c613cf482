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

#ifndef QCLONE_FIDELITY_HPP
#define QCLONE_FIDELITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qclone/machines.hpp"
#include "qclone/qudit.hpp"

namespace qclone {

//! F = (d + f) / (d (d + 1)); f ranges over [0, d^2], F over [1/(d+1), 1].
inline double fidelity_from_f(double f, Dim d) {
  return (d.value + f) / (d.value * (d.value + 1.0));
}

//=========================================================================
// Choi state: feed half of the subnormalized entangled pair through the
// channel. Tr Q = d; tracing out the outputs returns the identity on the
// reference qudit.
//=========================================================================

struct ChoiState {
  Operator q; // on (reference, outputs...)
  std::string reference_label;
  std::vector<std::string> output_labels;
  Dim d;

  double trace_defect() const {
    return std::abs(q.trace().real() - d.value) + std::abs(q.trace().imag());
  }
  double reduced_identity_defect() const {
    Operator red = partial_trace(q, {reference_label});
    return (red.matrix() - Matrix::identity(d.value)).max_abs();
  }
  double positivity_defect() const {
    const double lo = eig_min(q.matrix());
    return lo < 0.0 ? -lo : 0.0;
  }
};

inline ChoiState choi_of(const CloningMachine &machine) {
  const Dim d = machine.d();
  const std::size_t dd = static_cast<std::size_t>(d.value);
  const Register &image = machine.image_register();

  std::size_t anc_dim = 1;
  for (std::size_t i = 0; i < machine.ancillas().size(); ++i)
    anc_dim *= dd;
  const std::size_t out_dim = image.dim() / anc_dim;

  // Columns are laid out outputs-major, so psi reshapes directly into a
  // (reference x outputs) by ancilla matrix; Q = M M^dagger.
  const std::size_t choi_dim = dd * out_dim;
  Matrix m(choi_dim, anc_dim);
  for (std::size_t r = 0; r < dd; ++r) {
    const StateVector &col = machine.column(static_cast<int>(r));
    for (std::size_t o = 0; o < out_dim; ++o)
      for (std::size_t a = 0; a < anc_dim; ++a)
        m(r * out_dim + o, a) = col[o * anc_dim + a];
  }
  Matrix qm(choi_dim, choi_dim);
  for (std::size_t i = 0; i < choi_dim; ++i)
    for (std::size_t j = 0; j < choi_dim; ++j) {
      cxd s = 0.0;
      for (std::size_t a = 0; a < anc_dim; ++a)
        s += m(i, a) * std::conj(m(j, a));
      qm(i, j) = s;
    }

  std::vector<std::string> labels{"R"};
  labels.insert(labels.end(), machine.outputs().begin(),
                machine.outputs().end());
  Register choi_reg(d, labels);
  return ChoiState{Operator(choi_reg, std::move(qm)), "R", machine.outputs(),
                   d};
}

inline ChoiState choi_of(const MachineMixture &mix) {
  mix.validate();
  std::vector<ChoiState> parts;
  for (const auto &[w, machine] : mix.components)
    parts.push_back(choi_of(machine));
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (!(parts[k].q.reg() == parts[0].q.reg()))
      throw std::invalid_argument("mixture components act on different registers");
  Matrix acc(parts[0].q.reg().dim(), parts[0].q.reg().dim());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Matrix term = parts[k].q.matrix();
    term *= cxd(mix.components[k].first, 0.0);
    acc += term;
  }
  return ChoiState{Operator(parts[0].q.reg(), std::move(acc)),
                   parts[0].reference_label, parts[0].output_labels,
                   parts[0].d};
}

//=========================================================================
// Fidelity accounting. f is the stored quantity; F is derived on output.
//=========================================================================

struct FidelityReport {
  std::vector<double> f;
  std::vector<double> F;
  std::vector<double> variance_over_haar; // empty unless sampled

  static FidelityReport from_f(std::vector<double> fs, Dim d) {
    FidelityReport r;
    r.f = std::move(fs);
    for (double f : r.f)
      r.F.push_back(fidelity_from_f(f, d));
    return r;
  }
};

//! f_k = Tr(Q Phi_{R,k}) with Phi embedded on (reference, output k).
inline FidelityReport f_values(const ChoiState &choi) {
  std::vector<double> fs;
  fs.reserve(choi.output_labels.size());
  for (const auto &out : choi.output_labels) {
    Operator phi = projector(max_entangled(choi.d, choi.reference_label, out));
    Operator emb = embed(phi, choi.q.reg());
    // Tr(Q Phi)
    cxd tr = 0.0;
    const std::size_t n = choi.q.reg().dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        tr += choi.q.matrix()(i, j) * emb.matrix()(j, i);
    fs.push_back(tr.real());
  }
  return FidelityReport::from_f(std::move(fs), choi.d);
}

inline FidelityReport fidelities(const CloningMachine &machine) {
  return f_values(choi_of(machine));
}

inline FidelityReport fidelities(const MachineMixture &mix) {
  return f_values(choi_of(mix));
}

//! Monte Carlo over Haar inputs. Universality shows up as a variance at
//! round-off level; the mean matches the Choi value.
inline FidelityReport haar_average_fidelity(const CloningMachine &machine,
                                            int samples, std::uint64_t seed) {
  if (samples < 2)
    throw std::invalid_argument("need at least two samples");
  const Dim d = machine.d();
  Register in_reg(d, {"in"});
  Rng rng(seed);

  // Welford accumulation: the per-sample values of a universal machine are
  // constant, so the variance must come out at round-off scale, not at the
  // cancellation floor of a sum-of-squares estimator.
  const std::size_t n_out = machine.outputs().size();
  std::vector<double> mean(n_out, 0.0), m2(n_out, 0.0);
  for (int s = 0; s < samples; ++s) {
    StateVector psi = haar_state(in_reg, rng);
    StateVector image = machine.apply_isometry(psi);
    for (std::size_t k = 0; k < n_out; ++k) {
      Operator rho = partial_trace_pure(image, {machine.outputs()[k]});
      cxd fid = 0.0;
      for (int a = 0; a < d.value; ++a)
        for (int b = 0; b < d.value; ++b)
          fid += std::conj(psi[a]) * rho.matrix()(a, b) * psi[b];
      const double x = fid.real();
      const double delta = x - mean[k];
      mean[k] += delta / (s + 1);
      m2[k] += delta * (x - mean[k]);
    }
  }
  FidelityReport r;
  for (std::size_t k = 0; k < n_out; ++k) {
    r.F.push_back(mean[k]);
    r.f.push_back(mean[k] * d.value * (d.value + 1.0) - d.value);
    r.variance_over_haar.push_back(m2[k] / samples);
  }
  return r;
}

//! Squared linear forms: f_A = x^2 etc. for both machine families;
//! the symmetric case lands on f = d(d+N-1)/N.
inline std::vector<double> closed_form_f(const Coeffs3 &c) {
  const RootTargets t = targets_from_coeffs(c);
  return {t.x * t.x, t.y * t.y, t.z * t.z};
}

inline std::vector<double> closed_form_f(const CoeffsN &c) {
  std::vector<double> fs;
  for (double x : targets_from_coeffs(c))
    fs.push_back(x * x);
  return fs;
}

} // namespace qclone

#endif // QCLONE_FIDELITY_HPP
