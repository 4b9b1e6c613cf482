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

#ifndef QCLONE_ORACLE_HPP
#define QCLONE_ORACLE_HPP

#include <complex>
#include <string>
#include <vector>

#include "qclone/boundary.hpp"
#include "qclone/eigen.hpp"
#include "qclone/machines.hpp"
#include "qclone/qudit.hpp"

namespace qclone {

//=========================================================================
// Explicit basis constructions certifying the subspace decompositions the
// trade-off bounds rest on. Everything here is checked numerically, never
// assumed.
//=========================================================================

struct BasisFamily {
  std::vector<StateVector> states;
  std::string tag; // phi12 | phi13_plus | phi13_minus | psi_1N
  Dim d;

  //! max |<phi_i|phi_j> - delta_ij| over the family.
  double gram_defect() const {
    double defect = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i; j < states.size(); ++j) {
        const cxd g = inner(states[i], states[j]);
        defect = std::max(defect, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    return defect;
  }
};

//! Orthonormal span of the two 1->2 observables on (R, A, B):
//! (|Phi>_RA |k>_B +- |Phi>_RB |k>_A) / sqrt(2(d±1)), 2d states.
inline BasisFamily phi_basis_12(Dim d) {
  Register reg(d, {"R", "A", "B"});
  const int dd = d.value;
  BasisFamily fam{{}, "phi12", d};
  std::vector<int> digits(3);
  for (int s : {+1, -1}) {
    const double norm = std::sqrt(2.0 * (dd + s));
    for (int k = 0; k < dd; ++k) {
      StateVector v = StateVector::zero(reg);
      for (int m = 0; m < dd; ++m) {
        digits = {m, m, k};
        v[reg.encode(digits)] += 1.0;
        digits = {m, k, m};
        v[reg.encode(digits)] += s;
      }
      fam.states.push_back(v.scaled(1.0 / norm));
    }
  }
  return fam;
}

namespace detail {

//! |Phi>_RA (x) |{kl}+->_BC on (R, A, B, C); unnormalized Phi.
inline StateVector pair_base_state(Dim d, int k, int l, int sign,
                                   const Register &reg) {
  StateVector v = StateVector::zero(reg);
  const double w = k == l ? 1.0 : 1.0 / std::sqrt(2.0);
  std::vector<int> digits(4);
  for (int n = 0; n < d.value; ++n) {
    digits = {n, n, k, l};
    v[reg.encode(digits)] += w;
    if (k != l) {
      digits = {n, n, l, k};
      v[reg.encode(digits)] += sign * w;
    }
  }
  return v;
}

} // namespace detail

//! The 1->3 subspace bases: (I + w^a Y + w^{2a} Y^2) |Phi>_RA |{kl}+->_BC
//! normalized by sqrt(3(d +- (3 delta_a0 - 1))), with Y the cyclic shift
//! |m,n,k>_ABC -> |k,m,n>_ABC. At d = 2 the (a=0, minus) state vanishes
//! identically and is dropped, leaving 2 rather than 3 minus states.
inline BasisFamily phi_basis_13(Dim d, Sign sign) {
  Register reg(d, {"R", "A", "B", "C"});
  const int dd = d.value;
  const int s = sign == Sign::plus ? +1 : -1;
  BasisFamily fam{{}, sign == Sign::plus ? "phi13_plus" : "phi13_minus", d};
  const double two_pi = 2.0 * 3.14159265358979323846;
  for (int k = 0; k < dd; ++k) {
    for (int l = 0; l < (sign == Sign::plus ? k + 1 : k); ++l) {
      StateVector base = detail::pair_base_state(d, k, l, s, reg);
      StateVector y1 = cyclic_shift_state(base, {"A", "B", "C"}, -1);
      StateVector y2 = cyclic_shift_state(base, {"A", "B", "C"}, -2);
      for (int a = 0; a < 3; ++a) {
        const cxd w1(std::cos(two_pi * a / 3.0), std::sin(two_pi * a / 3.0));
        const cxd w2 = w1 * w1;
        StateVector v = StateVector::zero(reg);
        for (std::size_t i = 0; i < reg.dim(); ++i)
          v[i] = base[i] + w1 * y1[i] + w2 * y2[i];
        const double n2 = v.norm_squared();
        if (n2 < 1e-9)
          continue; // vanishing direction (a = 0, minus family at d = 2)
        fam.states.push_back(v.scaled(1.0 / std::sqrt(n2)));
      }
    }
  }
  return fam;
}

//! Eigenvalues of I - sum |phi><phi| over the given families. For
//! orthonormal spanning families this is the projector onto the
//! orthogonal-complement subspace: eigenvalues in {0, 1}.
struct DeficitReport {
  std::vector<double> eigenvalues; // ascending
  double min_eigenvalue;
  int zero_count; // |lambda| <= 1e-8
};

inline DeficitReport
incompleteness_deficit(const std::vector<BasisFamily> &families) {
  if (families.empty())
    throw std::invalid_argument("no basis families given");
  const Register &reg = families.front().states.front().reg();
  Matrix m = Matrix::identity(reg.dim());
  for (const auto &fam : families)
    for (const auto &phi : fam.states) {
      if (!(phi.reg() == reg))
        throw std::invalid_argument("families live on different registers");
      m -= projector(phi).matrix();
    }
  auto es = eigh(m, /*want_vectors=*/false);
  DeficitReport rep{es.values, es.values.front(), 0};
  for (double v : es.values)
    if (std::abs(v) <= 1e-8)
      ++rep.zero_count;
  return rep;
}

//! ||(I - Pi) M (I - Pi)|| for the projector Pi onto span(families):
//! certifies that an observable is supported inside the span.
inline double residual_outside_span(const Operator &observable,
                                    const std::vector<BasisFamily> &families) {
  const Register &reg = observable.reg();
  Matrix pi(reg.dim(), reg.dim());
  for (const auto &fam : families)
    for (const auto &phi : fam.states)
      pi += projector(phi).matrix();
  Matrix icomp = Matrix::identity(reg.dim()) - pi;
  Matrix res = icomp * observable.matrix() * icomp;
  return res.max_abs();
}

//=========================================================================
// Support-function oracle: the attainable set of (f_1 .. f_N) over states
// with Tr Q = d is convex with support h(w) = d * lambda_max(sum w_k Phi_{0k}).
// Extremal eigenvalues come from full Hermitian diagonalization.
//=========================================================================

//! Register (0, 1, .., N) with reference label "0".
inline Register reference_register(Dim d, int n_outputs) {
  std::vector<std::string> labels{"0"};
  for (int i = 1; i <= n_outputs; ++i)
    labels.push_back(std::to_string(i));
  return Register(d, labels);
}

inline Operator weighted_observable(const std::vector<double> &w, Dim d) {
  const int n = static_cast<int>(w.size());
  Register reg = reference_register(d, n);
  if (reg.dim() > 1024)
    throw std::invalid_argument("register too large for the dense oracle");
  Matrix acc(reg.dim(), reg.dim());
  for (int k = 0; k < n; ++k) {
    if (w[k] == 0.0)
      continue;
    Operator phi = projector(max_entangled(d, "0", std::to_string(k + 1)));
    Matrix emb = embed(phi, reg).matrix();
    emb *= cxd(w[k], 0.0);
    acc += emb;
  }
  return Operator(reg, std::move(acc));
}

//! h(w) = d * lambda_max(sum_k w_k Phi_{0k}).
inline double support_function(const std::vector<double> &w, Dim d) {
  return d.value * eig_max(weighted_observable(w, d).matrix());
}

//=========================================================================
// Gram-matrix certification of the 1->N bound: the bordered Gram matrix of
// {|psi>, P_a |Phi>_01 |s_lambda>} in the symmetric sector is PSD, and is
// singular exactly on machine-generated states.
//=========================================================================

struct GramReport {
  Matrix gram;
  double min_eigenvalue;
  std::vector<std::vector<cxd>> border_vectors; // f_1 .. f_N
  std::vector<double> block_diagonals;          // one entry per a
};

//! The spanning states P_a |Phi>_01 |s_lambda> of the symmetric sector,
//! grouped a-major; lambda runs over the symmetric basis of qudits 2..N.
inline std::vector<StateVector> gram_1n_family(Dim d, int n) {
  if (n < 2)
    throw std::invalid_argument("need at least two outputs");
  Register reg = reference_register(d, n);
  std::vector<std::string> outputs;
  for (int i = 1; i <= n; ++i)
    outputs.push_back(std::to_string(i));
  std::vector<std::string> rest(outputs.begin() + 1, outputs.end());
  Register rest_reg(d, rest);
  auto lambda_states = symmetric_basis(d, n - 1, rest_reg);
  const double two_pi = 2.0 * 3.14159265358979323846;

  std::vector<StateVector> family;
  for (int a = 0; a < n; ++a) {
    for (const auto &lam : lambda_states) {
      StateVector base = tensor(max_entangled(d, "0", "1"), lam);
      StateVector acc = StateVector::zero(reg);
      for (int k = 0; k < n; ++k) {
        const cxd w(std::cos(two_pi * k * a / n), std::sin(two_pi * k * a / n));
        StateVector shifted = cyclic_shift_state(base, outputs, k);
        for (std::size_t i = 0; i < reg.dim(); ++i)
          acc[i] += w * shifted[i];
      }
      family.push_back(acc.scaled(1.0 / n));
    }
  }
  return family;
}

//! psi must live on (0, 1, .., N) with squared norm d.
inline GramReport gram_1n(const StateVector &psi, Dim d, int n) {
  Register reg = reference_register(d, n);
  if (!(psi.reg() == reg))
    throw std::invalid_argument("state register must be (0, 1, .., N)");
  std::vector<StateVector> family = gram_1n_family(d, n);
  const std::size_t total = family.size() + 1;
  Matrix g(total, total);
  g(0, 0) = psi.norm_squared();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const cxd b = inner(psi, family[i]);
    g(0, i + 1) = b;
    g(i + 1, 0) = std::conj(b);
    for (std::size_t j = i; j < family.size(); ++j) {
      const cxd gij = inner(family[i], family[j]);
      g(i + 1, j + 1) = gij;
      g(j + 1, i + 1) = std::conj(gij);
    }
  }

  GramReport rep{g, 0.0, {}, {}};
  rep.min_eigenvalue = eig_min(g);
  // Border vectors grouped by a; block diagonals averaged per a.
  const std::size_t per_a = family.size() / n;
  for (int a = 0; a < n; ++a) {
    std::vector<cxd> fa;
    double diag = 0.0;
    for (std::size_t t = 0; t < per_a; ++t) {
      const std::size_t idx = a * per_a + t;
      fa.push_back(inner(psi, family[idx]));
      diag += g(idx + 1, idx + 1).real();
    }
    rep.border_vectors.push_back(std::move(fa));
    rep.block_diagonals.push_back(per_a ? diag / per_a : 0.0);
  }
  return rep;
}

//=========================================================================
// Randomized no-violation certification of the bounds.
//=========================================================================

struct BoundCheckReport {
  std::string name;
  int trials;
  double max_residual; // amount above the bound; negative means slack
  bool pass;
};

namespace detail {

inline double expectation_real(const Operator &op, const StateVector &psi) {
  return op.expectation(psi).real();
}

} // namespace detail

//! Eq.-style two-output bound on random 3-qudit states scaled to Tr = d.
inline BoundCheckReport verify_bound_two_outputs(Dim d, int trials,
                                                 std::uint64_t seed) {
  Register reg(d, {"R", "A", "B"});
  Operator phi_ra = embed(projector(max_entangled(d, "R", "A")), reg);
  Operator phi_rb = embed(projector(max_entangled(d, "R", "B")), reg);
  Rng rng(seed);
  double worst = -1e300;
  for (int t = 0; t < trials; ++t) {
    StateVector psi = haar_state(reg, rng).scaled(std::sqrt(d.value));
    const double fa = detail::expectation_real(phi_ra, psi);
    const double fb = detail::expectation_real(phi_rb, psi);
    const double x = std::sqrt(std::max(0.0, fa));
    const double y = std::sqrt(std::max(0.0, fb));
    const double lhs = (x + y) * (x + y) / (2.0 * (d.value + 1)) +
                       (x - y) * (x - y) / (2.0 * (d.value - 1));
    worst = std::max(worst, lhs - d.value);
  }
  return {"two_output_ellipse", trials, worst, worst <= 1e-9};
}

//! Subspace-restricted bound on random pure states of V_+ or V_-.
inline BoundCheckReport verify_bound_subspace(Dim d, Sign sign, int trials,
                                              std::uint64_t seed) {
  BasisFamily fam = phi_basis_13(d, sign);
  Register reg(d, {"R", "A", "B", "C"});
  const int s = sign == Sign::plus ? +1 : -1;

  // Component states e^A_{kl} plus their cyclic images for B and C; the
  // Y-powers keep the three vectors phase-coherent so their sum projects
  // onto the a = 0 sector.
  std::vector<StateVector> eA, eB, eC;
  for (int k = 0; k < d.value; ++k)
    for (int l = 0; l < (sign == Sign::plus ? k + 1 : k); ++l) {
      StateVector base = detail::pair_base_state(d, k, l, s, reg);
      eA.push_back(base);
      eB.push_back(cyclic_shift_state(base, {"A", "B", "C"}, -1));
      eC.push_back(cyclic_shift_state(base, {"A", "B", "C"}, -2));
    }

  Operator phi_ra = embed(projector(max_entangled(d, "R", "A")), reg);
  Operator phi_rb = embed(projector(max_entangled(d, "R", "B")), reg);
  Operator phi_rc = embed(projector(max_entangled(d, "R", "C")), reg);

  Rng rng(seed);
  double worst = -1e300;
  for (int t = 0; t < trials; ++t) {
    StateVector psi =
        haar_state_in_span(fam.states, rng).scaled(std::sqrt(d.value));
    const double fa = detail::expectation_real(phi_ra, psi);
    const double fb = detail::expectation_real(phi_rb, psi);
    const double fc = detail::expectation_real(phi_rc, psi);
    double sum_norm2 = 0.0;
    for (std::size_t i = 0; i < eA.size(); ++i) {
      const cxd comp =
          inner(psi, eA[i]) + inner(psi, eB[i]) + inner(psi, eC[i]);
      sum_norm2 += std::norm(comp);
    }
    double residual;
    if (sign == Sign::minus && d.value == 2) {
      // The divisor d - 2 vanishes; the coherent vector sum vanishes
      // identically and the bound degenerates to the sphere.
      residual = std::max(sum_norm2 - 1e-9,
                          fa + fb + fc - d.value * (d.value + 1.0));
    } else {
      residual = fa + fb + fc - s * sum_norm2 / (d.value + 2.0 * s) -
                 d.value * (d.value - 1.0 * s);
    }
    worst = std::max(worst, residual);
  }
  return {sign == Sign::plus ? "subspace_plus" : "subspace_minus", trials,
          worst, worst <= 1e-9};
}

//! 1->N symmetric-sector bound on random (N+1)-qudit states.
inline BoundCheckReport verify_bound_1n(Dim d, int n, int trials,
                                        std::uint64_t seed) {
  Register reg = reference_register(d, n);
  std::vector<Operator> phis;
  for (int k = 1; k <= n; ++k)
    phis.push_back(
        embed(projector(max_entangled(d, "0", std::to_string(k))), reg));
  Rng rng(seed);
  double worst = -1e300;
  for (int t = 0; t < trials; ++t) {
    StateVector psi = haar_state(reg, rng).scaled(std::sqrt(d.value));
    std::vector<double> f;
    for (const auto &phi : phis)
      f.push_back(std::max(0.0, detail::expectation_real(phi, psi)));
    worst = std::max(worst, bound_1n_residual(f, d, n));
  }
  return {"bound_1n", trials, worst, worst <= 1e-9};
}

//! Dispatch by surface tag: "two_output" (the 1->2 ellipse),
//! "subspace_plus" / "subspace_minus" (restricted pure states),
//! "bound_1n" (the symmetric-sector bound), "hull" (membership of random
//! 4-qudit states).
inline BoundCheckReport verify_bound(const std::string &tag, Dim d, int n,
                                     int trials, std::uint64_t seed);

//! Hull membership of random 4-qudit states in f-space.
inline BoundCheckReport verify_hull_membership(const HullContext &ctx,
                                               int trials,
                                               std::uint64_t seed) {
  const Dim d = ctx.d();
  Register reg(d, {"R", "A", "B", "C"});
  Operator phi_ra = embed(projector(max_entangled(d, "R", "A")), reg);
  Operator phi_rb = embed(projector(max_entangled(d, "R", "B")), reg);
  Operator phi_rc = embed(projector(max_entangled(d, "R", "C")), reg);
  Rng rng(seed);
  double worst = -1e300;
  for (int t = 0; t < trials; ++t) {
    StateVector psi = haar_state(reg, rng).scaled(std::sqrt(d.value));
    const std::array<double, 3> f{detail::expectation_real(phi_ra, psi),
                                  detail::expectation_real(phi_rb, psi),
                                  detail::expectation_real(phi_rc, psi)};
    worst = std::max(worst, -ctx.min_slack(f));
  }
  return {"hull_membership", trials, worst, worst <= 1e-9};
}

inline BoundCheckReport verify_bound(const std::string &tag, Dim d, int n,
                                     int trials, std::uint64_t seed) {
  if (tag == "two_output")
    return verify_bound_two_outputs(d, trials, seed);
  if (tag == "subspace_plus")
    return verify_bound_subspace(d, Sign::plus, trials, seed);
  if (tag == "subspace_minus")
    return verify_bound_subspace(d, Sign::minus, trials, seed);
  if (tag == "bound_1n")
    return verify_bound_1n(d, n, trials, seed);
  if (tag == "hull") {
    HullContext ctx(d, 96);
    return verify_hull_membership(ctx, trials, seed);
  }
  throw std::invalid_argument("unknown bound tag: " + tag);
}

//! Exploratory probe of whether non-negative-coefficient 1->N machines
//! reach the relaxed support in a direction w >= 0. The machine side is a
//! sampled maximum of w . (x_1^2, .., x_N^2); equality beyond N = 3 is an
//! open matter, so only the two numbers are reported, never their equality.
struct ConjectureProbe {
  double relaxed_support;     // d * lambda_max of the weighted observable
  double best_machine_value;  // over sampled machines with alpha_a >= 0
};

inline ConjectureProbe probe_1n_conjecture(const std::vector<double> &w, Dim d,
                                           int samples, std::uint64_t seed) {
  const int n = static_cast<int>(w.size());
  ConjectureProbe probe{support_function(w, d), -1e300};
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    std::vector<double> raw(n);
    for (double &v : raw)
      v = rng.uniform();
    CoeffsN c = normalize_coeffsN(raw, d);
    const auto f = [&] {
      std::vector<double> out;
      double sum = 0.0;
      for (double a : c.alphas)
        sum += a;
      for (double a : c.alphas) {
        const double x = (d.value - 1) * a + sum;
        out.push_back(x * x);
      }
      return out;
    }();
    double value = 0.0;
    for (int k = 0; k < n; ++k)
      value += w[k] * f[k];
    probe.best_machine_value = std::max(probe.best_machine_value, value);
  }
  return probe;
}

} // namespace qclone

#endif // QCLONE_ORACLE_HPP
