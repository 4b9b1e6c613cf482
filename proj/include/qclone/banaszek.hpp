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

#ifndef QCLONE_BANASZEK_HPP
#define QCLONE_BANASZEK_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qclone/machines.hpp"

namespace qclone {

//=========================================================================
// The two-fidelity 1->N family: alpha_0 = alpha + beta/(d+N-1) and
// alpha_a = beta/(d+N-1) for a >= 1 give output fidelities f = (d alpha +
// beta)^2 on the first clone and g = (alpha + beta)^2 on the other N-1.
// The normalization ties f and g together; as N grows the relation
// approaches the optimal information-gain/disturbance trade-off.
//=========================================================================

struct TwoFidelityParams {
  double alpha, beta; // normalized so the induced coefficients satisfy
                      // the 1->N constraint
  int n;
  Dim d;

  CoeffsN induced_coeffs() const {
    std::vector<double> a(n, beta / (d.value + n - 1.0));
    a[0] += alpha;
    return CoeffsN{std::move(a), d};
  }
  double normalization_defect() const {
    return induced_coeffs().normalization_defect();
  }
};

//! Scale a non-negative direction (alpha, beta) onto the normalized family.
inline TwoFidelityParams two_fidelity_params(double alpha, double beta, int n,
                                             Dim d) {
  if (n < 2)
    throw std::invalid_argument("need at least two outputs");
  if (alpha < 0.0 || beta < 0.0 || (alpha == 0.0 && beta == 0.0))
    throw std::invalid_argument(
        "alpha and beta must be non-negative and not both zero");
  TwoFidelityParams raw{alpha, beta, n, d};
  const double q = raw.induced_coeffs().quadratic_form();
  const double s = 1.0 / std::sqrt(q);
  return TwoFidelityParams{alpha * s, beta * s, n, d};
}

inline CoeffsN two_fidelity_coeffs(const TwoFidelityParams &p) {
  CoeffsN c = p.induced_coeffs();
  if (c.normalization_defect() > 1e-12)
    throw std::invalid_argument("parameters are not normalized");
  return c;
}

//! Closed-form output fidelities (f for output 1, g for outputs 2..N).
inline std::pair<double, double> fg(const TwoFidelityParams &p) {
  const double root_f = p.d.value * p.alpha + p.beta;
  const double root_g = p.alpha + p.beta;
  return {root_f * root_f, root_g * root_g};
}

//! Residual of the trade-off identity
//!   (sqrt f - sqrt g)^2 = (d - g)(d - 1) + (d sqrt g - sqrt f)^2/(d+N-1);
//! zero across the whole normalized family.
inline double tradeoff_residual(double f, double g, Dim d, int n) {
  const double rf = std::sqrt(f), rg = std::sqrt(g);
  const double lhs = (rf - rg) * (rf - rg);
  const double rhs = (d.value - g) * (d.value - 1.0) +
                     (d.value * rg - rf) * (d.value * rg - rf) /
                         (d.value + n - 1.0);
  return lhs - rhs;
}

//! The N -> infinity limit: (sqrt f - sqrt g)^2 = (d - g)(d - 1), solved on
//! the disturbance-minimizing branch sqrt f >= sqrt g.
inline double asymptotic_f(double g, Dim d) {
  const double disc = (d.value - g) * (d.value - 1.0);
  if (disc < 0.0)
    throw std::invalid_argument("g outside the attainable range (0, d]");
  const double rf = std::sqrt(g) + std::sqrt(disc);
  return rf * rf;
}

//! f at finite N for a given g, same branch; decreases onto asymptotic_f
//! with gap proportional to 1/(d+N-1).
inline double finite_n_f(double g, Dim d, int n) {
  const double big_d = d.value + n - 1.0;
  const double rg = std::sqrt(g);
  const double a = 1.0 - 1.0 / big_d;
  const double b = -2.0 * rg * (1.0 - d.value / big_d);
  const double c =
      g - (d.value - g) * (d.value - 1.0) - d.value * d.value * g / big_d;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0)
    throw std::invalid_argument("g outside the attainable range");
  const double rf = (-b + std::sqrt(disc)) / (2.0 * a);
  return rf * rf;
}

struct CurveRow {
  double g;
  double f_asymptotic;
  std::vector<double> f_at_n; // one entry per requested N
};

//! Curve data for plotting the asymptotic trade-off next to finite-N cuts.
inline std::vector<CurveRow> asymptotic_curve(Dim d,
                                              const std::vector<double> &gs,
                                              const std::vector<int> &ns) {
  std::vector<CurveRow> rows;
  rows.reserve(gs.size());
  for (double g : gs) {
    CurveRow row{g, asymptotic_f(g, d), {}};
    for (int n : ns)
      row.f_at_n.push_back(finite_n_f(g, d, n));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace qclone

#endif // QCLONE_BANASZEK_HPP
