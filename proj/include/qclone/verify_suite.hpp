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

#ifndef QCLONE_VERIFY_SUITE_HPP
#define QCLONE_VERIFY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qclone/banaszek.hpp"
#include "qclone/boundary.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/machines.hpp"
#include "qclone/oracle.hpp"

namespace qclone {

//=========================================================================
// The named verification checks behind the `verify` command and the
// acceptance suite. Each returns the worst observed residual against a
// pinned tolerance; the two callers share every threshold.
//=========================================================================

struct CheckResult {
  std::string name;
  int trials;
  double max_residual;
  double tolerance;
  bool pass;
};

inline CheckResult make_result(std::string name, int trials, double residual,
                               double tolerance) {
  return {std::move(name), trials, residual, tolerance,
          residual <= tolerance};
}

//! Build the machine sitting at a hull support point.
inline CloningMachine machine_at_support(Dim d, const SupportPoint &sp) {
  const RootFidelityPoint &p = sp.x;
  switch (sp.component) {
  case Component::plus:
    return build_u3(
        coeffs_from_targets(RootTargets{p.x, p.y, p.z}, Sign::plus, d));
  case Component::minus_a:
    return build_u3(
        coeffs_from_targets(RootTargets{-p.x, p.y, p.z}, Sign::minus, d));
  case Component::minus_b:
    return build_u3(
        coeffs_from_targets(RootTargets{p.x, -p.y, p.z}, Sign::minus, d));
  case Component::minus_c:
    return build_u3(
        coeffs_from_targets(RootTargets{p.x, p.y, -p.z}, Sign::minus, d));
  case Component::cap: {
    // Sphere edge points admit a signed version with zero coordinate sum;
    // that direction solves the singular minus map at d = 2 and the
    // regular one for d >= 3.
    double best = 1e300;
    RootTargets t{0, 0, 0};
    for (int sx : {1, -1})
      for (int sy : {1, -1})
        for (int sz : {1, -1}) {
          const double sum = sx * p.x + sy * p.y + sz * p.z;
          if (std::abs(sum) < best) {
            best = std::abs(sum);
            t = RootTargets{sx * p.x, sy * p.y, sz * p.z};
          }
        }
    return build_u3(coeffs_from_targets(t, Sign::minus, d));
  }
  }
  throw std::invalid_argument("unknown component");
}

namespace checks {

//! Symmetric machines reproduce F = (2N+d-1)/(N(d+1)) through both the
//! closed form and the dense Choi computation, (N,d) in {2,3,4} x {2,3}.
inline CheckResult symmetric_fidelities(const std::vector<int> &dims) {
  double worst = 0.0;
  int cases = 0;
  for (int d : dims) {
    for (int n : {2, 3, 4}) {
      const double expected = (2.0 * n + d - 1.0) / (n * (d + 1.0));
      CoeffsN c = normalize_coeffsN(std::vector<double>(n, 1.0), Dim(d));
      for (double f : closed_form_f(c))
        worst = std::max(worst, std::abs(fidelity_from_f(f, Dim(d)) - expected));
      FidelityReport choi = fidelities(build_uN(c));
      for (double F : choi.F)
        worst = std::max(worst, std::abs(F - expected));
      ++cases;
    }
  }
  return make_result("symmetric_fidelities", cases, worst, 1e-10);
}

//! Isometry defect of the 1->3 family over random coefficients.
inline CheckResult isometry_u3(const std::vector<int> &dims, int trials,
                               std::uint64_t seed) {
  double worst = 0.0;
  int built = 0;
  for (int d : dims) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      Rng rng = Rng(seed).fork(d * 2 + (s == Sign::plus ? 0 : 1));
      int done = 0;
      while (done < trials) {
        Coeffs3 c{0, 0, 0, s, Dim(d)};
        try {
          c = normalize_coeffs3(rng.gaussian(), rng.gaussian(), rng.gaussian(),
                                s, Dim(d));
        } catch (const std::invalid_argument &) {
          continue;
        }
        worst = std::max(worst, build_u3(c).isometry_defect());
        ++done;
        ++built;
      }
    }
  }
  return make_result("isometry_u3", built, worst, 1e-10);
}

//! Isometry defect of the 1->N family; exercises the normalization-constant
//! resolution at every (N, d) up to (4, 3).
inline CheckResult isometry_un(const std::vector<int> &dims, int trials,
                               std::uint64_t seed) {
  double worst = 0.0;
  int built = 0;
  for (int d : dims) {
    for (int n : {2, 3, 4}) {
      Rng rng = Rng(seed).fork(10 * d + n);
      for (int t = 0; t < trials; ++t) {
        std::vector<double> raw(n);
        for (double &v : raw)
          v = rng.gaussian();
        worst =
            std::max(worst, build_uN(normalize_coeffsN(raw, Dim(d))).isometry_defect());
        ++built;
      }
    }
  }
  return make_result("isometry_un", built, worst, 1e-10);
}

//! Per-output fidelity variance over Haar inputs for a representative set
//! of machines from every construction.
inline CheckResult universality(const std::vector<int> &dims, int samples,
                                std::uint64_t seed) {
  std::vector<CloningMachine> machines;
  for (int d : dims) {
    machines.push_back(build_u3(normalize_coeffs3(1, 1, 1, Sign::plus, Dim(d))));
    Rng rng = Rng(seed).fork(d);
    machines.push_back(build_u3(normalize_coeffs3(
        rng.gaussian(), rng.gaussian(), rng.gaussian(), Sign::plus, Dim(d))));
    machines.push_back(build_u3(normalize_coeffs3(
        1.0 + rng.uniform(), rng.gaussian(), rng.gaussian(), Sign::minus,
        Dim(d))));
    for (int n : {2, 3, 4}) {
      std::vector<double> raw(n);
      for (double &v : raw)
        v = rng.gaussian();
      machines.push_back(build_uN(normalize_coeffsN(raw, Dim(d))));
    }
    machines.push_back(
        build_uN(two_fidelity_coeffs(two_fidelity_params(0.7, 0.9, 3, Dim(d)))));
  }
  double worst = 0.0;
  int idx = 0;
  for (const auto &m : machines) {
    FidelityReport r = haar_average_fidelity(m, samples, seed + 1000 + idx++);
    for (double v : r.variance_over_haar)
      worst = std::max(worst, v);
  }
  return make_result("universality_variance",
                     static_cast<int>(machines.size()) * samples, worst,
                     1e-18);
}

//! Choi fidelities equal the squared linear forms for every family.
inline CheckResult closed_form_agreement(const std::vector<int> &dims,
                                         int trials, std::uint64_t seed) {
  double worst = 0.0;
  int done = 0;
  for (int d : dims) {
    Rng rng = Rng(seed).fork(d);
    for (int t = 0; t < trials; ++t) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        Coeffs3 c{0, 0, 0, s, Dim(d)};
        try {
          c = normalize_coeffs3(rng.gaussian(), rng.gaussian(), rng.gaussian(),
                                s, Dim(d));
        } catch (const std::invalid_argument &) {
          continue;
        }
        auto predicted = closed_form_f(c);
        auto computed = fidelities(build_u3(c)).f;
        for (int k = 0; k < 3; ++k)
          worst = std::max(worst, std::abs(predicted[k] - computed[k]));
        ++done;
      }
      const int n = 2 + static_cast<int>(rng.uniform() * 3);
      std::vector<double> raw(n);
      for (double &v : raw)
        v = rng.gaussian();
      CoeffsN c = normalize_coeffsN(raw, Dim(d));
      auto predicted = closed_form_f(c);
      auto computed = fidelities(build_uN(c)).f;
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(predicted[k] - computed[k]));
      ++done;
    }
  }
  return make_result("closed_form_vs_choi", done, worst, 1e-10);
}

//! Machine fidelity points satisfy their bound with equality: the golden
//! surface for the plus family, the cone ellipsoids for the minus family
//! in the stated sign patterns, the two-output ellipse at N = 2, and the
//! 1->N bound for non-negative coefficients.
inline CheckResult saturation(const std::vector<int> &dims, int trials,
                              std::uint64_t seed) {
  double worst = 0.0;
  int done = 0;
  for (int d : dims) {
    Rng rng = Rng(seed).fork(d);
    const double scale = d * (d + 1.0);
    // Plus family: sample the positive-octant surface radially.
    for (int t = 0; t < trials; ++t) {
      std::array<double, 3> u{rng.uniform(), rng.uniform(), rng.uniform()};
      const double s = u[0] + u[1] + u[2];
      const double quad =
          u[0] * u[0] + u[1] * u[1] + u[2] * u[2] - s * s / (d + 2);
      const double r = std::sqrt(d * (d - 1.0) / quad);
      Coeffs3 c = coeffs_from_targets(
          RootTargets{r * u[0], r * u[1], r * u[2]}, Sign::plus, Dim(d));
      auto f = fidelities(build_u3(c)).f;
      RootFidelityPoint p{std::sqrt(f[0]), std::sqrt(f[1]), std::sqrt(f[2])};
      worst = std::max(worst,
                       std::abs(plus_surface_residual(p, Dim(d))) / scale);
      ++done;
    }
    // Minus family at d >= 3, all three sign patterns.
    if (d >= 3) {
      for (Component which :
           {Component::minus_a, Component::minus_b, Component::minus_c}) {
        const int k = which == Component::minus_a ? 0
                      : which == Component::minus_b ? 1
                                                    : 2;
        for (int t = 0; t < trials; ++t) {
          double raw[3] = {rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0),
                           rng.uniform(0.1, 1.0)};
          raw[k] = -raw[k]; // minority coordinate of the pattern
          Coeffs3 c{0, 0, 0, Sign::minus, Dim(d)};
          // Choose coefficients so the resulting targets carry the pattern:
          // invert from targets directly.
          RootTargets targets{raw[0], raw[1], raw[2]};
          // Scale the direction onto the quadric via normalization.
          c = coeffs_from_targets(targets, Sign::minus, Dim(d));
          RootTargets t2 = targets_from_coeffs(c);
          if (!((k == 0 ? t2.x <= 0 : t2.x >= 0) &&
                (k == 1 ? t2.y <= 0 : t2.y >= 0) &&
                (k == 2 ? t2.z <= 0 : t2.z >= 0)))
            continue;
          auto f = fidelities(build_u3(c)).f;
          RootFidelityPoint p{std::sqrt(f[0]), std::sqrt(f[1]),
                              std::sqrt(f[2])};
          worst = std::max(
              worst, std::abs(minus_surface_residual(p, Dim(d), which)) / scale);
          ++done;
        }
      }
    }
    // 1->N with non-negative coefficients saturates the partial bound;
    // N = 2 doubles as the ellipse equality.
    for (int n : {2, 3, 4}) {
      for (int t = 0; t < trials / 2; ++t) {
        std::vector<double> raw(n);
        for (double &v : raw)
          v = rng.uniform(0.0, 1.0) + 1e-3;
        CoeffsN c = normalize_coeffsN(raw, Dim(d));
        auto f = fidelities(build_uN(c)).f;
        worst = std::max(worst,
                         std::abs(bound_1n_residual(f, Dim(d), n)) / scale);
        if (n == 2) {
          const double x = std::sqrt(f[0]), y = std::sqrt(f[1]);
          const double lhs = (x + y) * (x + y) / (2.0 * (d + 1)) +
                             (x - y) * (x - y) / (2.0 * (d - 1));
          worst = std::max(worst, std::abs(lhs - d) / scale);
        }
        ++done;
      }
    }
  }
  return make_result("saturation", done, worst, 1e-9);
}

//! Random-state no-violation sweeps for every bound.
inline CheckResult no_violation(const std::vector<const HullContext *> &ctxs,
                                int trials, std::uint64_t seed) {
  double worst = -1e300;
  int total = 0;
  for (const HullContext *ctx_ptr : ctxs) {
    const HullContext &ctx = *ctx_ptr;
    const int d = ctx.d().value;
    std::vector<BoundCheckReport> reports{
        verify_bound_two_outputs(Dim(d), trials, seed + d),
        verify_bound_subspace(Dim(d), Sign::plus, trials, seed + 10 + d),
        verify_bound_subspace(Dim(d), Sign::minus, trials, seed + 20 + d),
        verify_bound_1n(Dim(d), 3, trials, seed + 30 + d),
        verify_hull_membership(ctx, trials, seed + 40 + d)};
    if (d == 2)
      reports.push_back(verify_bound_1n(Dim(d), 4, trials, seed + 50));
    for (const auto &r : reports) {
      worst = std::max(worst, r.max_residual);
      total += r.trials;
    }
  }
  return make_result("no_violation_sampling", total, worst, 1e-9);
}

//! End-to-end certification: the eigenvalue support function of the
//! relaxed attainable set agrees with the analytic hull mesh, for the
//! three-output hull and the two-output ellipse.
inline CheckResult support_certification(const std::vector<int> &dims,
                                         int directions, int resolution,
                                         std::uint64_t seed) {
  double worst = 0.0;
  for (int d : dims) {
    BoundaryMesh mesh = hull(Dim(d), resolution);
    std::vector<std::array<double, 3>> fs;
    fs.reserve(mesh.points.size());
    for (const auto &mp : mesh.points)
      fs.push_back(mp.p.f());
    Rng rng = Rng(seed).fork(d);
    for (int t = 0; t < directions; ++t) {
      std::vector<double> w{rng.uniform(), rng.uniform(), rng.uniform()};
      const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
      if (norm < 0.05)
        continue;
      const double h = support_function(w, Dim(d));
      double best = -1e300;
      for (const auto &f : fs)
        best = std::max(best, w[0] * f[0] + w[1] * f[1] + w[2] * f[2]);
      worst = std::max(worst, std::abs(h - best) / std::abs(h));
    }
    // Two-observable case: the ellipse arc.
    auto arc = ellipse_1to2(Dim(d), resolution * resolution);
    Rng rng2 = Rng(seed).fork(100 + d);
    for (int t = 0; t < directions; ++t) {
      std::vector<double> w{rng2.uniform(), rng2.uniform()};
      if (w[0] + w[1] < 0.05)
        continue;
      const double h = support_function(w, Dim(d));
      double best = -1e300;
      for (const auto &pt : arc)
        best = std::max(best, w[0] * pt.x * pt.x + w[1] * pt.y * pt.y);
      worst = std::max(worst, std::abs(h - best) / std::abs(h));
    }
  }
  return make_result("support_certification", 4 * directions, worst, 1e-3);
}

//! Orthonormality, incompleteness and cross-element structure of the
//! subspace bases.
inline CheckResult subspace_structure(const std::vector<int> &dims) {
  double worst = 0.0;
  for (int d : dims) {
    Register reg3(Dim(d), {"R", "A", "B"});
    Register reg4(Dim(d), {"R", "A", "B", "C"});
    BasisFamily f12 = phi_basis_12(Dim(d));
    BasisFamily fp = phi_basis_13(Dim(d), Sign::plus);
    BasisFamily fm = phi_basis_13(Dim(d), Sign::minus);
    worst = std::max({worst, f12.gram_defect(), fp.gram_defect(),
                      fm.gram_defect()});

    DeficitReport rep = incompleteness_deficit({fp, fm});
    worst = std::max(worst, -rep.min_eigenvalue);
    worst = std::max(worst, rep.eigenvalues.back() - 1.0);
    DeficitReport rep12 = incompleteness_deficit({f12});
    worst = std::max(worst, -rep12.min_eigenvalue);

    for (const char *out : {"A", "B", "C"}) {
      Operator phi = embed(projector(max_entangled(Dim(d), "R", out)), reg4);
      for (const auto &a : fp.states) {
        StateVector pa = apply_operator(phi, a);
        for (const auto &b : fm.states)
          worst = std::max(worst, std::abs(inner(b, pa)));
      }
      worst = std::max(worst, residual_outside_span(phi, {fp, fm}));
    }
    Operator phi_ra = embed(projector(max_entangled(Dim(d), "R", "A")), reg3);
    worst = std::max(worst, residual_outside_span(phi_ra, {f12}));
  }
  return make_result("subspace_structure", 2, worst, 1e-10);
}

//! Gram-matrix certification: random states give PSD bordered Grams with
//! the predicted block diagonals; machine states make them singular.
inline CheckResult gram_certification(const std::vector<int> &dims,
                                      int trials, std::uint64_t seed) {
  double worst = 0.0;
  int done = 0;
  for (int d : dims) {
    for (int n : {2, 3}) {
      Register reg = reference_register(Dim(d), n);
      Rng rng = Rng(seed).fork(10 * d + n);
      for (int t = 0; t < trials; ++t) {
        StateVector psi = haar_state(reg, rng).scaled(std::sqrt(d));
        GramReport rep = gram_1n(psi, Dim(d), n);
        worst = std::max(worst, -rep.min_eigenvalue);
        worst = std::max(worst,
                         std::abs(rep.block_diagonals[0] - (d + n - 1.0) / n));
        for (int a = 1; a < n; ++a)
          worst = std::max(worst,
                           std::abs(rep.block_diagonals[a] - (d - 1.0) / n));
        ++done;
      }
      // Saturating machine state: singular Gram.
      std::vector<std::string> outputs;
      for (int i = 1; i <= n; ++i)
        outputs.push_back(std::to_string(i));
      std::vector<double> raw(n);
      for (double &v : raw)
        v = rng.uniform(0.2, 1.0);
      CoeffsN c = normalize_coeffsN(raw, Dim(d));
      StateVector base = tensor(
          max_entangled(Dim(d), "0", "1"),
          StateVector::basis(Register(Dim(d), {outputs.begin() + 1,
                                               outputs.end()}),
                             0));
      StateVector acc = StateVector::zero(reg);
      for (int a = 0; a < n; ++a) {
        StateVector shifted = cyclic_shift_state(base, outputs, -a);
        for (std::size_t i = 0; i < reg.dim(); ++i)
          acc[i] += c.alphas[a] * shifted[i];
      }
      GramReport rep = gram_1n(acc.normalized().scaled(std::sqrt(d)), Dim(d), n);
      worst = std::max(worst, std::abs(rep.min_eigenvalue));
      ++done;
    }
  }
  return make_result("gram_certification", done, worst, 1e-8);
}

//! Mixtures on bridging faces reproduce their targets through the Choi
//! state, with the face position solved from the quadratic condition.
inline CheckResult mixing(const std::vector<int> &dims, int targets,
                          std::uint64_t seed) {
  double worst = 0.0;
  int done = 0;
  for (int d : dims) {
    auto ties = find_face_ties(Dim(d), 48, 200);
    if (ties.empty())
      return make_result("mixing", 0, 1.0, 1e-9);
    Rng rng = Rng(seed).fork(d);
    const int per_dim = targets / static_cast<int>(dims.size());
    for (int t = 0; t < per_dim; ++t) {
      const FaceTie &tie = ties[static_cast<std::size_t>(
          rng.uniform() * static_cast<double>(ties.size()))];
      CloningMachine mg = machine_at_support(Dim(d), tie.first);
      CloningMachine mb = machine_at_support(Dim(d), tie.second);
      std::vector<double> fg = fidelities(mg).f;
      std::vector<double> fb = fidelities(mb).f;
      const double p = rng.uniform();
      std::vector<double> target(3);
      for (int k = 0; k < 3; ++k)
        target[k] = p * fg[k] + (1.0 - p) * fb[k];
      MixtureSolution sol = mixture_for_target(target, mg, fg, mb, fb, p);
      // The solved q satisfies the quadratic matching condition.
      const double y = std::sqrt(std::max(0.0, fg[sol.coordinate]));
      const double yp = std::sqrt(std::max(0.0, fb[sol.coordinate]));
      const double lhs = sol.paper_q * y + (1.0 - sol.paper_q) * yp;
      worst = std::max(worst, std::abs(lhs * lhs -
                                       (p * y * y + (1.0 - p) * yp * yp)));
      // Choi fidelities of the mixture hit the target.
      FidelityReport mixed = fidelities(sol.mixture);
      for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::abs(mixed.f[k] - target[k]));
      ++done;
    }
  }
  return make_result("mixing", done, worst, 1e-9);
}

//! Two-fidelity trade-off identity and its 1/(d+N-1) decay law.
inline CheckResult banaszek_family(const std::vector<int> &dims, int trials,
                                   std::uint64_t seed) {
  double worst = 0.0;
  int done = 0;
  for (int d : dims) {
    Rng rng = Rng(seed).fork(d);
    for (int n = 2; n <= 6; ++n) {
      for (int t = 0; t < trials; ++t) {
        TwoFidelityParams p = two_fidelity_params(
            rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0) + 1e-9, n, Dim(d));
        auto [f, g] = fg(p);
        worst = std::max(worst, std::abs(tradeoff_residual(f, g, Dim(d), n)));
        ++done;
      }
    }
  }
  return make_result("banaszek_residual", done, worst, 1e-10);
}

//! Log-log slope of the correction term against (d+N-1) over three decades.
inline CheckResult banaszek_slope(const std::vector<int> &dims) {
  double worst = 0.0;
  for (int d : dims) {
    std::vector<double> xs, ys;
    for (int n : {10, 100, 1000}) {
      TwoFidelityParams p = two_fidelity_params(0.6, 0.8, n, Dim(d));
      auto [f, g] = fg(p);
      const double corr = (d * std::sqrt(g) - std::sqrt(f)) *
                          (d * std::sqrt(g) - std::sqrt(f)) / (d + n - 1.0);
      xs.push_back(std::log(d + n - 1.0));
      ys.push_back(std::log(corr));
    }
    const double mx = (xs[0] + xs[1] + xs[2]) / 3.0;
    const double my = (ys[0] + ys[1] + ys[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
      num += (xs[i] - mx) * (ys[i] - my);
      den += (xs[i] - mx) * (xs[i] - mx);
    }
    worst = std::max(worst, std::abs(num / den + 1.0));
  }
  return make_result("banaszek_slope", 6, worst, 0.01);
}

//! d = 2 structure: the hull uses only the golden ellipsoid and the
//! sphere, and every constructible minus machine stays inside it.
inline CheckResult d2_hull_structure(int trials, std::uint64_t seed,
                                     const HullContext &ctx2) {
  double worst = 0.0;
  BoundaryMesh mesh = hull(Dim(2), 60);
  for (const auto &mp : mesh.points)
    if (mp.label.region == Region::sminus_a ||
        mp.label.region == Region::sminus_b ||
        mp.label.region == Region::sminus_c)
      worst = std::max(worst, 1.0);
  Rng rng = Rng(seed).fork(7);
  int done = 0;
  while (done < trials) {
    Coeffs3 c{0, 0, 0, Sign::minus, Dim(2)};
    try {
      c = normalize_coeffs3(rng.gaussian(), rng.gaussian(), rng.gaussian(),
                            Sign::minus, Dim(2));
    } catch (const std::invalid_argument &) {
      continue;
    }
    auto f = fidelities(build_u3(c)).f;
    worst = std::max(worst, -ctx2.min_slack({f[0], f[1], f[2]}));
    ++done;
  }
  return make_result("d2_hull_structure", done, worst, 1e-9);
}

} // namespace checks

struct VerifyConfig {
  std::vector<int> dims{2, 3};
  int trials = 1000;
  int directions = 500;
  int resolution = 200;
  std::uint64_t seed = 1;
  // Reduced preset for quick runs.
  static VerifyConfig quick() { return {{2, 3}, 200, 60, 80, 1}; }
};

inline std::vector<CheckResult> run_verify_suite(const VerifyConfig &cfg) {
  std::vector<HullContext> ctxs;
  std::vector<const HullContext *> ctx_ptrs;
  bool has_d2 = false;
  for (int d : cfg.dims) {
    ctxs.emplace_back(Dim(d), 96);
    has_d2 |= d == 2;
  }
  for (const auto &c : ctxs)
    ctx_ptrs.push_back(&c);

  std::vector<CheckResult> out;
  out.push_back(checks::symmetric_fidelities(cfg.dims));
  out.push_back(checks::isometry_u3(cfg.dims, std::min(cfg.trials, 200),
                                    cfg.seed));
  out.push_back(checks::isometry_un(cfg.dims, std::min(cfg.trials, 100),
                                    cfg.seed + 1));
  out.push_back(checks::universality(cfg.dims, cfg.trials, cfg.seed + 2));
  out.push_back(checks::closed_form_agreement(cfg.dims,
                                              std::min(cfg.trials, 60),
                                              cfg.seed + 3));
  out.push_back(checks::saturation(cfg.dims, std::min(cfg.trials, 100),
                                   cfg.seed + 4));
  out.push_back(checks::no_violation(ctx_ptrs, cfg.trials, cfg.seed + 5));
  out.push_back(checks::support_certification(cfg.dims, cfg.directions,
                                              cfg.resolution, cfg.seed + 6));
  out.push_back(checks::subspace_structure(cfg.dims));
  out.push_back(checks::gram_certification(cfg.dims, std::min(cfg.trials, 50),
                                           cfg.seed + 7));
  out.push_back(checks::mixing(cfg.dims, 50, cfg.seed + 8));
  out.push_back(checks::banaszek_family(cfg.dims, std::min(cfg.trials, 100),
                                        cfg.seed + 9));
  out.push_back(checks::banaszek_slope(cfg.dims));
  if (has_d2) {
    for (const auto &c : ctxs)
      if (c.d().value == 2)
        out.push_back(checks::d2_hull_structure(std::min(cfg.trials, 200),
                                                cfg.seed + 10, c));
  }
  return out;
}

} // namespace qclone

#endif // QCLONE_VERIFY_SUITE_HPP
