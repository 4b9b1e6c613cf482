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

#include "qclone/fidelity.hpp"
#include "qclone/machines.hpp"

#include "gtest/gtest.h"

using namespace qclone;

TEST(normalize_coeffs3, symmetric_directions) {
  // (1,1,1), sign +, d=2: quadratic form 3 + 3 = 6.
  Coeffs3 c = normalize_coeffs3(1, 1, 1, Sign::plus, Dim(2));
  EXPECT_NEAR(c.alpha, 1.0 / std::sqrt(6.0), 1e-14);
  EXPECT_NEAR(c.normalization_defect(), 0.0, 1e-14);

  // (1,0,0) is already normalized for either sign.
  for (Sign s : {Sign::plus, Sign::minus}) {
    Coeffs3 e = normalize_coeffs3(1, 0, 0, s, Dim(2));
    EXPECT_NEAR(e.alpha, 1.0, 1e-14);
    EXPECT_NEAR(e.beta, 0.0, 1e-14);
  }

  // (1,1,1), sign -, d=3: Q = 3 - (2/3)*3 = 1, coefficients unchanged.
  Coeffs3 m = normalize_coeffs3(1, 1, 1, Sign::minus, Dim(3));
  EXPECT_NEAR(m.alpha, 1.0, 1e-14);

  // Symmetric direction is not normalizable for sign -, d=2.
  EXPECT_THROW(normalize_coeffs3(1, 1, 1, Sign::minus, Dim(2)),
               std::invalid_argument);
}

TEST(targets, closed_forms_and_roundtrip) {
  // Symmetric +, d=2: x = y = z = (d+2)/sqrt(6), f = x^2 = 8/3.
  Coeffs3 sym = normalize_coeffs3(1, 1, 1, Sign::plus, Dim(2));
  RootTargets t = targets_from_coeffs(sym);
  EXPECT_NEAR(t.x, 4.0 / std::sqrt(6.0), 1e-13);
  EXPECT_NEAR(t.y, t.x, 1e-14);
  EXPECT_NEAR(t.x * t.x, 8.0 / 3.0, 1e-13);

  // (1,0,0), +: (x,y,z) = (d,1,1).
  Coeffs3 triv = normalize_coeffs3(1, 0, 0, Sign::plus, Dim(3));
  RootTargets tt = targets_from_coeffs(triv);
  EXPECT_NEAR(tt.x, 3.0, 1e-14);
  EXPECT_NEAR(tt.y, 1.0, 1e-14);
  EXPECT_NEAR(tt.z, 1.0, 1e-14);

  // Round-trip through the linear solve, both signs at d=3.
  Rng rng(41);
  for (Sign s : {Sign::plus, Sign::minus}) {
    for (int trial = 0; trial < 50; ++trial) {
      Coeffs3 c = normalize_coeffs3(rng.gaussian(), rng.gaussian(),
                                    rng.gaussian(), s, Dim(3));
      RootTargets rt = targets_from_coeffs(c);
      Coeffs3 back = coeffs_from_targets(rt, s, Dim(3));
      const double sign_fix = (back.alpha * c.alpha + back.beta * c.beta +
                               back.gamma * c.gamma) < 0
                                  ? -1.0
                                  : 1.0;
      EXPECT_NEAR(back.alpha * sign_fix, c.alpha, 1e-10);
      EXPECT_NEAR(back.beta * sign_fix, c.beta, 1e-10);
      EXPECT_NEAR(back.gamma * sign_fix, c.gamma, 1e-10);
    }
  }

  // Minus map at d=2 needs x+y+z = 0 and then solves consistently.
  EXPECT_THROW(coeffs_from_targets(RootTargets{1.0, 1.0, 1.0}, Sign::minus,
                                   Dim(2)),
               std::invalid_argument);
  Coeffs3 edge = coeffs_from_targets(RootTargets{0.0, std::sqrt(3.0),
                                                 -std::sqrt(3.0)},
                                     Sign::minus, Dim(2));
  RootTargets et = targets_from_coeffs(edge);
  EXPECT_NEAR(et.x, 0.0, 1e-12);
  EXPECT_NEAR(et.y, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(et.z, -std::sqrt(3.0), 1e-12);
}

TEST(build_u3, isometry_random_sweep) {
  Rng rng(7);
  for (int d : {2, 3}) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      for (int trial = 0; trial < 200; ++trial) {
        double a = rng.gaussian(), b = rng.gaussian(), g = rng.gaussian();
        Coeffs3 c{0, 0, 0, s, Dim(d)};
        try {
          c = normalize_coeffs3(a, b, g, s, Dim(d));
        } catch (const std::invalid_argument &) {
          continue; // direction with non-positive quadratic form
        }
        CloningMachine m = build_u3(c);
        EXPECT_LT(m.isometry_defect(), 1e-10);
      }
    }
  }
}

TEST(build_uN, isometry_random_sweep) {
  Rng rng(13);
  for (int d : {2, 3}) {
    for (int n : {2, 3, 4}) {
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> raw(n);
        for (double &v : raw)
          v = rng.gaussian();
        CloningMachine m = build_uN(normalize_coeffsN(raw, Dim(d)));
        EXPECT_LT(m.isometry_defect(), 1e-10);
      }
    }
  }
}

TEST(build_uN, output_pairing_follows_coefficient_index) {
  // alpha = (0, 1, 0) puts the clone on output 2: f = (1, 4, 1) at d=2.
  CoeffsN c = normalize_coeffsN({0, 1, 0}, Dim(2));
  FidelityReport r = fidelities(build_uN(c));
  ASSERT_EQ(r.f.size(), 3u);
  EXPECT_NEAR(r.f[0], 1.0, 1e-10);
  EXPECT_NEAR(r.f[1], 4.0, 1e-10);
  EXPECT_NEAR(r.f[2], 1.0, 1e-10);

  // Same for the 1->3 family: beta alone clones onto B.
  Coeffs3 c3 = normalize_coeffs3(0, 1, 0, Sign::plus, Dim(2));
  FidelityReport r3 = fidelities(build_u3(c3));
  EXPECT_NEAR(r3.f[0], 1.0, 1e-10);
  EXPECT_NEAR(r3.f[1], 4.0, 1e-10);
  EXPECT_NEAR(r3.f[2], 1.0, 1e-10);
}

TEST(apply_machine, trace_one_and_trivial_cloner) {
  Register in(Dim(2), {"in"});
  Rng rng(19);
  CloningMachine triv = build_u3(normalize_coeffs3(1, 0, 0, Sign::plus, Dim(2)));
  for (int i = 0; i < 5; ++i) {
    StateVector psi = haar_state(in, rng);
    Operator rho = apply_machine(triv, psi);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    // Marginal on A is the input projector.
    Operator rho_a = partial_trace(rho, {"A"});
    EXPECT_LT((rho_a.matrix() - projector(psi).matrix()).max_abs(), 1e-12);
  }
}

TEST(apply_machine, symmetric_output_marginal) {
  // Symmetric U+ on |0>, d=2: each clone is F|0><0| + (1-F)|1><1| with F=7/9.
  CloningMachine sym = build_u3(normalize_coeffs3(1, 1, 1, Sign::plus, Dim(2)));
  Register in(Dim(2), {"in"});
  StateVector zero = StateVector::basis(in, 0);
  Operator rho = apply_machine(sym, zero);
  for (const char *out : {"A", "B", "C"}) {
    Operator m = partial_trace(rho, {out});
    EXPECT_NEAR(m.matrix()(0, 0).real(), 7.0 / 9.0, 1e-12);
    EXPECT_NEAR(m.matrix()(1, 1).real(), 2.0 / 9.0, 1e-12);
    EXPECT_LT(std::abs(m.matrix()(0, 1)), 1e-12);
  }
}

TEST(mixture, face_position_quadratic) {
  // Endpoint fidelities y^2 = 3 and y'^2 = 1 with p = 1/2: the root-space
  // position is q = (sqrt(2)-1)/(sqrt(3)-1).
  const double q =
      solve_face_position(std::sqrt(3.0), 1.0, 0.5);
  EXPECT_NEAR(q, (std::sqrt(2.0) - 1.0) / (std::sqrt(3.0) - 1.0), 1e-14);
  // Endpoint cases.
  EXPECT_NEAR(solve_face_position(std::sqrt(3.0), 1.0, 0.0), 0.0, 1e-14);
  EXPECT_NEAR(solve_face_position(std::sqrt(3.0), 1.0, 1.0), 1.0, 1e-14);
  // Degenerate face: q = p.
  EXPECT_NEAR(solve_face_position(2.0, 2.0, 0.3), 0.3, 1e-14);
}

TEST(mixture, choi_reproduces_face_target) {
  // d=2 face between a golden point and a sphere-edge point sharing f_B, f_C.
  const Dim d(2);
  Coeffs3 cg = coeffs_from_targets(
      RootTargets{2.0 / std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0)},
      Sign::plus, d);
  Coeffs3 cb = coeffs_from_targets(
      RootTargets{0.0, std::sqrt(3.0), -std::sqrt(3.0)}, Sign::minus, d);
  CloningMachine mg = build_u3(cg);
  CloningMachine mb = build_u3(cb);
  std::vector<double> fg = fidelities(mg).f;
  std::vector<double> fb = fidelities(mb).f;
  EXPECT_NEAR(fg[0], 4.0 / 3.0, 1e-10);
  EXPECT_NEAR(fb[0], 0.0, 1e-10);
  EXPECT_NEAR(fg[1], 3.0, 1e-10);
  EXPECT_NEAR(fb[1], 3.0, 1e-10);

  for (double p : {0.0, 0.25, 0.5, 1.0}) {
    std::vector<double> target(3);
    for (int k = 0; k < 3; ++k)
      target[k] = p * fg[k] + (1.0 - p) * fb[k];
    MixtureSolution sol = mixture_for_target(target, mg, fg, mb, fb, p);
    EXPECT_EQ(sol.coordinate, 0u);
    EXPECT_NEAR(sol.paper_q, std::sqrt(p), 1e-12);
    FidelityReport mixed = fidelities(sol.mixture);
    for (int k = 0; k < 3; ++k)
      EXPECT_NEAR(mixed.f[k], target[k], 1e-9);
  }

  // A target off the face is rejected.
  EXPECT_THROW(mixture_for_target({1.0, 1.0, 1.0}, mg, fg, mb, fb, 0.5),
               std::invalid_argument);
}

TEST(mixture, f_values_affine_in_weights) {
  const Dim d(3);
  CloningMachine a = build_u3(normalize_coeffs3(1, 0.2, -0.1, Sign::plus, d));
  CloningMachine b = build_u3(normalize_coeffs3(0.3, 1, 0.5, Sign::plus, d));
  std::vector<double> fa = fidelities(a).f;
  std::vector<double> fb = fidelities(b).f;
  for (double w : {0.0, 0.3, 0.7}) {
    MachineMixture mix{{{w, a}, {1.0 - w, b}}};
    std::vector<double> fm = fidelities(mix).f;
    for (int k = 0; k < 3; ++k)
      EXPECT_NEAR(fm[k], w * fa[k] + (1.0 - w) * fb[k], 1e-10);
  }
}
