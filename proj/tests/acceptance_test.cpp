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
//
// End-to-end acceptance suite. Each test prints one PASS/FAIL line with the
// measured residual against its pinned tolerance.

#include <cstdio>

#include "qclone/verify_suite.hpp"

#include "gtest/gtest.h"

using namespace qclone;

namespace {

const std::vector<int> kDims{2, 3};

void report(int criterion, const char *label, const CheckResult &r) {
  std::printf("CRITERION %2d %-24s %s  trials=%d  max_residual=%.3e  "
              "tolerance=%.0e\n",
              criterion, label, r.pass ? "PASS" : "FAIL", r.trials,
              r.max_residual, r.tolerance);
  EXPECT_TRUE(r.pass) << label << " residual " << r.max_residual
                      << " exceeds " << r.tolerance;
}

} // namespace

// Choi-computed F equals (2N+d-1)/(N(d+1)) to 1e-10 for
// (N,d) in {2,3,4} x {2,3}; two independent paths (closed form and dense
// Choi computation).
TEST(acceptance, criterion_01_symmetric_fidelities) {
  report(1, "symmetric_fidelities", checks::symmetric_fidelities(kDims));
}

// Isometry defect below 1e-10 for 200 random coefficient triples per sign
// (d = 2, 3) and 100 random 1->N coefficient sets up to (N, d) = (4, 3).
TEST(acceptance, criterion_02_isometry) {
  report(2, "isometry_u3", checks::isometry_u3(kDims, 200, 20260808));
  report(2, "isometry_un", checks::isometry_un(kDims, 100, 20260809));
}

// Per-output fidelity variance over 1e3 Haar inputs below 1e-18 for every
// constructed machine family.
TEST(acceptance, criterion_03_universality) {
  report(3, "universality", checks::universality(kDims, 1000, 20260810));
}

// Machine fidelity points satisfy their bound with |residual| < 1e-9: the
// two-output ellipse at N = 2, the golden surface for the plus family, the
// cone ellipsoids for the minus family in the stated sign patterns, and
// the 1->N bound for non-negative coefficients.
TEST(acceptance, criterion_04_saturation) {
  report(4, "saturation", checks::saturation(kDims, 100, 20260811));
}

// 1e3 random states per bound produce zero violations beyond 1e-9 at
// d = 2, 3 (two-output, subspace-restricted, 1->N, hull membership).
TEST(acceptance, criterion_05_no_violation) {
  HullContext ctx2(Dim(2), 96);
  HullContext ctx3(Dim(3), 96);
  report(5, "no_violation",
         checks::no_violation({&ctx2, &ctx3}, 1000, 20260812));
}

// 500 random positive-octant directions: the eigenvalue support function
// of the relaxed set matches the analytic hull mesh to 1e-3 relative at
// 200^2 resolution (three-output hull and two-output ellipse).
TEST(acceptance, criterion_06_support_certification) {
  report(6, "support_certification",
         checks::support_certification(kDims, 500, 200, 20260813));
}

// Basis families have Gram = I to 1e-10, the incompleteness deficit has
// eigenvalues in [-1e-10, 1], and all plus/minus cross elements vanish.
TEST(acceptance, criterion_07_subspace_structure) {
  report(7, "subspace_structure", checks::subspace_structure(kDims));
}

// 50 random targets on bridging faces: the solved mixture's Choi
// fidelities match the target to 1e-9, with the face position from the
// quadratic matching condition.
TEST(acceptance, criterion_08_mixing) {
  report(8, "mixing", checks::mixing(kDims, 50, 20260814));
}

// Two-fidelity trade-off identity: residual below 1e-10 over 100 random
// parameter pairs per (N, d) in {2..6} x {2, 3}; the finite-N correction
// decays as 1/(d+N-1) (log-log slope -1 +- 0.01 over N in {10, 100, 1000}).
TEST(acceptance, criterion_09_two_fidelity_tradeoff) {
  report(9, "banaszek_residual", checks::banaszek_family(kDims, 100, 20260815));
  report(9, "banaszek_slope", checks::banaszek_slope(kDims));
}

// d = 2: the boundary uses only the golden ellipsoid and the restricted
// sphere, and every constructible minus machine point lies inside it with
// membership slack >= -1e-9.
TEST(acceptance, criterion_10_d2_structure) {
  HullContext ctx2(Dim(2), 96);
  report(10, "d2_hull_structure",
         checks::d2_hull_structure(200, 20260816, ctx2));
}

// The Gram-matrix certification ties the no-violation evidence to the
// machine constructions: random states give PSD bordered Grams with the
// predicted diagonals; machine states sit exactly on the PSD boundary.
TEST(acceptance, gram_certification) {
  report(5, "gram_certification",
         checks::gram_certification(kDims, 50, 20260817));
}

// Closed forms agree with the dense Choi path across all families (backs
// criteria 1 and 4 with an independent route).
TEST(acceptance, closed_form_agreement) {
  report(1, "closed_form_vs_choi",
         checks::closed_form_agreement(kDims, 60, 20260818));
}
