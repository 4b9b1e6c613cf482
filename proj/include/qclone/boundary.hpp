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

#ifndef QCLONE_BOUNDARY_HPP
#define QCLONE_BOUNDARY_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qclone/eigen.hpp"
#include "qclone/qudit.hpp"

namespace qclone {

//=========================================================================
// Trade-off boundaries in root-fidelity coordinates x = sqrt(f_A),
// y = sqrt(f_B), z = sqrt(f_C). Surface generation runs in x-space; all
// convexity and mixing arithmetic runs in f-space, where the attainable
// set is convex.
//=========================================================================

struct RootFidelityPoint {
  double x, y, z;

  std::array<double, 3> f() const { return {x * x, y * y, z * z}; }
};

enum class Region {
  splus_central,
  splus_corner_a,
  splus_corner_b,
  splus_corner_c,
  sminus_a,
  sminus_b,
  sminus_c,
  sphere_cap,
  mixed_face,
  interior,
  infeasible,
};

//! Boundary components in f-space whose convex hull is the attainable set.
enum class Component { plus, minus_a, minus_b, minus_c, cap };

struct RegionLabel {
  Region region;
  // Populated for mixed_face: the two components the face bridges.
  std::optional<std::pair<Component, Component>> face;
};

inline std::string to_string(Component c) {
  switch (c) {
  case Component::plus:
    return "SPlus";
  case Component::minus_a:
    return "SMinus_A";
  case Component::minus_b:
    return "SMinus_B";
  case Component::minus_c:
    return "SMinus_C";
  case Component::cap:
    return "SphereCap";
  }
  return "?";
}

inline std::string to_string(const RegionLabel &l) {
  switch (l.region) {
  case Region::splus_central:
    return "SPlus_central";
  case Region::splus_corner_a:
    return "SPlus_corner_A";
  case Region::splus_corner_b:
    return "SPlus_corner_B";
  case Region::splus_corner_c:
    return "SPlus_corner_C";
  case Region::sminus_a:
    return "SMinus_A";
  case Region::sminus_b:
    return "SMinus_B";
  case Region::sminus_c:
    return "SMinus_C";
  case Region::sphere_cap:
    return "SphereCap";
  case Region::mixed_face:
    if (l.face)
      return "MixedFace(" + to_string(l.face->first) + "," +
             to_string(l.face->second) + ")";
    return "MixedFace";
  case Region::interior:
    return "Interior";
  case Region::infeasible:
    return "Infeasible";
  }
  return "?";
}

struct MeshPoint {
  RootFidelityPoint p;
  RegionLabel label;
};

struct BoundaryMesh {
  Dim d;
  int resolution;
  std::string component; // "plus", "minus", "cap", "hull"
  std::vector<MeshPoint> points;
  std::string note; // set e.g. for the empty d=2 minus mesh
  bool contained_in_hull = false; // cap meshes at d >= 3
};

//=========================================================================
// Defining quadratic forms.
//=========================================================================

//! Residual of the symmetric-subspace bound:
//!   x^2+y^2+z^2 - (x+y+z)^2/(d+2) - d(d-1); zero on the golden surface.
inline double plus_surface_residual(const RootFidelityPoint &p, Dim d) {
  const double s = p.x + p.y + p.z;
  return p.x * p.x + p.y * p.y + p.z * p.z - s * s / (d.value + 2) -
         d.value * (d.value - 1.0);
}

//! The three antisymmetric-subspace ellipsoids, indexed by the coordinate
//! that dominates its restriction cone (a: x >= y+z, b: y >= x+z,
//! c: z >= x+y). The quadratic adds (v.x)^2/(d-2) with v = (1,-1,-1),
//! (-1,1,-1), (-1,-1,1) respectively; only meaningful for d >= 3.
inline std::array<double, 3> minus_cone_vector(Component which) {
  switch (which) {
  case Component::minus_a:
    return {1.0, -1.0, -1.0};
  case Component::minus_b:
    return {-1.0, 1.0, -1.0};
  case Component::minus_c:
    return {-1.0, -1.0, 1.0};
  default:
    throw std::invalid_argument("not a minus component");
  }
}

inline double minus_surface_residual(const RootFidelityPoint &p, Dim d,
                                     Component which) {
  if (d.value < 3)
    throw std::invalid_argument("minus surfaces exist only for d >= 3");
  const auto v = minus_cone_vector(which);
  const double proj = v[0] * p.x + v[1] * p.y + v[2] * p.z;
  return p.x * p.x + p.y * p.y + p.z * p.z + proj * proj / (d.value - 2) -
         d.value * (d.value + 1.0);
}

//! v.x >= 0 inside the restriction cone of a minus component.
inline double minus_cone_slack(const RootFidelityPoint &p, Component which) {
  const auto v = minus_cone_vector(which);
  return v[0] * p.x + v[1] * p.y + v[2] * p.z;
}

inline double sphere_residual(const RootFidelityPoint &p, Dim d) {
  return p.x * p.x + p.y * p.y + p.z * p.z - d.value * (d.value + 1.0);
}

//! min over the triangle conditions x <= y+z, y <= x+z, z <= x+y.
inline double triangle_cone_slack(const RootFidelityPoint &p) {
  return std::min({p.y + p.z - p.x, p.x + p.z - p.y, p.x + p.y - p.z});
}

//! Residual of the 1->N symmetric-sector bound:
//!   sum f_k - (sum sqrt(f_k))^2/(d+N-1) - d(d-1).
inline double bound_1n_residual(const std::vector<double> &f, Dim d, int n) {
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("fidelity tuple length must equal N");
  double sum = 0.0, root_sum = 0.0;
  for (double v : f) {
    if (v < -1e-12 || v > d.value * d.value + 1e-9)
      throw std::invalid_argument("fidelity outside [0, d^2]");
    sum += v;
    root_sum += std::sqrt(std::max(0.0, v));
  }
  return sum - root_sum * root_sum / (d.value + n - 1.0) -
         d.value * (d.value - 1.0);
}

//! Plane tests separating the golden subregions; the sign of each entry
//! matches the sign of the corresponding machine coefficient.
inline std::array<double, 3> golden_plane_values(const RootFidelityPoint &p,
                                                 Dim d) {
  return {(d.value + 1) * p.x - (p.y + p.z), (d.value + 1) * p.y - (p.x + p.z),
          (d.value + 1) * p.z - (p.x + p.y)};
}

//=========================================================================
// Support machinery: maximize sum_i w_i x_i^2 over quadric patches.
// Everything reduces to small generalized eigenproblems plus explicit
// boundary candidates, so each support point sits exactly on its surface.
//=========================================================================

namespace detail {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline Matrix to_matrix(const Mat3 &m) {
  Matrix out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out(i, j) = m[i][j];
  return out;
}

struct SupportCandidate {
  double value;
  Vec3 x;
};

//! All stationary points of sum w_i x_i^2 on {x : x^T Q x = rhs} (full
//! quadric, no sign constraints): generalized eigenvectors scaled onto the
//! surface, one representative per eigenpair with a sign that favors the
//! positive octant.
inline std::vector<SupportCandidate>
quadric_stationary(const Matrix &q, const Vec3 &w, double rhs) {
  const std::size_t n = q.rows();
  auto qe = eigh(q);
  // Q^{-1/2}
  Matrix qis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cxd s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += qe.vectors(i, k) * std::conj(qe.vectors(j, k)) /
             std::sqrt(qe.values[k]);
      qis(i, j) = s;
    }
  Matrix wm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    wm(i, i) = w[i];
  Matrix sym = qis * wm * qis;
  // Round-off symmetrization happens inside eigh.
  auto se = eigh(sym);
  std::vector<SupportCandidate> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<cxd> y(n);
    for (std::size_t i = 0; i < n; ++i)
      y[i] = se.vectors(i, k);
    std::vector<cxd> x = qis.apply(y);
    Vec3 p{0, 0, 0};
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = x[i].real();
      sum += p[i];
    }
    const double flip = sum < 0 ? -1.0 : 1.0;
    const double scale = flip * std::sqrt(rhs);
    for (std::size_t i = 0; i < n; ++i)
      p[i] *= scale;
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      value += w[i] * p[i] * p[i];
    out.push_back({value, p});
  }
  return out;
}

//! 2x2 version used for faces: stationary points of u^T Wm u on the curve
//! u^T Q u = rhs, with a possibly non-diagonal objective Wm.
inline std::vector<std::array<double, 2>>
quadric_stationary_2d(const std::array<std::array<double, 2>, 2> &q,
                      const std::array<std::array<double, 2>, 2> &wm,
                      double rhs) {
  Matrix qm(2, 2), wmm(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      qm(i, j) = q[i][j];
      wmm(i, j) = wm[i][j];
    }
  auto qe = eigh(qm);
  Matrix qis(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cxd s = 0.0;
      for (int k = 0; k < 2; ++k)
        s += qe.vectors(i, k) * std::conj(qe.vectors(j, k)) /
             std::sqrt(qe.values[k]);
      qis(i, j) = s;
    }
  auto se = eigh(qis * wmm * qis);
  std::vector<std::array<double, 2>> out;
  for (int k = 0; k < 2; ++k) {
    std::vector<cxd> y{se.vectors(0, k), se.vectors(1, k)};
    std::vector<cxd> x = qis.apply(y);
    double u = x[0].real(), v = x[1].real();
    const double flip = (u + v) < 0 ? -1.0 : 1.0;
    u *= flip * std::sqrt(rhs);
    v *= flip * std::sqrt(rhs);
    out.push_back({u, v});
  }
  return out;
}

//! Stationary points on the sphere-edge curve x_k = x_i1 + x_i2 (in the
//! (x_i1, x_i2) chart the curve is 2u^2 + 2uv + 2v^2 = rhs).
inline std::vector<std::array<double, 2>>
edge_curve_stationary(const Vec3 &w, int k, int i1, int i2, double rhs) {
  const std::array<std::array<double, 2>, 2> q{{{2.0, 1.0}, {1.0, 2.0}}};
  const std::array<std::array<double, 2>, 2> wm{
      {{w[i1] + w[k], w[k]}, {w[k], w[i2] + w[k]}}};
  return quadric_stationary_2d(q, wm, rhs);
}

struct Support {
  double value = -1e300;
  Vec3 x{0, 0, 0};
};

constexpr double kFeasTol = 1e-9;

inline bool nonneg(const Vec3 &p) {
  return p[0] >= -kFeasTol && p[1] >= -kFeasTol && p[2] >= -kFeasTol;
}

inline void consider(Support &best, const Vec3 &p, const Vec3 &w) {
  double v = 0.0;
  for (int i = 0; i < 3; ++i)
    v += w[i] * p[i] * p[i];
  if (v > best.value) {
    best.value = v;
    best.x = p;
  }
}

//! Support of the golden component over {x >= 0, x^T A x = d(d-1)} with
//! A = I - J/(d+2).
inline Support support_plus(Dim d, const Vec3 &w) {
  const double rhs = d.value * (d.value - 1.0);
  Mat3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a[i][j] = (i == j ? 1.0 : 0.0) - 1.0 / (d.value + 2);
  Support best;
  for (const auto &cand : quadric_stationary(to_matrix(a), w, rhs))
    if (nonneg(cand.x))
      consider(best, cand.x, w);
  // Coordinate faces x_i = 0.
  for (int i = 0; i < 3; ++i) {
    const int u = (i + 1) % 3, v = (i + 2) % 3;
    const std::array<std::array<double, 2>, 2> q{
        {{a[u][u], a[u][v]}, {a[v][u], a[v][v]}}};
    const std::array<std::array<double, 2>, 2> wm{
        {{w[u], 0.0}, {0.0, w[v]}}};
    for (const auto &st : quadric_stationary_2d(q, wm, rhs)) {
      Vec3 p{0, 0, 0};
      p[u] = st[0];
      p[v] = st[1];
      if (nonneg(p))
        consider(best, p, w);
    }
    // Axes.
    Vec3 axis{0, 0, 0};
    axis[u] = std::sqrt(rhs / a[u][u]);
    consider(best, axis, w);
  }
  return best;
}

//! Support of one antisymmetric component over its cone patch (d >= 3).
inline Support support_minus(Dim d, Component which, const Vec3 &w) {
  const double rhs = d.value * (d.value + 1.0);
  const auto v = minus_cone_vector(which);
  Mat3 b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      b[i][j] = (i == j ? 1.0 : 0.0) + v[i] * v[j] / (d.value - 2);
  const int k = which == Component::minus_a ? 0
                : which == Component::minus_b ? 1
                                              : 2;
  const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
  auto in_cone = [&](const Vec3 &p) {
    return v[0] * p[0] + v[1] * p[1] + v[2] * p[2] >= -kFeasTol;
  };

  Support best;
  for (const auto &cand : quadric_stationary(to_matrix(b), w, rhs))
    if (nonneg(cand.x) && in_cone(cand.x))
      consider(best, cand.x, w);

  // Cone face x_k = x_{i1} + x_{i2}: the extra quadric term vanishes and
  // the curve is the sphere edge.
  for (const auto &st : edge_curve_stationary(w, k, i1, i2, rhs)) {
    Vec3 p{0, 0, 0};
    p[i1] = st[0];
    p[i2] = st[1];
    p[k] = st[0] + st[1];
    if (nonneg(p))
      consider(best, p, w);
  }
  for (int corner : {i1, i2}) {
    Vec3 p{0, 0, 0};
    const int other = corner == i1 ? i2 : i1;
    const double t = std::sqrt(rhs / 2.0);
    p[other] = t;
    p[k] = t;
    consider(best, p, w);
  }

  // Coordinate faces x_{i1} = 0 or x_{i2} = 0 inside the cone.
  for (int zero : {i1, i2}) {
    const int other = zero == i1 ? i2 : i1;
    const std::array<std::array<double, 2>, 2> q{
        {{b[other][other], b[other][k]}, {b[k][other], b[k][k]}}};
    const std::array<std::array<double, 2>, 2> wm{
        {{w[other], 0.0}, {0.0, w[k]}}};
    for (const auto &st : quadric_stationary_2d(q, wm, rhs)) {
      Vec3 p{0, 0, 0};
      p[other] = st[0];
      p[k] = st[1];
      if (nonneg(p) && in_cone(p))
        consider(best, p, w);
    }
  }
  // Cone axis x_k alone.
  {
    Vec3 p{0, 0, 0};
    p[k] = std::sqrt(rhs / b[k][k]);
    consider(best, p, w);
  }
  return best;
}

//! Support of the restricted sphere. Its f-space image is flat (the
//! simplex sum f = d(d+1)), so extremes sit on the triangle-equality
//! edge curves; each edge coincides with a minus-component cone face.
inline Support support_cap(Dim d, const Vec3 &w) {
  const double rhs = d.value * (d.value + 1.0);
  Support best;
  for (int k = 0; k < 3; ++k) {
    const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
    for (const auto &st : edge_curve_stationary(w, k, i1, i2, rhs)) {
      Vec3 p{0, 0, 0};
      p[i1] = st[0];
      p[i2] = st[1];
      p[k] = st[0] + st[1];
      if (nonneg(p))
        consider(best, p, w);
    }
    // Edge endpoints (one coordinate zero).
    Vec3 p{0, 0, 0};
    const double t = std::sqrt(rhs / 2.0);
    p[i1] = t;
    p[k] = t;
    consider(best, p, w);
  }
  return best;
}

} // namespace detail

//=========================================================================
// Per-direction hull support over all components.
//=========================================================================

struct SupportPoint {
  double value;
  Component component;
  RootFidelityPoint x;
};

inline std::vector<Component> hull_components(Dim d) {
  if (d.value == 2)
    return {Component::plus, Component::cap};
  return {Component::plus, Component::minus_a, Component::minus_b,
          Component::minus_c, Component::cap};
}

inline detail::Support component_support(Dim d, Component c,
                                         const std::array<double, 3> &w) {
  switch (c) {
  case Component::plus:
    return detail::support_plus(d, w);
  case Component::cap:
    return detail::support_cap(d, w);
  default:
    return detail::support_minus(d, c, w);
  }
}

//! Supports of every component in direction w (f-space weights), sorted
//! best first.
inline std::vector<SupportPoint>
hull_supports(Dim d, const std::array<double, 3> &w) {
  std::vector<SupportPoint> out;
  for (Component c : hull_components(d)) {
    const auto s = component_support(d, c, w);
    out.push_back({s.value, c, RootFidelityPoint{s.x[0], s.x[1], s.x[2]}});
  }
  std::sort(out.begin(), out.end(),
            [](const SupportPoint &a, const SupportPoint &b) {
              return a.value > b.value;
            });
  return out;
}

//! h(w) = max over the attainable hull of w . f.
inline double hull_support_value(Dim d, const std::array<double, 3> &w) {
  return hull_supports(d, w).front().value;
}

//=========================================================================
// Meshes.
//=========================================================================

//! Boundary arc of the 1->2 trade-off (the well-known ellipse), swept
//! radially: points satisfy the equality exactly.
struct EllipsePoint {
  double x, y;
};

inline std::vector<EllipsePoint> ellipse_1to2(Dim d, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("resolution must be at least 2");
  const double dd = d.value;
  const double half_pi = 1.5707963267948966;
  const double quarter_pi = 0.5 * half_pi;
  // Sweep angles covering [0, pi/2] with the symmetric direction pi/4
  // always on the grid, so the x = y row is exact at any resolution.
  std::vector<double> angles;
  angles.reserve(resolution);
  if (resolution == 2) {
    angles = {0.0, half_pi};
  } else {
    const int h1 = (resolution + 1) / 2; // covers [0, pi/4] inclusive
    const int h2 = resolution - h1;      // covers (pi/4, pi/2]
    for (int k = 0; k < h1; ++k)
      angles.push_back(quarter_pi * k / (h1 - 1));
    for (int j = 1; j <= h2; ++j)
      angles.push_back(quarter_pi + quarter_pi * j / h2);
  }
  // x^T A2 x = d with A2 = [[d, -1], [-1, d]] / (d^2 - 1).
  std::vector<EllipsePoint> pts;
  pts.reserve(resolution);
  for (double th : angles) {
    const double ux = std::cos(th), uy = std::sin(th);
    const double quad =
        (dd * ux * ux - 2.0 * ux * uy + dd * uy * uy) / (dd * dd - 1.0);
    const double r = std::sqrt(dd / quad);
    pts.push_back({r * ux, r * uy});
  }
  return pts;
}

namespace detail {

//! Directions covering the positive octant at a given resolution.
inline std::vector<Vec3> octant_grid(int resolution) {
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double half_pi = 1.5707963267948966;
  for (int i = 0; i < resolution; ++i) {
    const double theta = half_pi * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double phi = half_pi * j / (resolution - 1);
      dirs.push_back({std::sin(theta) * std::cos(phi),
                      std::sin(theta) * std::sin(phi), std::cos(theta)});
    }
  }
  return dirs;
}

inline RegionLabel plus_plane_label(const RootFidelityPoint &p, Dim d,
                                    double tol = 1e-9) {
  const auto s = golden_plane_values(p, d);
  int pos = 0, neg = 0;
  int pos_idx = -1;
  for (int i = 0; i < 3; ++i) {
    if (s[i] > tol) {
      ++pos;
      pos_idx = i;
    } else if (s[i] < -tol) {
      ++neg;
    }
  }
  if (pos == 3 && neg == 0)
    return {Region::splus_central, std::nullopt};
  if (pos == 1) {
    // Corner region (or its boundary): one positive coefficient.
    const Region r = pos_idx == 0   ? Region::splus_corner_a
                     : pos_idx == 1 ? Region::splus_corner_b
                                    : Region::splus_corner_c;
    return {r, std::nullopt};
  }
  if (neg == 0)
    return {Region::splus_central, std::nullopt}; // plane-equality boundary
  return {Region::interior, std::nullopt}; // two positive, one negative
}

} // namespace detail

//! Equality mesh of the golden ellipsoid over the positive octant, each
//! point labeled central/corner by the separating planes (points with two
//! positive and one negative coefficient are not extremal: Interior).
inline BoundaryMesh surface_plus(Dim d, int resolution) {
  BoundaryMesh mesh{d, resolution, "plus", {}, "", false};
  const double rhs = d.value * (d.value - 1.0);
  for (const auto &u : detail::octant_grid(resolution)) {
    const double s = u[0] + u[1] + u[2];
    const double quad =
        u[0] * u[0] + u[1] * u[1] + u[2] * u[2] - s * s / (d.value + 2);
    const double r = std::sqrt(rhs / quad);
    RootFidelityPoint p{r * u[0], r * u[1], r * u[2]};
    mesh.points.push_back({p, detail::plus_plane_label(p, d)});
  }
  return mesh;
}

//! Equality meshes of the three antisymmetric ellipsoids within their
//! restriction cones; empty with a note at d = 2.
inline BoundaryMesh surfaces_minus(Dim d, int resolution) {
  BoundaryMesh mesh{d, resolution, "minus", {}, "", false};
  if (d.value == 2) {
    mesh.note = "empty at d=2: the boundary is the convex hull of the "
                "golden ellipsoid and the restricted sphere";
    return mesh;
  }
  const double rhs = d.value * (d.value + 1.0);
  for (Component which :
       {Component::minus_a, Component::minus_b, Component::minus_c}) {
    const auto v = minus_cone_vector(which);
    const Region region = which == Component::minus_a   ? Region::sminus_a
                          : which == Component::minus_b ? Region::sminus_b
                                                        : Region::sminus_c;
    for (const auto &u : detail::octant_grid(resolution)) {
      const double proj = v[0] * u[0] + v[1] * u[1] + v[2] * u[2];
      if (proj < 0.0)
        continue; // outside the restriction cone
      const double quad = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] +
                          proj * proj / (d.value - 2);
      const double r = std::sqrt(rhs / quad);
      RootFidelityPoint p{r * u[0], r * u[1], r * u[2]};
      mesh.points.push_back({p, RegionLabel{region, std::nullopt}});
    }
  }
  return mesh;
}

//! Spherical mesh within the triangle cone; contained in the hull for
//! d >= 3, part of the boundary structure only at d = 2.
inline BoundaryMesh sphere_cap(Dim d, int resolution) {
  BoundaryMesh mesh{d, resolution, "cap", {}, "", d.value >= 3};
  const double r = std::sqrt(d.value * (d.value + 1.0));
  for (const auto &u : detail::octant_grid(resolution)) {
    RootFidelityPoint p{r * u[0], r * u[1], r * u[2]};
    if (triangle_cone_slack(p) < -1e-12)
      continue;
    mesh.points.push_back({p, RegionLabel{Region::sphere_cap, std::nullopt}});
  }
  return mesh;
}

namespace detail {

inline RegionLabel component_label(Component c, const RootFidelityPoint &p,
                                   Dim d) {
  switch (c) {
  case Component::plus:
    return plus_plane_label(p, d);
  case Component::minus_a:
    return {Region::sminus_a, std::nullopt};
  case Component::minus_b:
    return {Region::sminus_b, std::nullopt};
  case Component::minus_c:
    return {Region::sminus_c, std::nullopt};
  case Component::cap:
    return {Region::sphere_cap, std::nullopt};
  }
  return {Region::interior, std::nullopt};
}

} // namespace detail

//! Hull boundary parameterized by outward normals: for every direction on
//! the octant grid, the farthest attainable point in that direction over
//! all component surfaces. Where two components tie, samples of the
//! bridging segment are emitted as MixedFace points (attained by machine
//! mixtures). At d = 2 only the golden ellipsoid and the sphere enter.
inline BoundaryMesh hull(Dim d, int resolution) {
  BoundaryMesh mesh{d, resolution, "hull", {}, "", false};
  const double tie_tol = 1e-9 * d.value * (d.value + 1.0);
  for (const auto &w : detail::octant_grid(resolution)) {
    auto sup = hull_supports(d, w);
    const auto &top = sup.front();
    mesh.points.push_back({top.x, detail::component_label(top.component, top.x, d)});
    for (std::size_t i = 1; i < sup.size(); ++i) {
      if (top.value - sup[i].value > tie_tol)
        break;
      if (sup[i].component == top.component)
        continue;
      // Bridging face between two components: emit the second support
      // point and interior samples of the segment in f-space.
      mesh.points.push_back(
          {sup[i].x, detail::component_label(sup[i].component, sup[i].x, d)});
      const auto fa = top.x.f(), fb = sup[i].x.f();
      for (double t : {0.25, 0.5, 0.75}) {
        std::array<double, 3> f{};
        for (int k = 0; k < 3; ++k)
          f[k] = t * fa[k] + (1.0 - t) * fb[k];
        RootFidelityPoint p{std::sqrt(f[0]), std::sqrt(f[1]), std::sqrt(f[2])};
        mesh.points.push_back(
            {p, RegionLabel{Region::mixed_face,
                            std::make_pair(top.component, sup[i].component)}});
      }
    }
  }
  return mesh;
}

//=========================================================================
// Bridging faces: normals where two different components support the same
// hyperplane. The two support points there are machine points and the
// segment between them is a face of the hull.
//=========================================================================

struct FaceTie {
  std::array<double, 3> w;
  SupportPoint first, second;
};

namespace detail {

inline std::array<double, 3> normalize_dir(std::array<double, 3> w) {
  const double n = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  for (auto &v : w)
    v /= n;
  return w;
}

} // namespace detail

//! Bridging faces connect support points that differ in one coordinate, so
//! their outward normals carry a zero weight: scan the three boundary arcs
//! of the normal octant, where the two touching components tie exactly.
inline std::vector<FaceTie> find_face_ties(Dim d, int scan_resolution,
                                           std::size_t max_count) {
  std::vector<FaceTie> ties;
  const double scale = d.value * (d.value + 1.0);
  const double half_pi = 1.5707963267948966;
  for (int zero = 0; zero < 3 && ties.size() < max_count; ++zero) {
    const int i1 = (zero + 1) % 3, i2 = (zero + 2) % 3;
    for (int j = 1; j < scan_resolution - 1 && ties.size() < max_count; ++j) {
      const double phi = half_pi * j / (scan_resolution - 1);
      std::array<double, 3> w{0, 0, 0};
      w[i1] = std::sin(phi);
      w[i2] = std::cos(phi);
      auto sup = hull_supports(d, w);
      if (sup.size() < 2 || sup[0].component == sup[1].component)
        continue;
      if (sup[0].value - sup[1].value > 1e-9 * scale)
        continue;
      // Skip degenerate faces where the two support points coincide.
      const auto fa = sup[0].x.f(), fb = sup[1].x.f();
      double dist = 0.0;
      for (int k = 0; k < 3; ++k)
        dist = std::max(dist, std::abs(fa[k] - fb[k]));
      if (dist < 1e-6 * scale)
        continue;
      const SupportPoint *a = &sup[0], *b = &sup[1];
      if (static_cast<int>(a->component) > static_cast<int>(b->component))
        std::swap(a, b);
      ties.push_back({w, *a, *b});
    }
  }
  return ties;
}

//=========================================================================
// Hull membership and classification.
//=========================================================================

//! Precomputed support values on a normal grid. Because every stored
//! value is an exact support evaluation, slack = H(w) - w.f is never
//! negative for attainable points: coarse grids only under-detect
//! violations, never produce false ones.
class HullContext {
public:
  explicit HullContext(Dim d, int grid = 96) : d_(d), grid_(grid) {
    for (const auto &w : detail::octant_grid(grid)) {
      normals_.push_back(w);
      values_.push_back(hull_support_value(d, w));
    }
  }

  Dim d() const { return d_; }

  //! min_w [H(w) - w . f]; negative means certified infeasible.
  double min_slack(const std::array<double, 3> &f,
                   std::size_t *argmin = nullptr) const {
    double best = 1e300;
    std::size_t bi = 0;
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      const auto &w = normals_[i];
      const double s =
          values_[i] - (w[0] * f[0] + w[1] * f[1] + w[2] * f[2]);
      if (s < best) {
        best = s;
        bi = i;
      }
    }
    if (argmin)
      *argmin = bi;
    return best;
  }

  //! Local refinement of the support slack around the coarse minimizer,
  //! using analytic component supports.
  double refined_slack(const std::array<double, 3> &f,
                       std::array<double, 3> *normal = nullptr) const {
    std::size_t start;
    double best = min_slack(f, &start);
    // Spherical coordinates of the coarse minimizer.
    const auto &w0 = normals_[start];
    double theta = std::acos(std::min(1.0, std::max(-1.0, w0[2])));
    double phi = std::atan2(w0[1], w0[0]);
    if (phi < 0)
      phi = 0;
    double step = 1.5707963267948966 / (grid_ - 1);
    std::array<double, 3> best_w = w0;
    for (int level = 0; level < 4; ++level) {
      for (int di = -4; di <= 4; ++di)
        for (int dj = -4; dj <= 4; ++dj) {
          const double th = std::min(1.5707963267948966,
                                     std::max(0.0, theta + di * step / 4));
          const double ph = std::min(1.5707963267948966,
                                     std::max(0.0, phi + dj * step / 4));
          const std::array<double, 3> w{std::sin(th) * std::cos(ph),
                                        std::sin(th) * std::sin(ph),
                                        std::cos(th)};
          const double s = hull_support_value(d_, w) -
                           (w[0] * f[0] + w[1] * f[1] + w[2] * f[2]);
          if (s < best) {
            best = s;
            theta = th;
            phi = ph;
            best_w = w;
          }
        }
      step /= 4;
    }
    if (normal)
      *normal = best_w;
    return best;
  }

private:
  Dim d_;
  int grid_;
  std::vector<std::array<double, 3>> normals_;
  std::vector<double> values_;
};

//! Deterministic region classification of a positive-octant point.
inline RegionLabel classify(const RootFidelityPoint &p, const HullContext &ctx,
                            double surface_tol = 1e-9) {
  const Dim d = ctx.d();
  const double scale = d.value * (d.value + 1.0);
  const auto f = p.f();

  const double slack = ctx.min_slack(f);
  if (slack < -1e-9 * scale)
    return {Region::infeasible, std::nullopt};

  if (std::abs(plus_surface_residual(p, d)) <= surface_tol * scale) {
    RegionLabel l = detail::plus_plane_label(p, d);
    if (l.region != Region::interior)
      return l;
  }
  if (d.value >= 3) {
    for (Component which :
         {Component::minus_a, Component::minus_b, Component::minus_c}) {
      if (std::abs(minus_surface_residual(p, d, which)) <=
              surface_tol * scale &&
          minus_cone_slack(p, which) >= -surface_tol * scale)
        return detail::component_label(which, p, d);
    }
  }
  if (std::abs(sphere_residual(p, d)) <= surface_tol * scale &&
      triangle_cone_slack(p) >= -surface_tol * scale) {
    // Flat in f-space: only points the hull actually supports count.
    if (slack <= 1e-6 * scale)
      return {Region::sphere_cap, std::nullopt};
    return {Region::interior, std::nullopt};
  }

  // On no single surface: check for a bridging face.
  if (slack <= 1e-3 * scale) {
    std::array<double, 3> w{};
    const double refined = ctx.refined_slack(f, &w);
    if (refined <= 1e-6 * scale) {
      auto sup = hull_supports(d, w);
      if (sup.size() >= 2 &&
          sup[0].value - sup[1].value <= 1e-6 * scale &&
          sup[0].component != sup[1].component)
        return {Region::mixed_face,
                std::make_pair(sup[0].component, sup[1].component)};
      return {Region::mixed_face, std::nullopt};
    }
  }
  return {Region::interior, std::nullopt};
}

} // namespace qclone

#endif // QCLONE_BOUNDARY_HPP
