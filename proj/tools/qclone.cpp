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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qclone/banaszek.hpp"
#include "qclone/boundary.hpp"
#include "qclone/emit.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/machines.hpp"
#include "qclone/oracle.hpp"
#include "qclone/verify_suite.hpp"

using namespace qclone;

namespace {

// QCLONE_OUTPUT_DIR overrides the directory of relative output paths.
std::string resolve_out_path(const std::string &path) {
  if (path.empty() || path.front() == '/')
    return path;
  const char *dir = std::getenv("QCLONE_OUTPUT_DIR");
  if (!dir || !*dir)
    return path;
  return std::string(dir) + "/" + path;
}

void write_records(const std::vector<Record> &records,
                   const std::vector<std::string> &header,
                   const std::string &out, const std::string &format) {
  const std::string path = resolve_out_path(out);
  std::ostream *os = &std::cout;
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file)
      throw std::runtime_error("cannot open output path: " + path);
    os = &file;
  }
  if (format == "csv")
    write_csv(*os, header, records);
  else
    write_json(*os, records);
}

int validated_d(int d) {
  if (d < 2 || d > 4)
    throw CLI::ValidationError("--d", "qudit dimension must be in [2, 4]");
  return d;
}

int validated_n(int n) {
  if (n < 2 || n > 6)
    throw CLI::ValidationError("--n", "output count must be in [2, 6]");
  return n;
}

Sign parse_sign(const std::string &s) {
  if (s == "+" || s == "plus")
    return Sign::plus;
  if (s == "-" || s == "minus")
    return Sign::minus;
  throw CLI::ValidationError("--sign", "expected + or -");
}

std::string machine_region(Dim d, const std::vector<double> &f) {
  if (f.size() != 3)
    return "n/a";
  HullContext ctx(d, 96);
  RootFidelityPoint p{std::sqrt(std::max(0.0, f[0])),
                      std::sqrt(std::max(0.0, f[1])),
                      std::sqrt(std::max(0.0, f[2]))};
  return to_string(classify(p, ctx));
}

int cmd_machine(int d_opt, const std::string &sign_opt,
                const std::vector<double> &coeffs,
                const std::vector<double> &targets,
                const std::vector<double> &alphas, const std::string &out,
                const std::string &format) {
  const Dim d(validated_d(d_opt));
  Record rec;
  rec.add("d", d.value);
  std::vector<double> f, F;
  if (!alphas.empty()) {
    if (static_cast<int>(alphas.size()) > 6)
      throw CLI::ValidationError("--alphas", "at most 6 outputs");
    CoeffsN c = normalize_coeffsN(alphas, d);
    if (c.d.value == 3 && c.n() > 4)
      throw CLI::ValidationError("--alphas",
                                 "memory cap: N <= 4 at d = 3 for machines");
    if (c.d.value == 4 && c.n() > 3)
      throw CLI::ValidationError("--alphas",
                                 "memory cap: N <= 3 at d = 4 for machines");
    CloningMachine m = build_uN(c);
    FidelityReport r = fidelities(m);
    f = r.f;
    F = r.F;
    rec.add("family", std::string("uN"));
    for (int a = 0; a < c.n(); ++a)
      rec.add("alpha" + std::to_string(a), c.alphas[a]);
    auto x = targets_from_coeffs(c);
    for (int a = 0; a < c.n(); ++a)
      rec.add("x" + std::to_string(a + 1), x[a]);
  } else {
    const Sign sign = parse_sign(sign_opt);
    Coeffs3 c{0, 0, 0, sign, d};
    if (!coeffs.empty()) {
      if (coeffs.size() != 3)
        throw CLI::ValidationError("--coeffs", "expected three values");
      c = normalize_coeffs3(coeffs[0], coeffs[1], coeffs[2], sign, d);
    } else if (!targets.empty()) {
      if (targets.size() != 3)
        throw CLI::ValidationError("--targets", "expected three values");
      c = coeffs_from_targets(RootTargets{targets[0], targets[1], targets[2]},
                              sign, d);
    } else {
      throw CLI::ValidationError("machine",
                                 "need --coeffs, --targets or --alphas");
    }
    CloningMachine m = build_u3(c);
    FidelityReport r = fidelities(m);
    f = r.f;
    F = r.F;
    rec.add("family", std::string(sign == Sign::plus ? "u3+" : "u3-"));
    rec.add("alpha", c.alpha);
    rec.add("beta", c.beta);
    rec.add("gamma", c.gamma);
    RootTargets t = targets_from_coeffs(c);
    rec.add("x", t.x);
    rec.add("y", t.y);
    rec.add("z", t.z);
  }
  const std::string region = machine_region(d, f);
  for (std::size_t k = 0; k < f.size(); ++k)
    rec.add("f" + std::to_string(k + 1), f[k]);
  for (std::size_t k = 0; k < F.size(); ++k)
    rec.add("F" + std::to_string(k + 1), F[k]);
  rec.add("region", region);

  std::cout << "machine:";
  for (const auto &[name, value] : rec.fields)
    std::cout << " " << name << "=" << format_field(value);
  std::cout << "\n";
  if (!out.empty())
    write_records({rec}, header_of({rec}), out, format);
  return 0;
}

int cmd_boundary12(int d_opt, int resolution, const std::string &out,
                   const std::string &format) {
  const Dim d(validated_d(d_opt));
  auto pts = ellipse_1to2(d, resolution);
  std::vector<Record> records;
  records.reserve(pts.size());
  for (const auto &p : pts) {
    Record rec;
    rec.add("x", p.x);
    rec.add("y", p.y);
    rec.add("fA", p.x * p.x);
    rec.add("fB", p.y * p.y);
    rec.add("FA", fidelity_from_f(p.x * p.x, d));
    rec.add("FB", fidelity_from_f(p.y * p.y, d));
    records.push_back(std::move(rec));
  }
  write_records(records, {"x", "y", "fA", "fB", "FA", "FB"}, out, format);
  return 0;
}

int cmd_boundary13(int d_opt, int resolution, const std::string &component,
                   const std::string &out, const std::string &format) {
  const Dim d(validated_d(d_opt));
  BoundaryMesh mesh{d, resolution, component, {}, "", false};
  if (component == "hull")
    mesh = hull(d, resolution);
  else if (component == "plus")
    mesh = surface_plus(d, resolution);
  else if (component == "minus")
    mesh = surfaces_minus(d, resolution);
  else if (component == "cap")
    mesh = sphere_cap(d, resolution);
  else
    throw CLI::ValidationError("--component",
                               "expected hull, plus, minus or cap");
  if (!mesh.note.empty())
    std::cerr << "warning: " << mesh.note << "\n";
  std::vector<Record> records;
  records.reserve(mesh.points.size());
  for (const auto &mp : mesh.points) {
    Record rec;
    rec.add("x", mp.p.x);
    rec.add("y", mp.p.y);
    rec.add("z", mp.p.z);
    rec.add("fA", mp.p.x * mp.p.x);
    rec.add("fB", mp.p.y * mp.p.y);
    rec.add("fC", mp.p.z * mp.p.z);
    rec.add("region", to_string(mp.label));
    records.push_back(std::move(rec));
  }
  write_records(records, {"x", "y", "z", "fA", "fB", "fC", "region"}, out,
                format);
  return 0;
}

int cmd_bound1n(int d_opt, int n_opt, const std::vector<double> &alphas,
                int trials, std::uint64_t seed, bool seed_given,
                const std::string &out, const std::string &format) {
  const Dim d(validated_d(d_opt));
  const int n = validated_n(n_opt);
  if ((d.value == 3 && n > 4) || (d.value == 4 && n > 3))
    throw CLI::ValidationError("--n", "memory cap exceeded for this d");
  std::vector<CoeffsN> machines;
  if (!alphas.empty()) {
    if (static_cast<int>(alphas.size()) != n)
      throw CLI::ValidationError("--alphas", "length must equal --n");
    machines.push_back(normalize_coeffsN(alphas, d));
  } else {
    if (!seed_given)
      throw CLI::ValidationError("--seed",
                                 "seed is required for random sweeps");
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
      std::vector<double> raw(n);
      for (double &v : raw)
        v = rng.gaussian();
      machines.push_back(normalize_coeffsN(raw, d));
    }
  }
  std::vector<Record> records;
  std::vector<std::string> header;
  for (int a = 0; a < n; ++a)
    header.push_back("alpha" + std::to_string(a));
  for (int k = 1; k <= n; ++k)
    header.push_back("f" + std::to_string(k));
  header.push_back("residual");
  for (const auto &c : machines) {
    FidelityReport r = fidelities(build_uN(c));
    Record rec;
    for (int a = 0; a < n; ++a)
      rec.add("alpha" + std::to_string(a), c.alphas[a]);
    for (int k = 0; k < n; ++k)
      rec.add("f" + std::to_string(k + 1), r.f[k]);
    rec.add("residual", bound_1n_residual(r.f, d, n));
    records.push_back(std::move(rec));
  }
  write_records(records, header, out, format);
  return 0;
}

int cmd_banaszek(int d_opt, double g_min, double g_max, int resolution,
                 const std::vector<int> &n_values, const std::string &out,
                 const std::string &format) {
  const Dim d(validated_d(d_opt));
  if (!(g_min > 0.0) || !(g_max <= d.value) || !(g_min <= g_max))
    throw CLI::ValidationError("--g-min/--g-max",
                               "need 0 < g_min <= g_max <= d");
  std::vector<double> gs;
  for (int i = 0; i < resolution; ++i)
    gs.push_back(resolution == 1
                     ? g_min
                     : g_min + (g_max - g_min) * i / (resolution - 1));
  auto rows = asymptotic_curve(d, gs, n_values);
  std::vector<std::string> header{"g", "f_asymptotic"};
  for (int n : n_values)
    header.push_back("f_N" + std::to_string(n));
  std::vector<Record> records;
  for (const auto &row : rows) {
    Record rec;
    rec.add("g", row.g);
    rec.add("f_asymptotic", row.f_asymptotic);
    for (std::size_t k = 0; k < n_values.size(); ++k)
      rec.add("f_N" + std::to_string(n_values[k]), row.f_at_n[k]);
    records.push_back(std::move(rec));
  }
  write_records(records, header, out, format);
  return 0;
}

int cmd_mix(int d_opt, const std::vector<double> &e1,
            const std::vector<double> &e2, double p, const std::string &out,
            const std::string &format) {
  const Dim d(validated_d(d_opt));
  if (e1.size() != 3 || e2.size() != 3)
    throw CLI::ValidationError("--e1/--e2", "expected three root values");
  auto machine_for = [&](const std::vector<double> &xyz) {
    RootFidelityPoint p3{xyz[0], xyz[1], xyz[2]};
    // Golden point first; otherwise try the signed minus patterns.
    if (std::abs(plus_surface_residual(p3, d)) < 1e-7 * d.value * (d.value + 1))
      return build_u3(coeffs_from_targets(RootTargets{xyz[0], xyz[1], xyz[2]},
                                          Sign::plus, d));
    for (int sx : {1, -1})
      for (int sy : {1, -1})
        for (int sz : {1, -1}) {
          try {
            Coeffs3 c = coeffs_from_targets(
                RootTargets{sx * xyz[0], sy * xyz[1], sz * xyz[2]},
                Sign::minus, d);
            RootTargets t = targets_from_coeffs(c);
            if (std::abs(std::abs(t.x) - xyz[0]) < 1e-7 &&
                std::abs(std::abs(t.y) - xyz[1]) < 1e-7 &&
                std::abs(std::abs(t.z) - xyz[2]) < 1e-7)
              return build_u3(c);
          } catch (const std::invalid_argument &) {
          }
        }
    throw CLI::ValidationError("--e1/--e2",
                               "endpoint is not a machine boundary point");
  };
  CloningMachine mg = machine_for(e1);
  CloningMachine mb = machine_for(e2);
  std::vector<double> fg_vals = fidelities(mg).f;
  std::vector<double> fb_vals = fidelities(mb).f;
  std::vector<double> target(3);
  for (int k = 0; k < 3; ++k)
    target[k] = p * fg_vals[k] + (1.0 - p) * fb_vals[k];
  MixtureSolution sol =
      mixture_for_target(target, mg, fg_vals, mb, fb_vals, p);
  FidelityReport achieved = fidelities(sol.mixture);

  Record rec;
  rec.add("d", d.value);
  rec.add("p", p);
  rec.add("q", sol.paper_q);
  rec.add("coordinate", static_cast<long long>(sol.coordinate));
  const char *names[3] = {"A", "B", "C"};
  for (int k = 0; k < 3; ++k)
    rec.add(std::string("target_f") + names[k], target[k]);
  for (int k = 0; k < 3; ++k)
    rec.add(std::string("achieved_f") + names[k], achieved.f[k]);
  std::cout << "mix:";
  for (const auto &[name, value] : rec.fields)
    std::cout << " " << name << "=" << format_field(value);
  std::cout << "\n";
  if (!out.empty())
    write_records({rec}, header_of({rec}), out, format);
  return 0;
}

int cmd_verify(const std::vector<int> &dims_opt, int trials, int directions,
               int resolution, std::uint64_t seed, bool quick,
               const std::vector<std::string> &tol_overrides,
               const std::string &out) {
  VerifyConfig cfg;
  if (quick)
    cfg = VerifyConfig::quick();
  cfg.trials = trials > 0 ? trials : cfg.trials;
  cfg.directions = directions > 0 ? directions : cfg.directions;
  cfg.resolution = resolution > 0 ? resolution : cfg.resolution;
  cfg.seed = seed;
  if (!dims_opt.empty()) {
    cfg.dims.clear();
    for (int d : dims_opt)
      cfg.dims.push_back(validated_d(d));
  }
  std::map<std::string, double> overrides;
  for (const auto &ov : tol_overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--tol", "expected name=value");
    overrides[ov.substr(0, eq)] = std::stod(ov.substr(eq + 1));
  }

  auto results = run_verify_suite(cfg);
  bool all_pass = true;
  std::vector<Record> records;
  for (auto &r : results) {
    double tol = r.tolerance;
    auto it = overrides.find(r.name);
    if (it != overrides.end()) {
      tol = it->second;
      r.pass = r.max_residual <= tol;
    }
    all_pass &= r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
              << " trials=" << r.trials
              << " max_residual=" << format_double(r.max_residual)
              << " tolerance=" << format_double(tol) << "\n";
    Record rec;
    rec.add("name", r.name);
    rec.add("trials", r.trials);
    rec.add("max_residual", r.max_residual);
    rec.add("tolerance", tol);
    rec.add("verdict", std::string(r.pass ? "pass" : "fail"));
    records.push_back(std::move(rec));
  }

  if (!out.empty()) {
    nlohmann::ordered_json report;
    report["meta"]["dims"] = cfg.dims;
    report["meta"]["trials"] = cfg.trials;
    report["meta"]["directions"] = cfg.directions;
    report["meta"]["resolution"] = cfg.resolution;
    report["meta"]["seed"] = cfg.seed;
    nlohmann::ordered_json tols;
    for (const auto &r : results) {
      auto it = overrides.find(r.name);
      tols[r.name] = it != overrides.end() ? it->second : r.tolerance;
    }
    report["meta"]["tolerances"] = tols;
    report["checks"] = nlohmann::ordered_json::array();
    for (const auto &rec : records)
      report["checks"].push_back(to_json(rec));
    const std::string path = resolve_out_path(out);
    std::ofstream file(path);
    if (!file)
      throw std::runtime_error("cannot open output path: " + path);
    file << report.dump(2) << "\n";
  }

  if (!all_pass) {
    for (const auto &r : results)
      if (!r.pass)
        std::cerr << "verification failed: " << r.name
                  << " residual=" << format_double(r.max_residual) << "\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Extremal asymmetric qudit cloning machines: construction, "
               "fidelity trade-off boundaries, and certification"};
  app.require_subcommand(1);

  // machine
  auto *machine = app.add_subcommand(
      "machine", "Build a cloning machine and report its fidelities");
  int m_d = 2;
  std::string m_sign = "+";
  std::vector<double> m_coeffs, m_targets, m_alphas;
  std::string m_out, m_format = "json";
  machine->add_option("--d", m_d, "qudit dimension")->required();
  machine->add_option("--sign", m_sign, "machine family sign (+ or -)");
  machine->add_option("--coeffs", m_coeffs, "alpha,beta,gamma")
      ->delimiter(',');
  machine->add_option("--targets", m_targets, "x,y,z root-fidelity targets")
      ->delimiter(',');
  machine->add_option("--alphas", m_alphas, "alpha_0..alpha_{N-1} for 1->N")
      ->delimiter(',');
  machine->add_option("--out", m_out, "output path");
  machine->add_option("--format", m_format, "csv or json");

  // boundary12
  auto *b12 = app.add_subcommand("boundary12",
                                 "Two-output trade-off boundary data");
  int b12_d = 2, b12_res = 200;
  std::string b12_out, b12_format = "csv";
  b12->add_option("--d", b12_d, "qudit dimension")->required();
  b12->add_option("--resolution", b12_res, "number of boundary rows");
  b12->add_option("--out", b12_out, "output path");
  b12->add_option("--format", b12_format, "csv or json");

  // boundary13
  auto *b13 = app.add_subcommand("boundary13",
                                 "Three-output trade-off boundary mesh");
  int b13_d = 2, b13_res = 200;
  std::string b13_comp = "hull", b13_out, b13_format = "csv";
  b13->add_option("--d", b13_d, "qudit dimension")->required();
  b13->add_option("--resolution", b13_res, "normal grid resolution");
  b13->add_option("--component", b13_comp, "hull, plus, minus or cap");
  b13->add_option("--out", b13_out, "output path");
  b13->add_option("--format", b13_format, "csv or json");

  // bound1n
  auto *b1n = app.add_subcommand(
      "bound1n", "1->N machines against the symmetric-sector bound");
  int b1n_d = 2, b1n_n = 3, b1n_trials = 100;
  std::uint64_t b1n_seed = 0;
  std::vector<double> b1n_alphas;
  std::string b1n_out, b1n_format = "csv";
  b1n->add_option("--d", b1n_d, "qudit dimension")->required();
  b1n->add_option("--n", b1n_n, "number of outputs")->required();
  b1n->add_option("--alphas", b1n_alphas, "explicit coefficients")
      ->delimiter(',');
  b1n->add_option("--trials", b1n_trials, "random machines to sample");
  auto *b1n_seed_opt = b1n->add_option("--seed", b1n_seed, "PRNG seed");
  b1n->add_option("--out", b1n_out, "output path");
  b1n->add_option("--format", b1n_format, "csv or json");

  // banaszek
  auto *bz = app.add_subcommand(
      "banaszek", "Two-fidelity trade-off curves and the large-N limit");
  int bz_d = 2, bz_res = 200;
  double bz_gmin = 1.0, bz_gmax = 2.0;
  std::vector<int> bz_ns{10, 100, 1000};
  std::string bz_out, bz_format = "csv";
  bz->add_option("--d", bz_d, "qudit dimension")->required();
  bz->add_option("--g-min", bz_gmin, "lower end of the g grid");
  bz->add_option("--g-max", bz_gmax, "upper end of the g grid");
  bz->add_option("--resolution", bz_res, "grid size");
  bz->add_option("--n-values", bz_ns, "finite N curves to include")
      ->delimiter(',');
  bz->add_option("--out", bz_out, "output path");
  bz->add_option("--format", bz_format, "csv or json");

  // mix
  auto *mix = app.add_subcommand(
      "mix", "Solve the mixture hitting a target on a hull face");
  int mix_d = 2;
  std::vector<double> mix_e1, mix_e2;
  double mix_p = 0.5;
  std::string mix_out, mix_format = "json";
  mix->add_option("--d", mix_d, "qudit dimension")->required();
  mix->add_option("--e1", mix_e1, "first endpoint x,y,z")
      ->required()
      ->delimiter(',');
  mix->add_option("--e2", mix_e2, "second endpoint x,y,z")
      ->required()
      ->delimiter(',');
  mix->add_option("--p", mix_p, "f-space convexity parameter")->required();
  mix->add_option("--out", mix_out, "output path");
  mix->add_option("--format", mix_format, "csv or json");

  // verify
  auto *verify = app.add_subcommand(
      "verify", "Run the full certification suite");
  std::vector<int> v_dims;
  int v_trials = 0, v_dirs = 0, v_res = 0;
  std::uint64_t v_seed = 0;
  bool v_quick = false;
  std::vector<std::string> v_tols;
  std::string v_out;
  verify->add_option("--d", v_dims, "dimensions to verify (default 2 3)");
  verify->add_option("--trials", v_trials, "random trials per check");
  verify->add_option("--directions", v_dirs, "support directions");
  verify->add_option("--resolution", v_res, "hull mesh resolution");
  verify->add_option("--seed", v_seed, "PRNG seed")->required();
  verify->add_flag("--quick", v_quick, "reduced preset");
  verify->add_option("--tol", v_tols, "override: check_name=value");
  verify->add_option("--out", v_out, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (machine->parsed())
      return cmd_machine(m_d, m_sign, m_coeffs, m_targets, m_alphas, m_out,
                         m_format);
    if (b12->parsed())
      return cmd_boundary12(b12_d, b12_res, b12_out, b12_format);
    if (b13->parsed())
      return cmd_boundary13(b13_d, b13_res, b13_comp, b13_out, b13_format);
    if (b1n->parsed())
      return cmd_bound1n(b1n_d, b1n_n, b1n_alphas, b1n_trials, b1n_seed,
                         b1n_seed_opt->count() > 0, b1n_out, b1n_format);
    if (bz->parsed())
      return cmd_banaszek(bz_d, bz_gmin, bz_gmax, bz_res, bz_ns, bz_out,
                          bz_format);
    if (mix->parsed())
      return cmd_mix(mix_d, mix_e1, mix_e2, mix_p, mix_out, mix_format);
    if (verify->parsed())
      return cmd_verify(v_dims, v_trials, v_dirs, v_res, v_seed, v_quick,
                        v_tols, v_out);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
