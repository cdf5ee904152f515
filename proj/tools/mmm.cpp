// Copyright 2026 The mmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mmm: build qudit states with maximally mixed marginals and compute their
// local-unitary invariants.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes:
//   0 success / valid / indistinguishable
//   1 malformed input, usage or I/O error
//   2 alpha violates the constraints (validate)
//   3 block path disagrees with the full-matrix oracle (invariants)
//   4 LU-inequivalent (compare)
//   5 invariance violated under local unitaries (probe)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmm/alpha.hpp"
#include "mmm/discrepancy.hpp"
#include "mmm/invariants.hpp"
#include "mmm/io.hpp"
#include "mmm/qutrit.hpp"
#include "mmm/state.hpp"

namespace {

using namespace mmm;

enum Exit : int {
  kOk = 0,
  kBadInput = 1,
  kConstraintViolation = 2,
  kOracleMismatch = 3,
  kInequivalent = 4,
  kInvarianceViolation = 5,
};

/// Where an alpha matrix comes from: a JSON file, the qutrit family or a
/// named example. Exactly one must be given.
struct AlphaSource {
  std::string path;
  std::vector<double> family;
  std::string example;
  int d = 0;
  bool no_validate = false;
  double validate_tol = kValidationTol;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "alpha JSON file");
    cmd->add_option("--family", family, "qutrit family angles THETA PHI")->expected(2);
    cmd->add_option("--example", example, "bell-seed | uniform-diagonal | gauss-phase");
    cmd->add_option("-d,--dim", d, "dimension for --example");
    cmd->add_flag("--no-validate", no_validate, "accept alpha off the constraint set");
    cmd->add_option("--validate-tol", validate_tol, "constraint tolerance")
        ->check(CLI::PositiveNumber);
  }

  AlphaMatrix load() const {
    const int given = !path.empty() + !family.empty() + !example.empty();
    if (given != 1)
      throw ParseError("give exactly one of an input file, --family or --example");
    if (!family.empty())
      return qutrit_family(QutritFamilyParams{family[0], family[1]}.reduced());
    if (!example.empty()) {
      if (d < 2) throw ParseError("--example needs --dim >= 2");
      try {
        return named_example(example, d);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    return from_matrix(alpha_from_json(read_json_file(path)), path);
  }

  AlphaMatrix from_matrix(const ComplexMatrix& m, const std::string& name) const {
    if (no_validate) return AlphaMatrix::unchecked(m);
    Validation v = validate(m, validate_tol);
    if (!v.accepted())
      throw ParseError("'" + name + "' violates the constraints (max residual " +
                       format_number(v.residual.max()) + "); see `mmm validate`");
    return *std::move(v.matrix);
  }
};

double comparison_tolerance(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MMM_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0))
      throw ParseError("MMM_TOL must be a positive number");
    return tol;
  }
  return kMultisetTol;
}

void emit(const json& j) {
  std::cout << j.dump(2) << '\n';
}

int run_validate(const std::string& path, double tol) {
  const ComplexMatrix m = alpha_from_json(read_json_file(path));
  const Validation v = validate(m, tol);
  emit({{"valid", v.accepted()},
        {"d", m.rows()},
        {"tolerance", tol},
        {"residuals", to_json(v.residual)}});
  if (!v.accepted()) std::cerr << "alpha violates the constraints\n";
  return v.accepted() ? kOk : kConstraintViolation;
}

int run_build(const AlphaSource& src, const std::string& out) {
  const AlphaMatrix a = src.load();
  const BipartiteState s = build_state(a, true);
  const Certificate cert = certify(s);
  std::cerr << "certificate: " << to_json(cert).dump() << '\n';
  const json j = state_to_json(s);
  if (out.empty()) {
    emit(j);
  } else {
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write '" + out + "'");
    f << j.dump(2) << '\n';
  }
  return kOk;
}

int run_invariants(const AlphaSource& src, BasisNorm norm, double tol) {
  const AlphaMatrix a = src.load();
  const InvariantSet blocks = block_invariants(a, norm);
  json out = to_json(blocks);

  const BipartiteState s = build_state(a, true);
  const Certificate cert = certify(s);
  out["certificate"] = to_json(cert);
  if (!cert.ok()) {
    std::cerr << "state is not certified; oracle cross-check skipped\n";
    out["oracle_deviation"] = nullptr;
    emit(out);
    return kOk;
  }
  const Deviation dev = deviation(blocks, oracle_invariants(s, norm));
  out["oracle_deviation"] = to_json(dev);
  out["tolerance"] = tol;
  emit(out);
  if (!(dev.max_multiset() <= tol)) {
    std::cerr << "block path disagrees with the full-matrix oracle\n";
    return kOracleMismatch;
  }
  return kOk;
}

int run_scan(int resolution, const std::string& out) {
  const auto grid = qutrit::negativity_grid(resolution);
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write '" + out + "'");
  qutrit::write_grid_csv(f, grid);
  f.close();
  if (!f) throw ParseError("failed writing '" + out + "'");

  const qutrit::GridPoint* best = &grid.front();
  double lowest = grid.front().negativity;
  for (const auto& g : grid) {
    if (g.negativity > best->negativity) best = &g;
    lowest = std::min(lowest, g.negativity);
  }
  emit({{"resolution", resolution},
        {"rows", grid.size()},
        {"out", out},
        {"max_negativity", round_number(best->negativity)},
        {"argmax", {{"theta", round_number(best->theta)}, {"phi", round_number(best->phi)}}},
        {"min_negativity", round_number(lowest)}});
  return kOk;
}

int run_compare(const AlphaSource& first, const std::string& path_b, double tol) {
  const AlphaMatrix a = first.load();
  const AlphaMatrix b = first.from_matrix(alpha_from_json(read_json_file(path_b)), path_b);
  if (a.dim() != b.dim()) throw ParseError("dimension mismatch");
  const Verdict v = lu_discriminate(a, b, tol);
  json out = to_json(v);
  out["tolerance"] = tol;
  emit(out);
  return v.inequivalent ? kInequivalent : kOk;
}

int run_probe(const AlphaSource& src, int trials, std::uint64_t seed, double tol) {
  if (trials < 0) throw ParseError("--trials must be non-negative");
  const AlphaMatrix a = src.load();
  const ProbeReport r = lu_probe(a, trials, seed);
  json out = to_json(r);
  out["tolerance"] = tol;
  out["passed"] = r.passed(tol);
  emit(out);
  return r.passed(tol) ? kOk : kInvarianceViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit states with maximally mixed marginals and their LU invariants"};
  app.require_subcommand(1);

  std::optional<double> tol_flag;
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol_flag, "comparison tolerance (default 1e-8 or $MMM_TOL)")
        ->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "check alpha against the constraints");
  std::string validate_path;
  double validate_tol = kValidationTol;
  validate_cmd->add_option("input", validate_path, "alpha JSON file")->required();
  validate_cmd->add_option("--validate-tol", validate_tol, "constraint tolerance")
      ->check(CLI::PositiveNumber);

  auto* build_cmd = app.add_subcommand("build", "write the density matrix as JSON");
  AlphaSource build_src;
  std::string build_out;
  build_src.attach(build_cmd);
  build_cmd->add_option("-o,--out", build_out, "output file (default stdout)");

  auto* inv_cmd = app.add_subcommand("invariants", "block-path invariants with oracle cross-check");
  AlphaSource inv_src;
  std::string mode = "hs-orthonormal";
  inv_src.attach(inv_cmd);
  inv_cmd->add_option("--mode", mode, "paper-raw | hs-orthonormal")
      ->check(CLI::IsMember({"paper-raw", "hs-orthonormal"}));
  add_tol(inv_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "negativity over the qutrit family grid as CSV");
  int resolution = 200;
  std::string scan_out;
  scan_cmd->add_option("--resolution", resolution, "points per axis")
      ->check(CLI::Range(2, 100000));
  scan_cmd->add_option("--out", scan_out, "CSV output path")->required();

  auto* cmp_cmd = app.add_subcommand("compare", "try to separate two alpha matrices by invariants");
  AlphaSource cmp_src;
  std::string cmp_b;
  cmp_cmd->add_option("first", cmp_src.path, "first alpha JSON file")->required();
  cmp_cmd->add_option("second", cmp_b, "second alpha JSON file")->required();
  cmp_cmd->add_flag("--no-validate", cmp_src.no_validate, "accept alpha off the constraint set");
  add_tol(cmp_cmd);

  auto* probe_cmd = app.add_subcommand("probe", "random local unitary invariance check");
  AlphaSource probe_src;
  int trials = 50;
  std::uint64_t seed = 0;
  probe_src.attach(probe_cmd);
  probe_cmd->add_option("--trials", trials, "number of U(x)V conjugations");
  probe_cmd->add_option("--seed", seed, "master seed; trial t uses seed + t");
  add_tol(probe_cmd);

  app.add_subcommand("report", "discrepancy report with recomputed evidence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*validate_cmd) return run_validate(validate_path, validate_tol);
    if (*build_cmd) return run_build(build_src, build_out);
    if (*inv_cmd)
      return run_invariants(inv_src, parse_basis_norm(mode), comparison_tolerance(tol_flag));
    if (*scan_cmd) return run_scan(resolution, scan_out);
    if (*cmp_cmd) return run_compare(cmp_src, cmp_b, comparison_tolerance(tol_flag));
    if (*probe_cmd) return run_probe(probe_src, trials, seed, comparison_tolerance(tol_flag));
    emit(to_json(discrepancy_report()));
    return kOk;
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
}
