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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "mmm/discrepancy.hpp"
#include "mmm/invariants.hpp"
#include "mmm/io.hpp"
#include "mmm/qutrit.hpp"
#include "mmm/state.hpp"
#include "test_support.hpp"

using namespace mmm;
using namespace mmm::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<AlphaMatrix> named_examples() {
  std::vector<AlphaMatrix> out;
  for (int d : {2, 3}) {
    out.push_back(named_example("bell-seed", d));
    out.push_back(named_example("uniform-diagonal", d));
  }
  out.push_back(named_example("gauss-phase", 3));
  return out;
}

double marginal_defect(const ComplexMatrix& rho, int d, Subsystem s) {
  return max_abs(partial_trace(rho, d, s) - ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

double oracle_negativity(const ComplexMatrix& rho, int d) {
  return std::max(0.0, (singular_values(partial_transpose(rho, d)).sum() - 1.0) / 2.0);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

Outcome marginals() {
  std::mt19937_64 gen(1001);
  std::vector<AlphaMatrix> inputs = named_examples();
  for (int t = 0; t < 100; ++t) inputs.push_back(qutrit_family(random_family_point(gen)));
  double worst = 0.0;
  for (const AlphaMatrix& a : inputs) {
    const BipartiteState s = build_state(a);
    worst = std::max({worst, marginal_defect(s.rho, s.d, Subsystem::A),
                      marginal_defect(s.rho, s.d, Subsystem::B)});
  }
  return {worst < 1e-10, std::to_string(inputs.size()) + " states, max defect " + fmt(worst)};
}

Outcome kappa1_golden() {
  std::mt19937_64 gen(1002);
  double worst_k = 0.0, worst_p = 0.0;
  for (int t = 0; t < 100; ++t) {
    const AlphaMatrix a = qutrit_family(random_family_point(gen));
    const InvariantSet inv = block_invariants(a);
    worst_k = std::max(worst_k, inv.kappa1.max_deviation(RealMultiset({1.0 / 3, 1.0 / 3, 1.0 / 3})));
    // Tr ρ² straight from the expanded matrix.
    const ComplexMatrix rho = expand_state(a.entries());
    worst_p = std::max({worst_p, std::abs(inv.purity - 1.0 / 3.0),
                        std::abs((rho * rho).trace().real() - 1.0 / 3.0)});
  }
  return {worst_k < 1e-12 && worst_p < 1e-12,
          "kappa1 dev " + fmt(worst_k) + ", purity dev " + fmt(worst_p)};
}

Outcome kappa2_closed_forms() {
  double pair = 0.0, sum = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const QutritFamilyParams p{2 * kPi * i / 20, 2 * kPi * j / 20};
      const AlphaMatrix a = qutrit_family(p);
      const RealMultiset closed = qutrit::kappa2_closed(p);
      const RealMultiset block = kappa2(a);
      const RealMultiset oracle = eig_hermitian(partial_transpose(expand_state(a.entries()), 3));
      pair = std::max({pair, closed.max_deviation(block), closed.max_deviation(oracle),
                       block.max_deviation(oracle)});
      sum = std::max({sum, std::abs(closed.sum() - 1.0), std::abs(block.sum() - 1.0),
                      std::abs(oracle.sum() - 1.0)});
    }
  return {pair < 1e-9 && sum < 1e-10, "400 points, pairwise dev " + fmt(pair) + ", sum dev " + fmt(sum)};
}

Outcome negativity_bound() {
  double hi = 0.0;
  for (const auto& g : qutrit::negativity_grid(200)) hi = std::max(hi, g.negativity);
  const double origin = oracle_negativity(expand_state(qutrit_family({0.0, 0.0}).entries()), 3);
  const double engine = block_invariants(qutrit_family({0.0, 0.0})).negativity;
  const bool ok = hi >= 0.32 && hi <= 1.0 / 3.0 + 1e-9 && std::abs(origin - 2.0 / 9.0) < 1e-10 &&
                  std::abs(engine - origin) < 1e-10;
  return {ok, "grid max " + format_number(hi) + ", N(0,0) oracle " + format_number(origin) +
                  " engine " + format_number(engine)};
}

Outcome kappa3_block_oracle() {
  std::mt19937_64 gen(1005);
  std::vector<AlphaMatrix> inputs = named_examples();
  for (int t = 0; t < 25; ++t) inputs.push_back(qutrit_family(random_family_point(gen)));
  double worst = 0.0;
  for (const AlphaMatrix& a : inputs)
    for (BasisNorm norm : {BasisNorm::raw, BasisNorm::orthonormal}) {
      const RealMultiset block = kappa3(a, norm);
      const RealMultiset full = singular_values(correlation_matrix(build_state(a).rho, a.dim(), norm));
      worst = std::max(worst, block.max_deviation(full));
    }
  return {worst < 1e-8, std::to_string(inputs.size()) + " states x 2 modes, max dev " + fmt(worst)};
}

Outcome lu_probe_criterion() {
  double worst = 0.0;
  for (const AlphaMatrix& a : {named_example("bell-seed", 2), named_example("uniform-diagonal", 2),
                               qutrit_family({1.0, 1.0}), named_example("gauss-phase", 3)}) {
    const ProbeReport r = lu_probe(a, 50, 7);
    worst = std::max({worst, r.orthonormal.kappa1, r.orthonormal.kappa2, r.orthonormal.kappa3});
  }
  return {worst < 1e-8, "50 trials each at d=2,3, max dev " + fmt(worst)};
}

Outcome discrepancy_criterion() {
  const auto report = discrepancy_report();
  const json j = to_json(report);
  {
    std::ofstream f("discrepancy_report.json");
    f << j.dump(2) << '\n';
  }
  bool prefactor = false, summation = false, radicand = false;
  for (const Discrepancy& d : report) {
    if (d.evidence.empty()) continue;
    const json& ev = d.evidence;
    if (d.id == "fourier-prefactor")
      prefactor = ev.contains("q_trace_sum_adopted") && ev.contains("q_trace_sum_stated");
    if (d.id == "negativity-summation")
      summation = ev.contains("cases") && !ev["cases"].empty();
    if (d.id == "kappa3-radicand") {
      // The unshifted radicand recorded at θ = φ = 0 must be negative.
      radicand = ev["radicands_at"]["theta"] == 0.0 && ev["radicands_at"]["phi"] == 0.0 &&
                 ev["radicands"][0]["expression"] == 1 &&
                 ev["radicands"][0]["radicand"].get<double>() < 0.0;
    }
  }
  return {!report.empty() && prefactor && summation && radicand,
          std::to_string(report.size()) + " entries, written to discrepancy_report.json"};
}

Outcome anchors() {
  const InvariantSet bell2 = block_invariants(named_example("bell-seed", 2));
  const InvariantSet bell3 = block_invariants(named_example("bell-seed", 3));
  const InvariantSet diag2 = block_invariants(named_example("uniform-diagonal", 2));
  const int rank2 = certify(build_state(named_example("bell-seed", 2))).rank;
  const int rank3 = certify(build_state(named_example("bell-seed", 3))).rank;
  const ComplexMatrix bell_rho = expand_state(named_example("bell-seed", 2).entries());
  const double dev = std::max({std::abs(bell2.purity - 1.0), std::abs(bell3.purity - 1.0),
                               std::abs(bell2.negativity - 0.5),
                               std::abs(oracle_negativity(bell_rho, 2) - 0.5),
                               std::abs(diag2.purity - 0.5)});
  return {dev < 1e-10 && rank2 == 1 && rank3 == 1,
          "max dev " + fmt(dev) + ", ranks " + std::to_string(rank2) + "," + std::to_string(rank3)};
}

Outcome determinism() {
  write_file("acc_alpha.json", alpha_to_json(qutrit_family({0.7, 1.3}).entries()).dump());
  write_file("acc_alpha_b.json", alpha_to_json(qutrit_family({0.0, 0.0}).entries()).dump());
  const std::vector<std::string> commands{
      "validate acc_alpha.json",
      "build acc_alpha.json",
      "invariants acc_alpha.json --mode paper-raw",
      "invariants --example gauss-phase -d 3",
      "scan --resolution 50 --out acc_scan.csv",
      "compare acc_alpha.json acc_alpha_b.json",
      "probe --family 1 1 --trials 20 --seed 7",
      "report",
  };
  int stable = 0;
  std::string first_bad;
  for (const std::string& c : commands) {
    const CliResult x = run_cli(c);
    const std::string csv_x = c.rfind("scan", 0) == 0 ? read_file("acc_scan.csv") : "";
    const CliResult y = run_cli(c);
    const std::string csv_y = c.rfind("scan", 0) == 0 ? read_file("acc_scan.csv") : "";
    if (x.exit_code == y.exit_code && x.exit_code >= 0 && !x.out.empty() && x.out == y.out &&
        csv_x == csv_y)
      ++stable;
    else if (first_bad.empty())
      first_bad = c;
  }
  for (const char* f : {"acc_alpha.json", "acc_alpha_b.json", "acc_scan.csv"}) std::remove(f);
  std::string detail = std::to_string(stable) + "/" + std::to_string(commands.size()) + " byte-identical";
  if (!first_bad.empty()) detail += ", first mismatch: " + first_bad;
  return {stable == static_cast<int>(commands.size()), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"marginals maximally mixed", marginals},
      {"kappa1 golden and purity", kappa1_golden},
      {"kappa2 closed forms vs block vs oracle", kappa2_closed_forms},
      {"negativity bound on 200x200 grid", negativity_bound},
      {"kappa3 block vs full SVD", kappa3_block_oracle},
      {"LU invariance probe", lu_probe_criterion},
      {"discrepancy report", discrepancy_criterion},
      {"trivial anchors", anchors},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %zu. %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
