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

#include "mmm/discrepancy.hpp"

#include <cmath>
#include <numbers>

#include "mmm/qutrit.hpp"

namespace mmm {

namespace {

constexpr QutritFamilyParams kOrigin{0.0, 0.0};
constexpr QutritFamilyParams kGeneric{0.7, 1.3};

json point(QutritFamilyParams p) {
  return {{"theta", round_number(p.theta)}, {"phi", round_number(p.phi)}};
}

RealMultiset oracle_kappa2(const AlphaMatrix& a) {
  const BipartiteState s = build_state(a);
  return eig_hermitian(partial_transpose(s.rho, s.d));
}

Discrepancy fourier_prefactor() {
  const AlphaMatrix a = qutrit_family(kOrigin);
  const double d = a.dim();
  const PTBlockSet blocks = pt_blocks(a);
  double trace_sum = 0.0;
  for (const ComplexMatrix& q : blocks.blocks) trace_sum += q.trace().real();

  // Rescaling c by 1/√d scales every Q entry (a product c·c*) by 1/d.
  const RealMultiset engine = kappa2(a);
  std::vector<double> scaled;
  for (double x : engine.values()) scaled.push_back(x / d);
  const RealMultiset closed = qutrit::kappa2_closed(kOrigin);

  return {"fourier-prefactor",
          "c_{i,k} = (1/d) sum_j alpha_ij w^{jk}",
          "c_{i,k} = (1/sqrt(d)) sum_j alpha_ij w^{jk}",
          {{"at", point(kOrigin)},
           {"q_trace_sum_adopted", round_number(trace_sum)},
           {"q_trace_sum_stated", round_number(trace_sum / d)},
           {"kappa2_closed_form_deviation_adopted", round_number(engine.max_deviation(closed))},
           {"kappa2_closed_form_deviation_stated",
            round_number(RealMultiset(scaled).max_deviation(closed))}}};
}

Discrepancy negativity_summation() {
  json cases = json::array();
  auto add = [&](const std::string& name, const AlphaMatrix& a) {
    const RealMultiset k2 = kappa2(a);
    double stated = 0.0;
    for (double x : k2.values()) stated += (std::abs(x) - 1.0) / 2.0;
    const RealMultiset full = oracle_kappa2(a);
    double trace_norm = 0.0;
    for (double x : full.values()) trace_norm += std::abs(x);
    cases.push_back({{"state", name},
                     {"stated_value", round_number(stated)},
                     {"adopted_value", round_number(negativity(k2))},
                     {"trace_norm_oracle", round_number((trace_norm - 1.0) / 2.0)}});
  };
  add("qutrit-family(0,0)", qutrit_family(kOrigin));
  add("bell-seed d=2", named_example("bell-seed", 2));
  add("uniform-diagonal d=2", named_example("uniform-diagonal", 2));
  return {"negativity-summation",
          "N = sum_i (|k2_i| - 1)/2",
          "N = (sum_i |k2_i| - 1)/2 = (||rho^T_B||_1 - 1)/2",
          {{"cases", std::move(cases)}}};
}

Discrepancy kappa3_radicand() {
  json at_origin = json::array();
  const auto closed = qutrit::kappa3_closed(kOrigin);
  for (int e = 1; e <= 3; ++e)
    at_origin.push_back({{"expression", e},
                         {"radicand", round_number(closed[2 * e].radicand)}});

  const qutrit::Kappa3Comparison generic = qutrit::compare_kappa3_closed(kGeneric);
  json generic_checks = json::array();
  for (const auto& e : generic.expressions)
    generic_checks.push_back({{"expression", e.expression},
                              {"value", e.value ? json(round_number(*e.value)) : json(nullptr)},
                              {"holds", e.holds}});

  // 10×10 grid over [0, 2π)².
  constexpr int n = 10;
  int holds[4] = {0, 0, 0, 0};
  int negative[4] = {0, 0, 0, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QutritFamilyParams p{2.0 * std::numbers::pi * i / n, 2.0 * std::numbers::pi * j / n};
      const auto cmp = qutrit::compare_kappa3_closed(p);
      for (int e = 0; e < 4; ++e) {
        if (cmp.expressions[e].holds) ++holds[e];
        if (!cmp.expressions[e].value) ++negative[e];
      }
    }
  json grid = json::array();
  for (int e = 0; e < 4; ++e)
    grid.push_back({{"expression", e}, {"points_agreeing", holds[e]}, {"negative_radicand", negative[e]}});

  return {"kappa3-radicand",
          "k3 = sqrt(9 - 4cos(t-p+s) - 8cos(-2t-p+s) - 4cos(t+2p+s))/18 for s = 0, +pi/3, -pi/3",
          "k3 from singular values of the correlation blocks; closed forms evaluated and compared only",
          {{"radicands_at", point(kOrigin)},
           {"radicands", std::move(at_origin)},
           {"engine_kappa3_at", point(kGeneric)},
           {"engine_kappa3", to_json(generic.engine)},
           {"expressions_at_generic_point", std::move(generic_checks)},
           {"grid_points", n * n},
           {"grid", std::move(grid)}}};
}

Discrepancy family_third_column() {
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  const double scale = std::numbers::sqrt2 / 6.0;
  ComplexMatrix literal(3, 3);
  for (int r = 0; r < 3; ++r) {
    literal(r, 0) = 2.0 * scale;
    literal(r, 1) = std::polar(scale, kOrigin.theta - r * third);
  }
  literal(0, 2) = std::polar(scale, kOrigin.theta + kOrigin.phi);
  literal(1, 2) = std::polar(scale, -(kOrigin.theta + kOrigin.phi - 2.0 * third));
  literal(2, 2) = std::polar(scale, -(kOrigin.theta + kOrigin.phi - third));

  const ConstraintResidual stated = residuals(literal);
  const ConstraintResidual adopted = residuals(qutrit_family(kOrigin).entries());
  return {"qutrit-family-third-column",
          "third column e^{i(t+p)}, e^{-i(t+p-4pi/3)}, e^{-i(t+p-2pi/3)}",
          "third column e^{i(t+p+2pi r/3)} for row r",
          {{"at", point(kOrigin)},
           {"residual_stated", to_json(stated)},
           {"residual_adopted", to_json(adopted)}}};
}

Discrepancy correlation_convention() {
  const AlphaMatrix a = qutrit_family(kGeneric);
  const CorrBlockSet engine = corr_blocks(a, BasisNorm::raw);
  const auto printed = qutrit::printed_r_blocks(fourier_coeffs(a));

  json blocks = json::array();
  auto add = [&](int k, const ComplexMatrix& eng, const ComplexMatrix& shown) {
    blocks.push_back(
        {{"block", k},
         {"max_abs_printed_minus_engine", round_number(max_abs(shown - eng))},
         {"max_abs_printed_minus_conj_engine",
          round_number(std::min(max_abs(shown - eng.conjugate()),
                                max_abs(shown - eng.adjoint())))},
         {"singular_value_deviation",
          round_number(singular_values(shown).max_deviation(singular_values(eng)))}});
  };
  add(0, engine.diagonal, printed[0]);
  for (int k = 1; k < 3; ++k) add(k, engine.shifts[k - 1], printed[k]);
  return {"correlation-entry-convention",
          "r_ij = Tr(rho lambda_i (x) lambda_j), blocks printed in that convention",
          "r_ij = Tr(rho (lambda_i (x) lambda_j)^dagger); entries are complex conjugates, singular values equal",
          {{"at", point(kGeneric)}, {"blocks", std::move(blocks)}}};
}

Discrepancy printed_q_blocks() {
  const AlphaMatrix a = qutrit_family(kGeneric);
  const PTBlockSet engine = pt_blocks(a);
  const auto printed = qutrit::printed_q_blocks(fourier_coeffs(a));

  json blocks = json::array();
  std::vector<double> printed_union;
  for (int i = 0; i < 3; ++i) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(printed[i], false);
    std::vector<double> re;
    double max_imag = 0.0;
    for (Eigen::Index n = 0; n < solver.eigenvalues().size(); ++n) {
      re.push_back(solver.eigenvalues()(n).real());
      max_imag = std::max(max_imag, std::abs(solver.eigenvalues()(n).imag()));
    }
    printed_union.insert(printed_union.end(), re.begin(), re.end());
    const RealMultiset shown(re);
    const RealMultiset eng = eig_hermitian(engine.blocks[i]);
    blocks.push_back({{"block", i},
                      {"max_abs_printed_minus_transpose", round_number(max_abs(printed[i] - engine.blocks[i].transpose()))},
                      {"printed_spectrum", to_json(shown)},
                      {"printed_spectrum_max_imag", round_number(max_imag)},
                      {"engine_spectrum", to_json(eng)}});
  }
  const RealMultiset oracle = oracle_kappa2(a);
  return {"printed-q-blocks",
          "Q_0, Q_1, Q_2 as printed for d = 3",
          "Q_i(l, k) = c_{i-l-k,k} c*_{i-l-k,l}",
          {{"at", point(kGeneric)},
           {"blocks", std::move(blocks)},
           {"printed_union_vs_partial_transpose_oracle",
            round_number(RealMultiset(printed_union).max_deviation(oracle))},
           {"engine_union_vs_partial_transpose_oracle",
            round_number(kappa2(a).max_deviation(oracle))}}};
}

}  // namespace

std::vector<Discrepancy> discrepancy_report() {
  return {fourier_prefactor(),  negativity_summation(), kappa3_radicand(),
          family_third_column(), correlation_convention(), printed_q_blocks()};
}

json to_json(const std::vector<Discrepancy>& report) {
  json entries = json::array();
  for (const Discrepancy& d : report)
    entries.push_back(
        {{"id", d.id}, {"stated", d.stated}, {"adopted", d.adopted}, {"evidence", d.evidence}});
  return {{"discrepancies", std::move(entries)}};
}

}  // namespace mmm
