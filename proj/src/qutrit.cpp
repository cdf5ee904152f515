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

#include "mmm/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mmm/io.hpp"

namespace mmm::qutrit {

namespace {

constexpr double kPi = std::numbers::pi;

Complex cc(const ComplexMatrix& c, int i, int k, int j, int l) {
  return c(i, k) * std::conj(c(j, l));
}

ComplexMatrix mat3(std::initializer_list<Complex> v) {
  ComplexMatrix m(3, 3);
  auto it = v.begin();
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) m(r, s) = *it++;
  return m;
}

}  // namespace

RealMultiset kappa1_closed() {
  return RealMultiset({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
}

RealMultiset kappa2_closed(QutritFamilyParams p) {
  std::vector<double> v;
  for (int i = 0; i < 3; ++i) {
    v.push_back((4.0 + 2.0 * std::cos(p.phi + 2.0 * i * kPi / 3.0)) / 18.0);
    v.push_back((1.0 + 4.0 * std::cos(p.theta + 2.0 * i * kPi / 3.0)) / 18.0);
    v.push_back((1.0 + 4.0 * std::cos(p.theta + p.phi + 4.0 * i * kPi / 3.0)) / 18.0);
  }
  return RealMultiset(std::move(v));
}

std::array<ClosedValue, 8> kappa3_closed(QutritFamilyParams p) {
  std::array<ClosedValue, 8> out;
  out[0] = out[1] = {0, 1.0, 1.0 / 6.0};
  const double offsets[3] = {0.0, kPi / 3.0, -kPi / 3.0};
  for (int e = 0; e < 3; ++e) {
    const double s = offsets[e];
    const double radicand = 9.0 - 4.0 * std::cos(p.theta - p.phi + s) -
                            8.0 * std::cos(-2.0 * p.theta - p.phi + s) -
                            4.0 * std::cos(p.theta + 2.0 * p.phi + s);
    ClosedValue v{e + 1, radicand, std::nullopt};
    if (radicand >= 0.0) v.value = std::sqrt(radicand) / 18.0;
    out[2 + 2 * e] = out[3 + 2 * e] = v;
  }
  return out;
}

bool Kappa3Comparison::all_hold() const noexcept {
  return std::all_of(expressions.begin(), expressions.end(),
                     [](const ExpressionCheck& e) { return e.holds; });
}

Kappa3Comparison compare_kappa3_closed(QutritFamilyParams p, double tol) {
  Kappa3Comparison cmp;
  cmp.params = p;
  cmp.engine = kappa3(qutrit_family(p), BasisNorm::raw);
  const auto closed = kappa3_closed(p);
  for (int e = 0; e < 4; ++e) {
    const ClosedValue& cv = closed[2 * e];
    ExpressionCheck check{e, cv.radicand, cv.value, false};
    if (cv.value) {
      const auto matches = std::count_if(
          cmp.engine.values().begin(), cmp.engine.values().end(),
          [&](double x) { return std::abs(x - *cv.value) <= tol; });
      check.holds = matches >= 2;
    }
    cmp.expressions[e] = check;
  }
  return cmp;
}

std::array<ComplexMatrix, 3> printed_q_blocks(const ComplexMatrix& c) {
  if (c.rows() != 3 || c.cols() != 3)
    throw std::invalid_argument("printed_q_blocks: expected 3x3 coefficients");
  return {
      mat3({cc(c, 0, 0, 0, 0), cc(c, 2, 0, 2, 1), cc(c, 1, 0, 1, 2),
            cc(c, 2, 1, 2, 0), cc(c, 1, 1, 1, 1), cc(c, 0, 1, 0, 2),
            cc(c, 1, 2, 1, 0), cc(c, 0, 2, 0, 1), cc(c, 2, 2, 2, 2)}),
      mat3({cc(c, 1, 0, 1, 2), cc(c, 0, 1, 0, 0), cc(c, 2, 2, 2, 1),
            cc(c, 0, 0, 0, 2), cc(c, 2, 1, 2, 0), cc(c, 1, 2, 1, 1),
            cc(c, 2, 0, 2, 2), cc(c, 1, 1, 1, 0), cc(c, 0, 2, 0, 1)}),
      mat3({cc(c, 2, 0, 2, 2), cc(c, 1, 1, 1, 0), cc(c, 0, 2, 0, 1),
            cc(c, 1, 0, 1, 2), cc(c, 0, 1, 0, 0), cc(c, 2, 2, 2, 1),
            cc(c, 0, 0, 0, 2), cc(c, 2, 1, 2, 0), cc(c, 1, 2, 1, 1)}),
  };
}

std::array<ComplexMatrix, 3> printed_r_blocks(const ComplexMatrix& c) {
  if (c.rows() != 3 || c.cols() != 3)
    throw std::invalid_argument("printed_r_blocks: expected 3x3 coefficients");
  ComplexMatrix r0 = ComplexMatrix::Zero(2, 2);
  for (int m = 0; m < 3; ++m)
    for (int p = 0; p < 3; ++p) {
      const int row = (m - p + 3) % 3;
      const double weight = std::norm(c(row, p));
      r0(0, 0) += weight * root_of_unity(3, m + p);
      r0(0, 1) += weight * root_of_unity(3, 2 * m + p);
      r0(1, 0) += weight * root_of_unity(3, m + 2 * p);
      r0(1, 1) += weight * root_of_unity(3, 2 * m + 2 * p);
    }
  return {
      r0,
      mat3({cc(c, 0, 0, 0, 1), cc(c, 2, 1, 2, 2), cc(c, 1, 2, 1, 0),
            cc(c, 1, 0, 1, 1), cc(c, 0, 1, 0, 2), cc(c, 2, 2, 2, 0),
            cc(c, 2, 0, 2, 1), cc(c, 1, 1, 1, 2), cc(c, 0, 2, 0, 0)}),
      mat3({cc(c, 0, 0, 0, 2), cc(c, 2, 1, 2, 0), cc(c, 1, 2, 1, 1),
            cc(c, 1, 0, 1, 2), cc(c, 0, 1, 0, 0), cc(c, 2, 2, 2, 1),
            cc(c, 2, 0, 2, 2), cc(c, 1, 1, 1, 0), cc(c, 0, 2, 0, 1)}),
  };
}

std::vector<GridPoint> negativity_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("negativity_grid: resolution must be >= 2");
  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double step = 2.0 * kPi / resolution;
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      const QutritFamilyParams p{i * step, j * step};
      grid.push_back({p.theta, p.phi, negativity(kappa2_closed(p))});
    }
  return grid;
}

void write_grid_csv(std::ostream& os, const std::vector<GridPoint>& grid) {
  os << "theta,phi,negativity\n";
  for (const GridPoint& g : grid)
    os << format_number(g.theta) << ',' << format_number(g.phi) << ','
       << format_number(g.negativity) << '\n';
}

}  // namespace mmm::qutrit
