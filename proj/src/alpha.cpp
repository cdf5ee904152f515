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

#include "mmm/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mmm {

Complex root_of_unity(int d, long power) {
  const long r = ((power % d) + d) % d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

double ConstraintResidual::max() const noexcept {
  double m = norm_residual;
  for (const auto& s : shifts) m = std::max({m, s.plain, s.phased});
  return m;
}

AlphaMatrix AlphaMatrix::unchecked(ComplexMatrix entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 2)
    throw std::invalid_argument("AlphaMatrix: expected a square matrix with d >= 2");
  return AlphaMatrix(std::move(entries), false);
}

ConstraintResidual residuals(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("residuals: alpha must be square");
  const int d = static_cast<int>(a.rows());
  if (d < 2) throw std::invalid_argument("residuals: d must be at least 2");

  ConstraintResidual out;
  out.norm_residual = std::abs(a.squaredNorm() - 1.0);
  for (int l = 1; l < d; ++l) {
    Complex plain{0.0, 0.0};
    Complex phased{0.0, 0.0};
    for (int i = 0; i < d; ++i) {
      Complex row{0.0, 0.0};
      for (int j = 0; j < d; ++j) row += a(i, (j + l) % d) * std::conj(a(i, j));
      plain += row;
      phased += row * root_of_unity(d, -static_cast<long>(i) * l);
    }
    out.shifts.push_back({l, std::abs(plain), std::abs(phased)});
  }
  return out;
}

Validation validate(const ComplexMatrix& candidate, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("validate: tolerance must be positive");
  Validation v;
  v.residual = residuals(candidate);
  if (candidate.allFinite() && v.residual.max() <= tol)
    v.matrix = AlphaMatrix(candidate, true);
  return v;
}

double reduce_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  // fmod of a value just below a negative multiple can round up to 2π.
  if (r >= two_pi) r = 0.0;
  return r;
}

QutritFamilyParams QutritFamilyParams::reduced() const {
  return {reduce_angle(theta), reduce_angle(phi)};
}

AlphaMatrix qutrit_family(QutritFamilyParams p) {
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  const double scale = std::numbers::sqrt2 / 6.0;
  ComplexMatrix a(3, 3);
  for (int r = 0; r < 3; ++r) {
    a(r, 0) = 2.0 * scale;
    a(r, 1) = std::polar(scale, p.theta - r * third);
    a(r, 2) = std::polar(scale, p.theta + p.phi + r * third);
  }
  Validation v = validate(a, 1e-12);
  if (!v.accepted())
    throw std::logic_error("qutrit_family: constraint residual " +
                           std::to_string(v.residual.max()));
  return *std::move(v.matrix);
}

std::vector<std::string_view> named_example_names() {
  return {"bell-seed", "uniform-diagonal", "gauss-phase"};
}

AlphaMatrix named_example(std::string_view name, int d) {
  if (d < 2) throw std::invalid_argument("named_example: d must be at least 2");
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  if (name == "bell-seed") {
    a(0, 0) = 1.0;
  } else if (name == "uniform-diagonal") {
    for (int i = 0; i < d; ++i) a(i, i) = inv_sqrt_d;
  } else if (name == "gauss-phase") {
    if (d % 2 == 0)
      throw std::invalid_argument("named_example: gauss-phase requires odd d");
    for (int j = 0; j < d; ++j)
      a(0, j) = inv_sqrt_d * root_of_unity(d, static_cast<long>(j) * j);
  } else {
    throw std::invalid_argument("named_example: unknown name '" + std::string(name) + "'");
  }
  Validation v = validate(a);
  if (!v.accepted())
    throw std::logic_error("named_example: '" + std::string(name) +
                           "' failed validation");
  return *std::move(v.matrix);
}

}  // namespace mmm
