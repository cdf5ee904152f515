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

// Hard-coded objects for the two-parameter qutrit family and harnesses that
// compare them with the generic block engine. Every closed form here is kept
// exactly as originally stated, including the ones the comparisons show to
// be wrong.

#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "mmm/alpha.hpp"
#include "mmm/invariants.hpp"
#include "mmm/linalg.hpp"

namespace mmm::qutrit {

RealMultiset kappa1_closed();

/// (4 + 2cos(φ + 2πi/3))/18, (1 + 4cos(θ + 2πi/3))/18 and
/// (1 + 4cos(θ + φ + 4πi/3))/18 for i = 0, 1, 2.
RealMultiset kappa2_closed(QutritFamilyParams p);

/// One closed-form κ⁽³⁾ entry. Square-root expressions with a negative
/// radicand have no value; they are never clamped.
struct ClosedValue {
  int expression = 0;  ///< 0 for the constant 1/6, 1..3 for the radicals
  double radicand = 0.0;
  std::optional<double> value;
};

/// Eight entries: 1/6 twice, then each radical expression twice. Radical e
/// uses the phase offset 0, +π/3, −π/3 for e = 1, 2, 3.
std::array<ClosedValue, 8> kappa3_closed(QutritFamilyParams p);

struct ExpressionCheck {
  int expression = 0;
  double radicand = 0.0;
  std::optional<double> value;
  /// Both copies of the value found in the engine's raw κ⁽³⁾ within tol.
  bool holds = false;
};

struct Kappa3Comparison {
  QutritFamilyParams params;
  RealMultiset engine;  ///< raw-mode κ⁽³⁾ from the block engine
  std::array<ExpressionCheck, 4> expressions;
  bool all_hold() const noexcept;
};

Kappa3Comparison compare_kappa3_closed(QutritFamilyParams p, double tol = 1e-9);

/// Q_0..Q_2 and R_0..R_2 written out entry by entry in c-coefficients.
std::array<ComplexMatrix, 3> printed_q_blocks(const ComplexMatrix& c);
std::array<ComplexMatrix, 3> printed_r_blocks(const ComplexMatrix& c);

struct GridPoint {
  double theta = 0.0;
  double phi = 0.0;
  double negativity = 0.0;
};

/// resolution² points over [0, 2π)², θ-major. Negativity from kappa2_closed.
std::vector<GridPoint> negativity_grid(int resolution);

/// Header `theta,phi,negativity`, one row per point in grid order.
void write_grid_csv(std::ostream& os, const std::vector<GridPoint>& grid);

}  // namespace mmm::qutrit
