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

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mmm/linalg.hpp"

namespace mmm {

inline constexpr double kValidationTol = 1e-10;

/// Primitive d-th root of unity raised to `power`, exp(2πi·power/d).
Complex root_of_unity(int d, long power);

/// |Σ_{i,j} α_{i,j+l} α*_{ij}| and the same sum weighted by ω^{−il}.
struct ShiftResidual {
  int shift = 0;
  double plain = 0.0;
  double phased = 0.0;
};

struct ConstraintResidual {
  double norm_residual = 0.0;  ///< |Σ|α_ij|² − 1|
  std::vector<ShiftResidual> shifts;  ///< one entry per l = 1..d−1

  double max() const noexcept;
};

struct Validation;

/**
 * @brief d×d parameter matrix whose rows seed a state with maximally mixed
 * marginals.
 *
 * Instances normally come from validate(), qutrit_family() or
 * named_example(), all of which guarantee the normalization and shifted
 * autocorrelation constraints. unchecked() exists for probing inputs off the
 * constraint manifold and yields a matrix with validated() == false.
 */
class AlphaMatrix {
 public:
  static AlphaMatrix unchecked(ComplexMatrix entries);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  Complex operator()(int i, int j) const { return entries_(i, j); }
  Complex omega() const { return root_of_unity(dim(), 1); }
  bool validated() const noexcept { return validated_; }

 private:
  AlphaMatrix(ComplexMatrix entries, bool validated)
      : entries_(std::move(entries)), validated_(validated) {}

  friend Validation validate(const ComplexMatrix&, double);

  ComplexMatrix entries_;
  bool validated_ = false;
};

/// Outcome of validate(). A rejection is a value carrying the residuals.
struct Validation {
  ConstraintResidual residual;
  std::optional<AlphaMatrix> matrix;

  bool accepted() const noexcept { return matrix.has_value(); }
};

/// Throws std::invalid_argument for a non-square or smaller than 2×2 input.
ConstraintResidual residuals(const ComplexMatrix& candidate);

Validation validate(const ComplexMatrix& candidate, double tol = kValidationTol);

/// Angles of the two-parameter qutrit family, reduced to [0, 2π).
struct QutritFamilyParams {
  double theta = 0.0;
  double phi = 0.0;

  QutritFamilyParams reduced() const;
};

double reduce_angle(double angle);

/**
 * Row r of the family is (√2/6)·(2, e^{i(θ − 2πr/3)}, e^{i(θ + φ + 2πr/3)}).
 */
AlphaMatrix qutrit_family(QutritFamilyParams p);

/// One of "bell-seed", "uniform-diagonal", "gauss-phase" (odd d only).
AlphaMatrix named_example(std::string_view name, int d);

std::vector<std::string_view> named_example_names();

}  // namespace mmm
