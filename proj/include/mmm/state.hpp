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

#include "mmm/alpha.hpp"
#include "mmm/linalg.hpp"

namespace mmm {

inline constexpr double kRankThreshold = 1e-9;
inline constexpr double kStateTol = 1e-10;

/// Composite index of |a⟩_A ⊗ |b⟩_B.
constexpr int composite_index(int a, int b, int d) noexcept { return a * d + b; }

struct BipartiteState {
  int d = 0;
  ComplexMatrix rho;
};

/// c_{i,k} = d^{−1/2} Σ_j α_{ij} ω^{jk}. Row i of c is the unitary DFT of
/// row i of α, so Σ|c|² = Σ|α|².
ComplexMatrix fourier_coeffs(const AlphaMatrix& a);

/**
 * @brief ρ = Σ_{i,k,l} c_{i,k} c*_{i,l} |k+i, k⟩⟨l+i, l| (indices mod d).
 *
 * Throws std::invalid_argument when `a` did not pass validation unless
 * `allow_unvalidated` is set.
 */
BipartiteState build_state(const AlphaMatrix& a, bool allow_unvalidated = false);

enum class ShearSign { plus, minus };

/// Permutation |a, b⟩ → |a ± b, b⟩. minus block-diagonalizes ρ into the
/// rank-one blocks P_i, plus block-diagonalizes ρ^{T_B} into the blocks Q_i.
ComplexMatrix shear_unitary(int d, ShearSign sign);

struct Certificate {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  double trace_a_defect = 0.0;  ///< ‖Tr_A ρ − I/d‖_max
  double trace_b_defect = 0.0;  ///< ‖Tr_B ρ − I/d‖_max
  int rank = 0;

  /// Density operator with maximally mixed marginals, all at `tol`.
  bool ok(double tol = kStateTol) const noexcept;
};

Certificate certify(const BipartiteState& s);

}  // namespace mmm
