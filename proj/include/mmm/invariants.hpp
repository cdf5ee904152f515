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

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mmm/alpha.hpp"
#include "mmm/linalg.hpp"
#include "mmm/state.hpp"

namespace mmm {

/// Largest |Im λ| tolerated on a partial-transpose block eigenvalue.
inline constexpr double kImaginaryGuard = 1e-9;

/// Thrown when a block computation produces something only a construction
/// bug could explain.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Normalization of the diagonal operators λ⁽⁰⁾_i = Σ_m ω^{im}|m⟩⟨m|.
 *
 * `raw` keeps them as written, with Hilbert-Schmidt norm √d. `orthonormal`
 * divides them by √d so the whole traceless basis is orthonormal; only this
 * mode yields correlation singular values that are LU invariants.
 */
enum class BasisNorm { raw, orthonormal };

std::string_view to_string(BasisNorm n) noexcept;
/// Accepts "paper-raw" / "hs-orthonormal"; throws std::invalid_argument.
BasisNorm parse_basis_norm(std::string_view s);

/// Traceless operator basis: λ⁽⁰⁾_1..λ⁽⁰⁾_{d−1} followed by the shift
/// operators λ⁽ᵏ⁾_i = |i+k⟩⟨i| ordered by k = 1..d−1, then i = 0..d−1.
struct OperatorBasis {
  std::vector<ComplexMatrix> elements;
  std::vector<int> sector;  ///< 0 for diagonal elements, k for shifts
  BasisNorm norm = BasisNorm::orthonormal;
};

OperatorBasis operator_basis(int d, BasisNorm norm);

/// Q_i(l, k) = c_{i−l−k, k} c*_{i−l−k, l}.
struct PTBlockSet {
  std::vector<ComplexMatrix> blocks;
};

/// R_0 is (d−1)×(d−1) over the diagonal sector, R_k is d×d over sector k.
/// Entries follow r_xy = Tr(ρ (λ_x ⊗ λ_y)†).
struct CorrBlockSet {
  ComplexMatrix diagonal;
  std::vector<ComplexMatrix> shifts;  ///< shifts[k − 1] = R_k
  BasisNorm norm = BasisNorm::orthonormal;
};

struct InvariantSet {
  RealMultiset kappa1;  ///< d values
  RealMultiset kappa2;  ///< d² values
  RealMultiset kappa3;  ///< d² − 1 values
  double purity = 0.0;
  double negativity = 0.0;
  BasisNorm norm = BasisNorm::orthonormal;
};

// Block path: closed-form blocks computed from α alone.

RealMultiset kappa1(const AlphaMatrix& a);
PTBlockSet pt_blocks(const AlphaMatrix& a);
/// Throws EngineError if a block eigenvalue has |Im| > kImaginaryGuard.
RealMultiset kappa2(const AlphaMatrix& a);
CorrBlockSet corr_blocks(const AlphaMatrix& a, BasisNorm norm);
RealMultiset kappa3(const AlphaMatrix& a, BasisNorm norm);

double purity(const RealMultiset& k1);
/// (Σ|κ⁽²⁾_i| − 1)/2, i.e. (‖ρ^{T_B}‖₁ − 1)/2. Clamped at zero so roundoff on
/// a PPT spectrum cannot produce −1e-17.
double negativity(const RealMultiset& k2);

InvariantSet block_invariants(const AlphaMatrix& a, BasisNorm norm = BasisNorm::orthonormal);

// Oracle path: full matrices, no block structure assumed.

/// (d²−1)×(d²−1) matrix r_xy = Tr(ρ (λ_x ⊗ λ_y)†) over operator_basis(d, norm).
ComplexMatrix correlation_matrix(const ComplexMatrix& rho, int d, BasisNorm norm);

/// Throws std::invalid_argument if certify(s) fails at kStateTol.
InvariantSet oracle_invariants(const BipartiteState& s, BasisNorm norm = BasisNorm::orthonormal);

struct Deviation {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  double purity = 0.0;
  double negativity = 0.0;

  double max_multiset() const noexcept;
};

Deviation deviation(const InvariantSet& x, const InvariantSet& y);

/// (U⊗V) ρ (U⊗V)†.
ComplexMatrix local_rotate(const ComplexMatrix& rho, const ComplexMatrix& u,
                           const ComplexMatrix& v);

struct ProbeReport {
  int trials = 0;
  std::uint64_t seed = 0;
  Deviation orthonormal;  ///< max over trials, hs-orthonormal invariants
  double raw_kappa3 = 0.0;  ///< max κ⁽³⁾ deviation in raw mode, reported only

  bool passed(double tol = kMultisetTol) const noexcept;
};

/// Trial t draws U then V from a generator seeded with seed + t.
ProbeReport lu_probe(const AlphaMatrix& a, int trials, std::uint64_t seed);

struct Verdict {
  bool inequivalent = false;
  Deviation deviations;
};

std::string_view to_string(const Verdict& v) noexcept;

/// Compares hs-orthonormal block invariants. Never claims equivalence:
/// agreement only means the invariants cannot tell the states apart.
Verdict lu_discriminate(const AlphaMatrix& a, const AlphaMatrix& b, double tol = kMultisetTol);
/// Same verdict from oracle invariants of two density matrices.
Verdict lu_discriminate(const BipartiteState& a, const BipartiteState& b,
                        double tol = kMultisetTol);

}  // namespace mmm
