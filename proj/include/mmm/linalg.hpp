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

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mmm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest allowed ‖m − m†‖_max before a matrix is rejected as non-Hermitian.
inline constexpr double kHermiticityTol = 1e-10;
/// Default elementwise tolerance when comparing sorted multisets.
inline constexpr double kMultisetTol = 1e-8;

enum class Subsystem { A, B };

/**
 * @brief Sorted collection of real values compared elementwise.
 *
 * Eigenvalue and singular value orderings are not canonical across solvers,
 * so every spectrum produced by the library is stored ascending and compared
 * position by position after sorting.
 */
class RealMultiset {
 public:
  RealMultiset() = default;
  explicit RealMultiset(std::vector<double> values);

  const std::vector<double>& values() const& noexcept { return values_; }
  std::vector<double> values() && noexcept { return std::move(values_); }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }

  double sum() const noexcept;
  double min() const;
  double max() const;

  /// Largest |a_i − b_i| after sorting; +inf if the sizes differ.
  double max_deviation(const RealMultiset& other) const noexcept;
  bool approx_equal(const RealMultiset& other,
                    double tol = kMultisetTol) const noexcept {
    return max_deviation(other) <= tol;
  }

  /// Union with multiplicity.
  RealMultiset merged(const RealMultiset& other) const;

 private:
  std::vector<double> values_;
};

bool all_finite(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix with multiplicity. The input is
/// symmetrized as (m + m†)/2 once it passes the hermiticity gate.
RealMultiset eig_hermitian(const ComplexMatrix& m,
                           double herm_tol = kHermiticityTol);

RealMultiset singular_values(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out `traced` from a d²×d² operator whose composite index is a·d + b.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int d, Subsystem traced);

/// Transpose on the B register: ⟨a,b|ρ^{T_B}|c,e⟩ = ⟨a,e|ρ|c,b⟩.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d);

/// Gaussian matrix, QR orthonormalization with the R-diagonal phase fix,
/// then a global phase so that det = 1. Draws from `gen`.
ComplexMatrix random_special_unitary(int d, std::mt19937_64& gen);
ComplexMatrix random_special_unitary(int d, std::uint64_t seed);

}  // namespace mmm
