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

#include "mmm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mmm {

RealMultiset::RealMultiset(std::vector<double> values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

double RealMultiset::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double RealMultiset::min() const {
  if (values_.empty()) throw std::out_of_range("RealMultiset::min: empty");
  return values_.front();
}

double RealMultiset::max() const {
  if (values_.empty()) throw std::out_of_range("RealMultiset::max: empty");
  return values_.back();
}

double RealMultiset::max_deviation(const RealMultiset& other) const noexcept {
  if (values_.size() != other.values_.size())
    return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    dev = std::max(dev, std::abs(values_[i] - other.values_[i]));
  return dev;
}

RealMultiset RealMultiset::merged(const RealMultiset& other) const {
  std::vector<double> all = values_;
  all.insert(all.end(), other.values_.begin(), other.values_.end());
  return RealMultiset(std::move(all));
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermiticity_defect: matrix is not square");
  return max_abs(m - m.adjoint());
}

RealMultiset eig_hermitian(const ComplexMatrix& m, double herm_tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("eig_hermitian: matrix is not square");
  if (!all_finite(m))
    throw std::invalid_argument("eig_hermitian: non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > herm_tol)
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return RealMultiset(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

RealMultiset singular_values(const ComplexMatrix& m) {
  if (!all_finite(m))
    throw std::invalid_argument("singular_values: non-finite entries");
  if (m.size() == 0) return RealMultiset{};
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  return RealMultiset(std::vector<double>(sv.data(), sv.data() + sv.size()));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

void require_bipartite(const ComplexMatrix& rho, int d, const char* what) {
  if (d < 1 || rho.rows() != static_cast<Eigen::Index>(d) * d ||
      rho.cols() != rho.rows())
    throw std::invalid_argument(std::string(what) + ": expected a " +
                                std::to_string(d * d) + "x" +
                                std::to_string(d * d) + " matrix");
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, int d, Subsystem traced) {
  require_bipartite(rho, d, "partial_trace");
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int s = 0; s < d; ++s) {
        if (traced == Subsystem::B)
          out(x, y) += rho(x * d + s, y * d + s);
        else
          out(x, y) += rho(s * d + x, s * d + y);
      }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d) {
  require_bipartite(rho, d, "partial_transpose");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) out(a * d + b, c * d + e) = rho(a * d + e, c * d + b);
  return out;
}

ComplexMatrix random_special_unitary(int d, std::mt19937_64& gen) {
  if (d < 2) throw std::invalid_argument("random_special_unitary: d < 2");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }

  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Absorb the phases of diag(R) so the distribution is Haar on U(d).
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  const Complex det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / d);
  return q;
}

ComplexMatrix random_special_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_special_unitary(d, gen);
}

}  // namespace mmm
