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

#include "mmm/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace mmm {

namespace {

int wrap(int x, int d) { return ((x % d) + d) % d; }

double diagonal_scale(int d, BasisNorm norm) {
  return norm == BasisNorm::orthonormal ? 1.0 / std::sqrt(static_cast<double>(d)) : 1.0;
}

}  // namespace

std::string_view to_string(BasisNorm n) noexcept {
  return n == BasisNorm::raw ? "paper-raw" : "hs-orthonormal";
}

BasisNorm parse_basis_norm(std::string_view s) {
  if (s == "paper-raw" || s == "raw") return BasisNorm::raw;
  if (s == "hs-orthonormal" || s == "orthonormal") return BasisNorm::orthonormal;
  throw std::invalid_argument("unknown basis normalization '" + std::string(s) + "'");
}

OperatorBasis operator_basis(int d, BasisNorm norm) {
  if (d < 2) throw std::invalid_argument("operator_basis: d must be at least 2");
  OperatorBasis basis;
  basis.norm = norm;
  const double scale = diagonal_scale(d, norm);
  for (int i = 1; i < d; ++i) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (int s = 0; s < d; ++s) m(s, s) = scale * root_of_unity(d, static_cast<long>(i) * s);
    basis.elements.push_back(std::move(m));
    basis.sector.push_back(0);
  }
  for (int k = 1; k < d; ++k)
    for (int i = 0; i < d; ++i) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m((i + k) % d, i) = 1.0;
      basis.elements.push_back(std::move(m));
      basis.sector.push_back(k);
    }
  return basis;
}

RealMultiset kappa1(const AlphaMatrix& a) {
  std::vector<double> out;
  out.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) out.push_back(a.entries().row(i).squaredNorm());
  return RealMultiset(std::move(out));
}

PTBlockSet pt_blocks(const AlphaMatrix& a) {
  const int d = a.dim();
  const ComplexMatrix c = fourier_coeffs(a);
  PTBlockSet set;
  for (int i = 0; i < d; ++i) {
    ComplexMatrix q(d, d);
    for (int l = 0; l < d; ++l)
      for (int k = 0; k < d; ++k) {
        const int m = wrap(i - l - k, d);
        q(l, k) = c(m, k) * std::conj(c(m, l));
      }
    set.blocks.push_back(std::move(q));
  }
  return set;
}

RealMultiset kappa2(const AlphaMatrix& a) {
  std::vector<double> out;
  for (const ComplexMatrix& q : pt_blocks(a).blocks) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(q, false);
    if (solver.info() != Eigen::Success)
      throw EngineError("kappa2: block eigensolver did not converge");
    for (Eigen::Index n = 0; n < solver.eigenvalues().size(); ++n) {
      const Complex lambda = solver.eigenvalues()(n);
      if (std::abs(lambda.imag()) > kImaginaryGuard)
        throw EngineError("kappa2: block eigenvalue with imaginary part " +
                          std::to_string(lambda.imag()));
      out.push_back(lambda.real());
    }
  }
  return RealMultiset(std::move(out));
}

CorrBlockSet corr_blocks(const AlphaMatrix& a, BasisNorm norm) {
  const int d = a.dim();
  const ComplexMatrix c = fourier_coeffs(a);
  CorrBlockSet set;
  set.norm = norm;

  // Diagonal sector: Σ_{m,p} ω^{−(mi+pj)} ⟨m,p|ρ|m,p⟩ with ⟨m,p|ρ|m,p⟩ = |c_{m−p,p}|².
  const double scale = diagonal_scale(d, norm);
  set.diagonal = ComplexMatrix::Zero(d - 1, d - 1);
  for (int i = 1; i < d; ++i)
    for (int j = 1; j < d; ++j) {
      Complex acc{0.0, 0.0};
      for (int m = 0; m < d; ++m)
        for (int p = 0; p < d; ++p)
          acc += std::norm(c(wrap(m - p, d), p)) *
                 root_of_unity(d, -(static_cast<long>(m) * i + static_cast<long>(p) * j));
      set.diagonal(i - 1, j - 1) = scale * scale * acc;
    }

  // Shift sector k: ⟨i+k, j+k|ρ|i, j⟩ = c_{i−j, j+k} c*_{i−j, j}.
  for (int k = 1; k < d; ++k) {
    ComplexMatrix r(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const int row = wrap(i - j, d);
        r(i, j) = c(row, (j + k) % d) * std::conj(c(row, j));
      }
    set.shifts.push_back(std::move(r));
  }
  return set;
}

RealMultiset kappa3(const AlphaMatrix& a, BasisNorm norm) {
  const CorrBlockSet blocks = corr_blocks(a, norm);
  RealMultiset out = singular_values(blocks.diagonal);
  for (const ComplexMatrix& r : blocks.shifts) out = out.merged(singular_values(r));
  return out;
}

double purity(const RealMultiset& k1) {
  double p = 0.0;
  for (double x : k1.values()) p += x * x;
  return p;
}

double negativity(const RealMultiset& k2) {
  double norm1 = 0.0;
  for (double x : k2.values()) norm1 += std::abs(x);
  return std::max(0.0, 0.5 * (norm1 - 1.0));
}

InvariantSet block_invariants(const AlphaMatrix& a, BasisNorm norm) {
  InvariantSet inv;
  inv.kappa1 = kappa1(a);
  inv.kappa2 = kappa2(a);
  inv.kappa3 = kappa3(a, norm);
  inv.purity = purity(inv.kappa1);
  inv.negativity = negativity(inv.kappa2);
  inv.norm = norm;
  return inv;
}

ComplexMatrix correlation_matrix(const ComplexMatrix& rho, int d, BasisNorm norm) {
  const OperatorBasis basis = operator_basis(d, norm);
  if (rho.rows() != d * d || rho.cols() != d * d)
    throw std::invalid_argument("correlation_matrix: rho has the wrong shape");
  const auto n = static_cast<Eigen::Index>(basis.elements.size());
  ComplexMatrix r(n, n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y) {
      // Tr(ρ K†) = Σ_ab ρ_ab conj(K_ab)
      const ComplexMatrix op = kron(basis.elements[x], basis.elements[y]);
      r(x, y) = rho.cwiseProduct(op.conjugate()).sum();
    }
  return r;
}

InvariantSet oracle_invariants(const BipartiteState& s, BasisNorm norm) {
  const Certificate cert = certify(s);
  if (!cert.ok())
    throw std::invalid_argument("oracle_invariants: state failed certification");
  const int d = s.d;

  InvariantSet inv;
  inv.norm = norm;
  // ρ has rank at most d, so its d largest eigenvalues carry the whole spectrum.
  const std::vector<double> full = eig_hermitian(s.rho).values();
  inv.kappa1 = RealMultiset(std::vector<double>(full.end() - d, full.end()));
  inv.kappa2 = eig_hermitian(partial_transpose(s.rho, d));
  inv.kappa3 = singular_values(correlation_matrix(s.rho, d, norm));
  inv.purity = (s.rho * s.rho).trace().real();
  inv.negativity = negativity(inv.kappa2);
  return inv;
}

double Deviation::max_multiset() const noexcept {
  return std::max({kappa1, kappa2, kappa3});
}

Deviation deviation(const InvariantSet& x, const InvariantSet& y) {
  return {x.kappa1.max_deviation(y.kappa1), x.kappa2.max_deviation(y.kappa2),
          x.kappa3.max_deviation(y.kappa3), std::abs(x.purity - y.purity),
          std::abs(x.negativity - y.negativity)};
}

ComplexMatrix local_rotate(const ComplexMatrix& rho, const ComplexMatrix& u,
                           const ComplexMatrix& v) {
  const ComplexMatrix w = kron(u, v);
  return w * rho * w.adjoint();
}

bool ProbeReport::passed(double tol) const noexcept {
  return orthonormal.kappa1 < tol && orthonormal.kappa2 < tol && orthonormal.kappa3 < tol;
}

ProbeReport lu_probe(const AlphaMatrix& a, int trials, std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("lu_probe: negative trial count");
  ProbeReport report;
  report.trials = trials;
  report.seed = seed;
  if (trials == 0) return report;

  const BipartiteState base = build_state(a, true);
  const InvariantSet ref_hs = oracle_invariants(base, BasisNorm::orthonormal);
  const RealMultiset ref_raw = singular_values(correlation_matrix(base.rho, base.d, BasisNorm::raw));

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 gen(seed + static_cast<std::uint64_t>(t));
    const ComplexMatrix u = random_special_unitary(base.d, gen);
    const ComplexMatrix v = random_special_unitary(base.d, gen);
    const BipartiteState rotated{base.d, local_rotate(base.rho, u, v)};

    const Deviation dev = deviation(ref_hs, oracle_invariants(rotated, BasisNorm::orthonormal));
    Deviation& acc = report.orthonormal;
    acc.kappa1 = std::max(acc.kappa1, dev.kappa1);
    acc.kappa2 = std::max(acc.kappa2, dev.kappa2);
    acc.kappa3 = std::max(acc.kappa3, dev.kappa3);
    acc.purity = std::max(acc.purity, dev.purity);
    acc.negativity = std::max(acc.negativity, dev.negativity);

    const RealMultiset raw = singular_values(correlation_matrix(rotated.rho, rotated.d, BasisNorm::raw));
    report.raw_kappa3 = std::max(report.raw_kappa3, ref_raw.max_deviation(raw));
  }
  return report;
}

std::string_view to_string(const Verdict& v) noexcept {
  return v.inequivalent ? "LU-inequivalent" : "indistinguishable by these invariants";
}

namespace {

Verdict verdict_from(const InvariantSet& x, const InvariantSet& y, double tol) {
  Verdict v;
  v.deviations = deviation(x, y);
  v.inequivalent = !(v.deviations.max_multiset() <= tol);
  return v;
}

}  // namespace

Verdict lu_discriminate(const AlphaMatrix& a, const AlphaMatrix& b, double tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lu_discriminate: dimension mismatch");
  return verdict_from(block_invariants(a, BasisNorm::orthonormal),
                      block_invariants(b, BasisNorm::orthonormal), tol);
}

Verdict lu_discriminate(const BipartiteState& a, const BipartiteState& b, double tol) {
  if (a.d != b.d) throw std::invalid_argument("lu_discriminate: dimension mismatch");
  return verdict_from(oracle_invariants(a, BasisNorm::orthonormal),
                      oracle_invariants(b, BasisNorm::orthonormal), tol);
}

}  // namespace mmm
