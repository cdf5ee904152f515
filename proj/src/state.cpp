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

#include "mmm/state.hpp"

#include <cmath>
#include <stdexcept>

namespace mmm {

ComplexMatrix fourier_coeffs(const AlphaMatrix& a) {
  const int d = a.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      Complex acc{0.0, 0.0};
      for (int j = 0; j < d; ++j) acc += a(i, j) * root_of_unity(d, static_cast<long>(j) * k);
      c(i, k) = scale * acc;
    }
  return c;
}

BipartiteState build_state(const AlphaMatrix& a, bool allow_unvalidated) {
  if (!a.validated() && !allow_unvalidated)
    throw std::invalid_argument("build_state: alpha has not been validated");
  const int d = a.dim();
  const ComplexMatrix c = fourier_coeffs(a);
  BipartiteState s{d, ComplexMatrix::Zero(d * d, d * d)};
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        s.rho(composite_index((k + i) % d, k, d), composite_index((l + i) % d, l, d)) +=
            c(i, k) * std::conj(c(i, l));
  return s;
}

ComplexMatrix shear_unitary(int d, ShearSign sign) {
  if (d < 1) throw std::invalid_argument("shear_unitary: d must be positive");
  ComplexMatrix u = ComplexMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int shifted = sign == ShearSign::plus ? (a + b) % d : (a - b + d) % d;
      u(composite_index(shifted, b, d), composite_index(a, b, d)) = 1.0;
    }
  return u;
}

bool Certificate::ok(double tol) const noexcept {
  return hermiticity_defect <= tol && trace_defect <= tol && min_eigenvalue >= -tol &&
         trace_a_defect <= tol && trace_b_defect <= tol;
}

Certificate certify(const BipartiteState& s) {
  const int d = s.d;
  if (s.rho.rows() != d * d || s.rho.cols() != d * d)
    throw std::invalid_argument("certify: rho has the wrong shape");
  Certificate cert;
  cert.hermiticity_defect = hermiticity_defect(s.rho);
  cert.trace_defect = std::abs(s.rho.trace() - Complex(1.0, 0.0));

  const ComplexMatrix sym = 0.5 * (s.rho + s.rho.adjoint());
  const RealMultiset ev = eig_hermitian(sym);
  cert.min_eigenvalue = ev.min();
  for (double x : ev.values())
    if (x > kRankThreshold) ++cert.rank;

  const ComplexMatrix target = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  cert.trace_a_defect = max_abs(partial_trace(s.rho, d, Subsystem::A) - target);
  cert.trace_b_defect = max_abs(partial_trace(s.rho, d, Subsystem::B) - target);
  return cert;
}

}  // namespace mmm
