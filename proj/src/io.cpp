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

#include "mmm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>

namespace mmm {

std::string format_number(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("format_number: non-finite value");
  if (std::abs(x) < kPrintFloor) return "0";

  char buf[64];
  // The exponent after rounding to 12 significant digits fixes the number of
  // decimals, so 9.9999999999995 becomes 10 rather than 9.99999999999.
  std::snprintf(buf, sizeof buf, "%.11e", x);
  const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
  const int decimals = std::max(0, 11 - exponent);
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);

  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

double round_number(double x) {
  return std::strtod(format_number(x).c_str(), nullptr);
}

namespace {

json complex_matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({round_number(m(i, j).real()), round_number(m(i, j).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix complex_matrix_from_json(const json& rows, int n, const char* key) {
  const std::string where = std::string("'") + key + "'";
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError(where + " must be an array of " + std::to_string(n) + " rows");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(where + " row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) {
      const json& z = row[j];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ParseError(where + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must be [re, im]");
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError(where + " contains a non-finite value");
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

int read_dimension(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("d") || !j["d"].is_number_integer())
    throw ParseError("'d' must be an integer");
  const int d = j["d"].get<int>();
  if (d < 2) throw ParseError("'d' must be at least 2");
  return d;
}

json multiset_values(const RealMultiset& m) {
  json arr = json::array();
  for (double x : m.values()) arr.push_back(round_number(x));
  return arr;
}

}  // namespace

json alpha_to_json(const ComplexMatrix& alpha) {
  return {{"d", alpha.rows()}, {"alpha", complex_matrix_to_json(alpha)}};
}

ComplexMatrix alpha_from_json(const json& j) {
  const int d = read_dimension(j);
  if (!j.contains("alpha")) throw ParseError("missing 'alpha'");
  return complex_matrix_from_json(j["alpha"], d, "alpha");
}

json state_to_json(const BipartiteState& s) {
  return {{"d", s.d}, {"rho", complex_matrix_to_json(s.rho)}};
}

BipartiteState state_from_json(const json& j) {
  const int d = read_dimension(j);
  if (!j.contains("rho")) throw ParseError("missing 'rho'");
  return {d, complex_matrix_from_json(j["rho"], d * d, "rho")};
}

json to_json(const ConstraintResidual& r) {
  json shifts = json::array();
  for (const ShiftResidual& s : r.shifts)
    shifts.push_back({{"l", s.shift},
                      {"plain", round_number(s.plain)},
                      {"phased", round_number(s.phased)}});
  return {{"norm_residual", round_number(r.norm_residual)},
          {"shifts", std::move(shifts)},
          {"max", round_number(r.max())}};
}

json to_json(const Certificate& c) {
  return {{"hermiticity_defect", round_number(c.hermiticity_defect)},
          {"trace_defect", round_number(c.trace_defect)},
          {"min_eigenvalue", round_number(c.min_eigenvalue)},
          {"trace_a_defect", round_number(c.trace_a_defect)},
          {"trace_b_defect", round_number(c.trace_b_defect)},
          {"rank", c.rank}};
}

json to_json(const RealMultiset& m) {
  return multiset_values(m);
}

json to_json(const InvariantSet& inv) {
  return {{"kappa1", multiset_values(inv.kappa1)},
          {"kappa2", multiset_values(inv.kappa2)},
          {"kappa3", multiset_values(inv.kappa3)},
          {"purity", round_number(inv.purity)},
          {"negativity", round_number(inv.negativity)},
          {"mode", std::string(to_string(inv.norm))}};
}

json to_json(const Deviation& d) {
  return {{"kappa1", round_number(d.kappa1)},
          {"kappa2", round_number(d.kappa2)},
          {"kappa3", round_number(d.kappa3)},
          {"purity", round_number(d.purity)},
          {"negativity", round_number(d.negativity)}};
}

json to_json(const ProbeReport& r) {
  return {{"trials", r.trials},
          {"seed", r.seed},
          {"max_deviation", to_json(r.orthonormal)},
          {"paper_raw_kappa3_deviation", round_number(r.raw_kappa3)}};
}

json to_json(const Verdict& v) {
  return {{"verdict", std::string(to_string(v))},
          {"inequivalent", v.inequivalent},
          {"deviations", to_json(v.deviations)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace mmm
