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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mmm/alpha.hpp"
#include "mmm/invariants.hpp"
#include "mmm/state.hpp"

namespace mmm {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Magnitudes below this are printed as 0.
inline constexpr double kPrintFloor = 1e-12;

/// 12 significant digits in plain decimal notation, trailing zeros removed.
std::string format_number(double x);
/// x rounded the same way format_number() prints it.
double round_number(double x);

/// {"d": int, "alpha": [[[re, im], ...], ...]}
json alpha_to_json(const ComplexMatrix& alpha);
/// Shape checks only: d ≥ 2, a d×d array of [re, im] pairs, finite values.
ComplexMatrix alpha_from_json(const json& j);

/// {"d": int, "rho": [[[re, im], ...], ...]} with d²×d² entries.
json state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const json& j);

json to_json(const ConstraintResidual& r);
json to_json(const Certificate& c);
json to_json(const RealMultiset& m);
json to_json(const InvariantSet& inv);
json to_json(const Deviation& d);
json to_json(const ProbeReport& r);
json to_json(const Verdict& v);

json read_json_file(const std::string& path);

}  // namespace mmm
