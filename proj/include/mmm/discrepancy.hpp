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

#include <string>
#include <vector>

#include "mmm/io.hpp"

namespace mmm {

/// A stated formula that the implementation does not follow verbatim,
/// with the numbers that justify the choice. Evidence is recomputed on
/// every call; nothing in it is hard-coded.
struct Discrepancy {
  std::string id;
  std::string stated;
  std::string adopted;
  json evidence;
};

std::vector<Discrepancy> discrepancy_report();

json to_json(const std::vector<Discrepancy>& report);

}  // namespace mmm
