// Copyright 2026 The opgraph developers
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

namespace opgraph {

// Outcome of a single invariant check. `value` is the measured quantity,
// `threshold` the bound it was compared against; `ok` is authoritative
// (the comparison direction depends on the check).
struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool ok = false;
};

}  // namespace opgraph
