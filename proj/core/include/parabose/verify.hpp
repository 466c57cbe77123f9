// Copyright 2026 The parabose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Named invariant checks grouped into suites, as run by `parawigner verify`.

namespace parabose::verify {

enum class Suite { kAll, kSpecfun, kMatelem, kWigner, kOracle };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Largest error observed, in the metric named by the check.
  double max_error = 0.0;
  double tolerance = 0.0;
  /// Set when the check threw or needs explanation.
  std::string detail;
};

std::vector<CheckResult> run_suite(Suite suite);

}  // namespace parabose::verify
