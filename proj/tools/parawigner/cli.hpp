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


// Library half of the parawigner command so tests can drive it in-process.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parabose::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsage = 2,
  kGuardRefusal = 3,
  kIoError = 4,
};

/// Parses "1.5", "3/2" or "-7/4". Rejects trailing junk, zero denominators
/// and non-finite results.
std::optional<double> parse_number(std::string_view text);

/// Parses "lo,hi" (each side accepts the rational syntax).
std::optional<std::pair<double, double>> parse_range(std::string_view text);

/// printf("%.17g").
std::string format_g17(double value);

enum class GridMode { kRadial, kCartesian };

struct GridSpec {
  GridMode mode = GridMode::kRadial;
  double r_max = 4.0;
  std::pair<double, double> p_range{-4.0, 4.0};
  std::pair<double, double> q_range{-4.0, 4.0};
  /// Per axis for Cartesian grids.
  int points = 65;

  /// Throws std::invalid_argument when points < 2 or a bound is not finite.
  void validate() const;
};

/// (p, q) pairs in output order. Radial grids lie on the p axis.
std::vector<std::pair<double, double>> grid_points(const GridSpec& grid);

/// args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace parabose::cli
