// Copyright 2026 posebench contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     https://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "posebench/core/types.hpp"

namespace posebench {

// Pose log CSV schema (bit-exact, header mandatory, UTF-8, '.' decimal):
//   t_ns,x_mm,y_mm,z_mm,qw,qx,qy,qz,valid
// Hamilton convention, scalar-first quaternion, valid in {0,1}.

struct ParsedLog {
  PoseSeries series;
  std::size_t dropped{0};
  std::size_t total_rows{0};
};

/// Parses a pose log. Malformed rows (non-finite values, non-monotonic
/// timestamps, broken quaternions on valid samples) are dropped and
/// counted. Missing columns, an empty file, or a drop rate above 50%
/// are hard errors.
ParsedLog parse_pose_log(const std::string& path, FrameId frame);

/// Inverse of parse_pose_log at full double precision; parse(emit(x))
/// reproduces x exactly.
void write_pose_log(const std::string& path, const PoseSeries& series);

}  // namespace posebench
