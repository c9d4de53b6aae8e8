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

#include <vector>

#include <Eigen/Core>

#include "posebench/core/manifest.hpp"
#include "posebench/core/transform.hpp"

namespace posebench {

struct RegistrationResult {
  RigidTransform transform;
  std::vector<double> residuals_mm;
  double rms_mm{0.0};
  /// Raised when rms exceeds the configured threshold; the session keeps
  /// running but the report carries the flag.
  bool rms_warning{false};
  double holdout_rms_mm{-1.0};  // < 0 when no holdout pairs were given
};

/// Least-squares rigid (optionally similarity) transform T minimizing
/// sum |dst_i - T(src_i)|^2, closed form via SVD of the cross-covariance.
/// The reflection branch is rejected through the usual sign correction,
/// so det(R) = +1 always holds.
///
/// Throws std::invalid_argument for fewer than 3 pairs or collinear
/// points (second singular value of the centered source matrix below
/// 1e-6 of the largest).
RegistrationResult estimate_rigid(const std::vector<Eigen::Vector3d>& src,
                                  const std::vector<Eigen::Vector3d>& dst,
                                  bool with_scale = false,
                                  FrameId src_frame = FrameId::kTrackerWorld,
                                  FrameId dst_frame = FrameId::kGroundtruthWorld,
                                  double rms_warn_mm = 1.0);

/// RMS residual of T over holdout correspondences; gates evaluation runs.
double registration_quality(const RigidTransform& t, const std::vector<Eigen::Vector3d>& src,
                            const std::vector<Eigen::Vector3d>& dst);

/// Fits on the spec's non-holdout pairs and scores holdout pairs if any.
RegistrationResult estimate_from_spec(const RegistrationSpec& spec,
                                      FrameId src_frame = FrameId::kTrackerWorld,
                                      FrameId dst_frame = FrameId::kGroundtruthWorld);

}  // namespace posebench
