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

#include <Eigen/Core>

#include "posebench/core/types.hpp"

namespace posebench {

/// Similarity transform x' = s * R * x + t between two declared frames.
/// Scale defaults to 1 and is only non-unit when explicitly estimated.
struct RigidTransform {
  Eigen::Matrix3d rot{Eigen::Matrix3d::Identity()};
  Eigen::Vector3d tvec{Eigen::Vector3d::Zero()};  // mm
  double scale{1.0};
  FrameId src_frame{FrameId::kTrackerWorld};
  FrameId dst_frame{FrameId::kGroundtruthWorld};

  static RigidTransform identity(FrameId src, FrameId dst) {
    RigidTransform t;
    t.src_frame = src;
    t.dst_frame = dst;
    return t;
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return scale * (rot * p) + tvec; }

  Quaternion rotation_quat() const { return Quaternion::from_rotation_matrix(rot); }

  RigidTransform inverse() const;

  /// R orthonormal with det +1 within tol, scale positive.
  void validate(double tol = 1e-9) const;
};

/// (a ∘ b)(x) = a(b(x)). Frames must chain: b.dst == a.src.
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);

/// Maps every sample of `series` into the transform's target frame.
/// Timestamps and validity flags are untouched.
PoseSeries apply(const RigidTransform& t, const PoseSeries& series);

}  // namespace posebench
