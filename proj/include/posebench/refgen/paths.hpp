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
#include <vector>

#include <Eigen/Core>

#include "posebench/core/manifest.hpp"
#include "posebench/core/types.hpp"
#include "posebench/kernels/kernels.hpp"

namespace posebench {

/// Densely sampled protocol path in the local reference frame. Closed
/// paths carry an implicit closing segment from the last point back to
/// the first; arc_length includes it.
struct ReferencePath {
  std::string protocol_id;
  std::vector<Eigen::Vector3d> points;  // mm
  bool closed{false};
  double nominal_speed_mm_s{0.0};
  double arc_length_mm{0.0};
};

struct LabeledPose {
  std::string label;  // SP01..SP08
  Eigen::Vector3d p{Eigen::Vector3d::Zero()};
  Quaternion q;
};

struct ReferencePoseSet {
  std::string protocol_id;
  std::vector<LabeledPose> poses;
};

/// Static pose targets on the scaled test cube's inclined measurement
/// plane: the plane center plus the four diagonal points placed 10% of
/// the plane diagonal in from each corner. Orientations are normal to
/// the plane. Cube is centered at the local origin.
ReferencePoseSet gen_iso_cube_poses(double edge_mm, double incline_deg = 45.0);

ReferencePath gen_line(double length_mm);
ReferencePath gen_circle(double radius_mm);
ReferencePath gen_square(double side_mm);

/// Helical sweep on a torus around the z axis; v advances `turns` times
/// per revolution of u, so the path closes after one revolution.
ReferencePath gen_torus(double major_mm, double minor_mm, int turns);

/// Boustrophedon scan: `lines` parallel segments of length width_mm,
/// spaced height_mm / (lines - 1) apart, joined by transverse links.
ReferencePath gen_raster(double width_mm, double height_mm, int lines);

/// Constant-speed traversal of the path sampled at `rate_hz`, orientation
/// held fixed. Timestamps start at t0.
PoseSeries schedule(const ReferencePath& path, double speed_mm_s, double rate_hz,
                    Timestamp t0 = {}, const Quaternion& orientation = {});

/// Segment soup for nearest-distance queries (wraps the closing edge).
kernels::SegmentSoa path_segments(const ReferencePath& path);

/// Position at arc length s along the path (clamped to [0, length]).
Eigen::Vector3d point_at_arc_length(const ReferencePath& path, double s_mm);

/// Regenerates the protocol path described by a manifest reference block
/// (local frame; the placement transform is applied by the caller).
ReferencePath path_from_spec(const ReferenceSpec& spec);

}  // namespace posebench
