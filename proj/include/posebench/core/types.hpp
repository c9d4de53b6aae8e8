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

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace posebench {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Integer nanoseconds since epoch. All temporal pairing is done on this
/// type so there is no float-time ambiguity.
struct Timestamp {
  std::int64_t ns{0};

  constexpr auto operator<=>(const Timestamp&) const = default;

  double seconds() const { return static_cast<double>(ns) * 1e-9; }

  static Timestamp from_seconds(double s) {
    return Timestamp{static_cast<std::int64_t>(std::llround(s * 1e9))};
  }
};

inline Timestamp operator+(Timestamp t, std::int64_t delta_ns) {
  return Timestamp{t.ns + delta_ns};
}
inline std::int64_t operator-(Timestamp a, Timestamp b) { return a.ns - b.ns; }

enum class FrameId {
  kTrackerWorld,
  kGroundtruthWorld,
  kReference,
};

std::string to_string(FrameId frame);
FrameId frame_from_string(const std::string& name);

/// Unit quaternion, Hamilton convention, scalar first. Canonical form has
/// w >= 0 so that q and -q (the same rotation) compare equal.
struct Quaternion {
  double w{1.0}, x{0.0}, y{0.0}, z{0.0};

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion identity() { return {}; }
  static Quaternion from_axis_angle(const Eigen::Vector3d& axis, double angle_rad);
  static Quaternion from_rotation_matrix(const Eigen::Matrix3d& rot);

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  double dot(const Quaternion& other) const {
    return w * other.w + x * other.x + y * other.y + z * other.z;
  }

  Quaternion normalized() const;
  /// Flips sign so w >= 0; ties on w == 0 broken by the first nonzero
  /// component, making canonicalization a pure function.
  Quaternion canonicalized() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }

  bool is_unit(double tol = 1e-9) const { return std::abs(norm() - 1.0) <= tol; }
  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  Quaternion operator*(const Quaternion& rhs) const;
  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const;
  Eigen::Matrix3d to_rotation_matrix() const;
};

/// Geodesic angle between two rotations in degrees, in [0, 180].
/// Inputs off unit norm by more than 1e-3 are rejected; smaller drift is
/// normalized away.
double rotation_angle_deg(const Quaternion& a, const Quaternion& b);

struct Pose {
  Timestamp t;
  Eigen::Vector3d p{Eigen::Vector3d::Zero()};  // mm
  Quaternion q;
  FrameId frame{FrameId::kTrackerWorld};
  bool valid{true};

  bool finite() const { return p.allFinite() && q.is_finite(); }
};

/// Ordered pose stream. Timestamps strictly increase and every sample
/// shares the series frame.
struct PoseSeries {
  FrameId frame{FrameId::kTrackerWorld};
  std::vector<Pose> samples;
  double nominal_rate_hz{0.0};

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  const Pose& front() const { return samples.front(); }
  const Pose& back() const { return samples.back(); }

  double span_seconds() const {
    return samples.size() < 2 ? 0.0 : (samples.back().t - samples.front().t) * 1e-9;
  }

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;

  /// Median inter-sample rate; robust against dropouts.
  static double estimate_rate_hz(const std::vector<Pose>& samples);
};

/// Average of near-identical orientations via the largest eigenvector of
/// the accumulated outer-product matrix. Well defined for the tight
/// clusters seen in dwell windows.
Quaternion mean_orientation(const std::vector<Quaternion>& qs);

}  // namespace posebench
