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

#include "posebench/core/types.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

namespace posebench {

std::string to_string(FrameId frame) {
  switch (frame) {
    case FrameId::kTrackerWorld:
      return "TRACKER_WORLD";
    case FrameId::kGroundtruthWorld:
      return "GROUNDTRUTH_WORLD";
    case FrameId::kReference:
      return "REFERENCE";
  }
  return "UNKNOWN";
}

FrameId frame_from_string(const std::string& name) {
  if (name == "TRACKER_WORLD") return FrameId::kTrackerWorld;
  if (name == "GROUNDTRUTH_WORLD") return FrameId::kGroundtruthWorld;
  if (name == "REFERENCE") return FrameId::kReference;
  throw std::invalid_argument("unknown frame id: " + name);
}

Quaternion Quaternion::from_axis_angle(const Eigen::Vector3d& axis, double angle_rad) {
  const double n = axis.norm();
  if (n <= 0.0) throw std::invalid_argument("axis must be nonzero");
  const Eigen::Vector3d u = axis / n;
  const double half = 0.5 * angle_rad;
  const double s = std::sin(half);
  return Quaternion{std::cos(half), u.x() * s, u.y() * s, u.z() * s}.canonicalized();
}

Quaternion Quaternion::from_rotation_matrix(const Eigen::Matrix3d& rot) {
  const Eigen::Quaterniond q(rot);
  return Quaternion{q.w(), q.x(), q.y(), q.z()}.canonicalized();
}

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize zero or non-finite quaternion");
  }
  return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::canonicalized() const {
  bool flip = w < 0.0;
  if (w == 0.0) {
    if (x != 0.0) {
      flip = x < 0.0;
    } else if (y != 0.0) {
      flip = y < 0.0;
    } else {
      flip = z < 0.0;
    }
  }
  return flip ? Quaternion{-w, -x, -y, -z} : *this;
}

Quaternion Quaternion::operator*(const Quaternion& r) const {
  return {
      w * r.w - x * r.x - y * r.y - z * r.z,
      w * r.x + x * r.w + y * r.z - z * r.y,
      w * r.y - x * r.z + y * r.w + z * r.x,
      w * r.z + x * r.y - y * r.x + z * r.w,
  };
}

Eigen::Vector3d Quaternion::rotate(const Eigen::Vector3d& v) const {
  // v' = v + 2 * u x (u x v + w v) with u = (x, y, z)
  const Eigen::Vector3d u(x, y, z);
  const Eigen::Vector3d t = 2.0 * u.cross(v);
  return v + w * t + u.cross(t);
}

Eigen::Matrix3d Quaternion::to_rotation_matrix() const {
  return Eigen::Quaterniond(w, x, y, z).toRotationMatrix();
}

namespace {

Quaternion checked_unit(const Quaternion& q, const char* who) {
  if (!q.is_finite()) throw std::invalid_argument(std::string(who) + ": non-finite quaternion");
  const double n = q.norm();
  if (std::abs(n - 1.0) > 1e-3) {
    throw std::invalid_argument(std::string(who) + ": quaternion norm " + std::to_string(n) +
                                " too far from 1");
  }
  return q.normalized();
}

}  // namespace

double rotation_angle_deg(const Quaternion& a, const Quaternion& b) {
  const Quaternion ua = checked_unit(a, "rotation_angle_deg");
  const Quaternion ub = checked_unit(b, "rotation_angle_deg");
  const double d = std::min(1.0, std::abs(ua.dot(ub)));
  return rad_to_deg(2.0 * std::acos(d));
}

void PoseSeries::validate() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Pose& s = samples[i];
    if (s.frame != frame) throw std::invalid_argument("pose series: mixed frames");
    if (!s.finite()) throw std::invalid_argument("pose series: non-finite sample");
    if (i > 0 && samples[i].t <= samples[i - 1].t) {
      throw std::invalid_argument("pose series: timestamps not strictly increasing at index " +
                                  std::to_string(i));
    }
    if (s.valid && !s.q.is_unit(1e-6)) {
      throw std::invalid_argument("pose series: non-unit quaternion on valid sample");
    }
  }
}

double PoseSeries::estimate_rate_hz(const std::vector<Pose>& samples) {
  if (samples.size() < 2) return 0.0;
  std::vector<std::int64_t> gaps;
  gaps.reserve(samples.size() - 1);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    gaps.push_back(samples[i].t - samples[i - 1].t);
  }
  auto mid = gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2);
  std::nth_element(gaps.begin(), mid, gaps.end());
  const double median_ns = static_cast<double>(*mid);
  return median_ns > 0.0 ? 1e9 / median_ns : 0.0;
}

Quaternion mean_orientation(const std::vector<Quaternion>& qs) {
  if (qs.empty()) throw std::invalid_argument("mean_orientation: empty input");
  Eigen::Matrix4d accum = Eigen::Matrix4d::Zero();
  for (const Quaternion& raw : qs) {
    const Quaternion q = checked_unit(raw, "mean_orientation").canonicalized();
    Eigen::Vector4d v(q.w, q.x, q.y, q.z);
    accum += v * v.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(accum);
  const Eigen::Vector4d v = es.eigenvectors().col(3);  // largest eigenvalue
  return Quaternion{v(0), v(1), v(2), v(3)}.normalized().canonicalized();
}

}  // namespace posebench
