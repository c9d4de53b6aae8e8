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

#include "posebench/core/transform.hpp"

#include <stdexcept>

namespace posebench {

RigidTransform RigidTransform::inverse() const {
  RigidTransform out;
  out.rot = rot.transpose();
  out.scale = 1.0 / scale;
  out.tvec = -(out.scale * (out.rot * tvec));
  out.src_frame = dst_frame;
  out.dst_frame = src_frame;
  return out;
}

void RigidTransform::validate(double tol) const {
  if (!(scale > 0.0)) throw std::invalid_argument("rigid transform: scale must be positive");
  if (!rot.allFinite() || !tvec.allFinite()) {
    throw std::invalid_argument("rigid transform: non-finite entries");
  }
  const Eigen::Matrix3d err = rot.transpose() * rot - Eigen::Matrix3d::Identity();
  if (err.cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("rigid transform: rotation not orthonormal");
  }
  if (std::abs(rot.determinant() - 1.0) > tol) {
    throw std::invalid_argument("rigid transform: det(R) != +1 (reflection?)");
  }
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  if (b.dst_frame != a.src_frame) {
    throw std::invalid_argument("compose: frames do not chain (" + to_string(b.dst_frame) +
                                " -> " + to_string(a.src_frame) + ")");
  }
  RigidTransform out;
  out.rot = a.rot * b.rot;
  out.scale = a.scale * b.scale;
  out.tvec = a.scale * (a.rot * b.tvec) + a.tvec;
  out.src_frame = b.src_frame;
  out.dst_frame = a.dst_frame;
  return out;
}

PoseSeries apply(const RigidTransform& t, const PoseSeries& series) {
  if (series.frame != t.src_frame) {
    throw std::invalid_argument("apply: series frame " + to_string(series.frame) +
                                " does not match transform source " + to_string(t.src_frame));
  }
  const Quaternion rq = t.rotation_quat();
  PoseSeries out;
  out.frame = t.dst_frame;
  out.nominal_rate_hz = series.nominal_rate_hz;
  out.samples.reserve(series.samples.size());
  for (const Pose& s : series.samples) {
    Pose m = s;
    m.p = t.apply(s.p);
    m.q = (rq * s.q).canonicalized();
    m.frame = t.dst_frame;
    out.samples.push_back(m);
  }
  return out;
}

}  // namespace posebench
