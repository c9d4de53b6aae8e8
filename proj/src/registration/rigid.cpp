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

#include "posebench/registration/rigid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace posebench {

RegistrationResult estimate_rigid(const std::vector<Eigen::Vector3d>& src,
                                  const std::vector<Eigen::Vector3d>& dst, bool with_scale,
                                  FrameId src_frame, FrameId dst_frame, double rms_warn_mm) {
  const std::size_t n = src.size();
  if (n != dst.size()) throw std::invalid_argument("estimate_rigid: point count mismatch");
  if (n < 3) throw std::invalid_argument("estimate_rigid: need at least 3 correspondences");

  Eigen::Matrix3Xd s(3, n), d(3, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!src[i].allFinite() || !dst[i].allFinite()) {
      throw std::invalid_argument("estimate_rigid: non-finite point");
    }
    s.col(static_cast<Eigen::Index>(i)) = src[i];
    d.col(static_cast<Eigen::Index>(i)) = dst[i];
  }

  const Eigen::Vector3d mu_s = s.rowwise().mean();
  const Eigen::Vector3d mu_d = d.rowwise().mean();
  const Eigen::Matrix3Xd sc = s.colwise() - mu_s;
  const Eigen::Matrix3Xd dc = d.colwise() - mu_d;

  // Conditioning: the problem degenerates when the source points are
  // collinear (rank < 2). Coplanar sets are fine, the sign correction
  // below picks the proper rotation branch.
  {
    Eigen::JacobiSVD<Eigen::Matrix3Xd> cond(sc);
    const Eigen::VectorXd sv = cond.singularValues();
    if (sv(1) < 1e-6 * sv(0)) {
      throw std::invalid_argument(
          "estimate_rigid: source points collinear within tolerance (sigma2/sigma1 = " +
          std::to_string(sv(0) > 0 ? sv(1) / sv(0) : 0.0) + ")");
    }
  }

  const Eigen::Matrix3d cov = dc * sc.transpose() / static_cast<double>(n);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d sign_fix = Eigen::Vector3d::Ones();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) {
    sign_fix(2) = -1.0;
  }
  const Eigen::Matrix3d rot =
      svd.matrixU() * sign_fix.asDiagonal() * svd.matrixV().transpose();

  double scale = 1.0;
  if (with_scale) {
    const double var_s = sc.squaredNorm() / static_cast<double>(n);
    if (!(var_s > 0.0)) throw std::invalid_argument("estimate_rigid: degenerate source spread");
    scale = svd.singularValues().dot(sign_fix) / var_s;
    if (!(scale > 0.0)) throw std::invalid_argument("estimate_rigid: non-positive scale estimate");
  }

  RegistrationResult out;
  out.transform.rot = rot;
  out.transform.scale = scale;
  out.transform.tvec = mu_d - scale * (rot * mu_s);
  out.transform.src_frame = src_frame;
  out.transform.dst_frame = dst_frame;

  double sq_sum = 0.0;
  out.residuals_mm.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (dst[i] - out.transform.apply(src[i])).norm();
    out.residuals_mm.push_back(r);
    sq_sum += r * r;
  }
  out.rms_mm = std::sqrt(sq_sum / static_cast<double>(n));
  out.rms_warning = out.rms_mm > rms_warn_mm;
  return out;
}

double registration_quality(const RigidTransform& t, const std::vector<Eigen::Vector3d>& src,
                            const std::vector<Eigen::Vector3d>& dst) {
  if (src.empty() || src.size() != dst.size()) {
    throw std::invalid_argument("registration_quality: need >= 1 holdout pair");
  }
  double sq_sum = 0.0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    sq_sum += (dst[i] - t.apply(src[i])).squaredNorm();
  }
  return std::sqrt(sq_sum / static_cast<double>(src.size()));
}

RegistrationResult estimate_from_spec(const RegistrationSpec& spec, FrameId src_frame,
                                      FrameId dst_frame) {
  std::vector<Eigen::Vector3d> fit_src, fit_dst, hold_src, hold_dst;
  for (const RegistrationPoint& p : spec.points) {
    if (p.holdout) {
      hold_src.push_back(p.tracker);
      hold_dst.push_back(p.truth);
    } else {
      fit_src.push_back(p.tracker);
      fit_dst.push_back(p.truth);
    }
  }
  RegistrationResult res = estimate_rigid(fit_src, fit_dst, spec.with_scale, src_frame, dst_frame,
                                          spec.rms_warn_mm);
  if (!hold_src.empty()) {
    res.holdout_rms_mm = registration_quality(res.transform, hold_src, hold_dst);
  }
  return res;
}

}  // namespace posebench
