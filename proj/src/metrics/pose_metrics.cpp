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

#include "posebench/metrics/pose_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "posebench/kernels/kernels.hpp"

namespace posebench {

namespace {

double sample_std_from_moments(const kernels::Moments& m, std::size_t n) {
  if (n < 2) return 0.0;
  const double dn = static_cast<double>(n);
  const double mean = m.sum / dn;
  const double var = std::max(0.0, (m.sum_sq - dn * mean * mean) / (dn - 1.0));
  return std::sqrt(var);
}

}  // namespace

ErrorSeries paired_error_series(const PairedSeries& paired) {
  if (paired.empty()) throw std::invalid_argument("paired_error_series: empty input");
  const std::size_t n = paired.size();
  std::vector<double> ax(n), ay(n), az(n), bx(n), by(n), bz(n);
  ErrorSeries out;
  out.t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PosePair& pp = paired.pairs[i];
    ax[i] = pp.tracker.p.x();
    ay[i] = pp.tracker.p.y();
    az[i] = pp.tracker.p.z();
    bx[i] = pp.truth.p.x();
    by[i] = pp.truth.p.y();
    bz[i] = pp.truth.p.z();
    out.t.push_back(pp.tracker.t);
  }
  out.ex.resize(n);
  out.ey.resize(n);
  out.ez.resize(n);
  out.e3d.resize(n);
  kernels::axis_errors(ax.data(), ay.data(), az.data(), bx.data(), by.data(), bz.data(),
                       out.ex.data(), out.ey.data(), out.ez.data(), out.e3d.data(), n);
  return out;
}

ErrorStats error_stats(const ErrorSeries& errors) {
  const std::size_t n = errors.size();
  if (n < 2) throw std::invalid_argument("error_stats: need >= 2 samples");
  const double dn = static_cast<double>(n);

  const kernels::Moments mx = kernels::reduce_moments(errors.ex.data(), n);
  const kernels::Moments my = kernels::reduce_moments(errors.ey.data(), n);
  const kernels::Moments mz = kernels::reduce_moments(errors.ez.data(), n);
  const kernels::Moments md = kernels::reduce_moments(errors.e3d.data(), n);

  ErrorStats s;
  s.n = n;
  s.sigma1 = {sample_std_from_moments(mx, n), sample_std_from_moments(my, n),
              sample_std_from_moments(mz, n), sample_std_from_moments(md, n)};
  s.rms = {std::sqrt(mx.sum_sq / dn), std::sqrt(my.sum_sq / dn), std::sqrt(mz.sum_sq / dn),
           std::sqrt(md.sum_sq / dn)};
  s.max_abs = {mx.max_abs, my.max_abs, mz.max_abs, md.max_abs};
  s.mean_e3d = md.sum / dn;
  return s;
}

PathDeviationStats path_deviation(const std::vector<Eigen::Vector3d>& positions,
                                  const ReferencePath& ref) {
  if (ref.points.size() < 2) throw std::invalid_argument("path_deviation: path needs >= 2 points");
  return path_deviation(positions, path_segments(ref));
}

PathDeviationStats path_deviation(const std::vector<Eigen::Vector3d>& positions,
                                  const kernels::SegmentSoa& segments) {
  if (positions.empty()) throw std::invalid_argument("path_deviation: no samples");
  if (segments.size() == 0) throw std::invalid_argument("path_deviation: no segments");
  std::vector<double> d(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    d[i] = std::sqrt(kernels::min_dist_sq_to_segments(segments, positions[i].x(),
                                                      positions[i].y(), positions[i].z()));
  }
  const kernels::Moments m = kernels::reduce_moments(d.data(), d.size());
  PathDeviationStats out;
  out.n = d.size();
  out.mean_mm = m.sum / static_cast<double>(d.size());
  out.stddev_mm = sample_std_from_moments(m, d.size());
  out.max_mm = m.max_abs;
  return out;
}

double drift_rate_mm_s(const std::vector<Timestamp>& t, const std::vector<double>& e3d) {
  if (t.size() != e3d.size()) throw std::invalid_argument("drift_rate: size mismatch");
  if (t.size() < 2 || t.front() == t.back()) {
    throw std::invalid_argument("drift_rate: need >= 2 distinct timestamps");
  }
  const double n = static_cast<double>(t.size());
  const std::int64_t t0 = t.front().ns;
  double mean_t = 0.0, mean_e = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    mean_t += (t[i].ns - t0) * 1e-9;
    mean_e += e3d[i];
  }
  mean_t /= n;
  mean_e /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double dt = (t[i].ns - t0) * 1e-9 - mean_t;
    num += dt * (e3d[i] - mean_e);
    den += dt * dt;
  }
  if (den == 0.0) throw std::invalid_argument("drift_rate: zero time variance");
  return num / den;
}

JitterResult jitter(const PoseSeries& window) {
  if (window.size() < 10) throw std::invalid_argument("jitter: window needs >= 10 samples");
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  std::vector<Quaternion> qs;
  qs.reserve(window.size());
  for (const Pose& s : window.samples) {
    mean += s.p;
    qs.push_back(s.q);
  }
  mean /= static_cast<double>(window.size());

  double pos_sq = 0.0;
  for (const Pose& s : window.samples) pos_sq += (s.p - mean).squaredNorm();
  const Quaternion mean_q = mean_orientation(qs);
  double rot_sq = 0.0;
  for (const Quaternion& q : qs) {
    const double a = rotation_angle_deg(q, mean_q);
    rot_sq += a * a;
  }
  const double n = static_cast<double>(window.size());
  return {std::sqrt(pos_sq / n), std::sqrt(rot_sq / n)};
}

StaticPoseResult static_metrics(const std::vector<PoseSeries>& tracker_reps,
                                const std::vector<PoseSeries>& truth_reps) {
  if (tracker_reps.empty()) throw std::invalid_argument("static_metrics: no repetitions");
  if (tracker_reps.size() != truth_reps.size()) {
    throw std::invalid_argument("static_metrics: tracker/truth repetition count mismatch");
  }

  struct Rep {
    Eigen::Vector3d tracker_p;
    Eigen::Vector3d truth_p;
    Quaternion tracker_q;
    Quaternion truth_q;
  };
  std::vector<Rep> reps;
  reps.reserve(tracker_reps.size());

  double jitter_pos_sum = 0.0, jitter_rot_sum = 0.0;
  std::size_t jitter_n = 0;

  for (std::size_t r = 0; r < tracker_reps.size(); ++r) {
    const PoseSeries& tr = tracker_reps[r];
    const PoseSeries& th = truth_reps[r];
    if (tr.empty() || th.empty()) {
      throw std::invalid_argument("static_metrics: empty repetition window");
    }
    Rep rep;
    rep.tracker_p = Eigen::Vector3d::Zero();
    rep.truth_p = Eigen::Vector3d::Zero();
    std::vector<Quaternion> tr_q, th_q;
    for (const Pose& s : tr.samples) {
      rep.tracker_p += s.p;
      tr_q.push_back(s.q);
    }
    for (const Pose& s : th.samples) {
      rep.truth_p += s.p;
      th_q.push_back(s.q);
    }
    rep.tracker_p /= static_cast<double>(tr.size());
    rep.truth_p /= static_cast<double>(th.size());
    rep.tracker_q = mean_orientation(tr_q);
    rep.truth_q = mean_orientation(th_q);
    reps.push_back(rep);

    if (tr.size() >= 10) {
      const JitterResult j = jitter(tr);
      jitter_pos_sum += j.pos_rms_mm;
      jitter_rot_sum += j.rot_rms_deg;
      ++jitter_n;
    }
  }

  StaticPoseResult out;
  out.n = reps.size();

  double acc_sum = 0.0, orient_sum = 0.0;
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const Rep& rep : reps) {
    const double err = (rep.tracker_p - rep.truth_p).norm();
    acc_sum += err;
    out.max_error_mm = std::max(out.max_error_mm, err);
    orient_sum += rotation_angle_deg(rep.tracker_q, rep.truth_q);
    centroid += rep.tracker_p;
  }
  const double n = static_cast<double>(reps.size());
  out.mean_acc_mm = acc_sum / n;
  out.orient_acc_deg = orient_sum / n;
  centroid /= n;

  if (reps.size() >= 2) {
    double sq_sum = 0.0, dist_sum = 0.0;
    std::vector<double> dists;
    dists.reserve(reps.size());
    for (const Rep& rep : reps) {
      const double d = (rep.tracker_p - centroid).norm();
      dists.push_back(d);
      sq_sum += d * d;
      dist_sum += d;
    }
    out.repeatability_mm = std::sqrt(sq_sum / (n - 1.0));
    const double l_bar = dist_sum / n;
    double s_l_sq = 0.0;
    for (double d : dists) s_l_sq += (d - l_bar) * (d - l_bar);
    out.iso_repeatability_mm = l_bar + 3.0 * std::sqrt(s_l_sq / (n - 1.0));
  }

  if (jitter_n > 0) {
    out.jitter_pos_mm = jitter_pos_sum / static_cast<double>(jitter_n);
    out.jitter_rot_deg = jitter_rot_sum / static_cast<double>(jitter_n);
  }
  return out;
}

double mean_orientation_error_deg(const PairedSeries& paired) {
  if (paired.empty()) throw std::invalid_argument("mean_orientation_error: empty input");
  double sum = 0.0;
  for (const PosePair& pp : paired.pairs) {
    sum += rotation_angle_deg(pp.tracker.q, pp.truth.q);
  }
  return sum / static_cast<double>(paired.size());
}

}  // namespace posebench
