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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "posebench/align/pairing.hpp"
#include "posebench/core/types.hpp"
#include "posebench/refgen/paths.hpp"

namespace posebench {

/// Signed per-axis errors and 3D magnitudes, SoA so the stat reductions
/// can run through the vector kernels.
struct ErrorSeries {
  std::vector<Timestamp> t;
  std::vector<double> ex, ey, ez, e3d;  // mm

  std::size_t size() const { return e3d.size(); }
  bool empty() const { return e3d.empty(); }
};

/// e_axis = tracker - truth per axis, e3d = |e|; tracker timestamps are
/// carried through.
ErrorSeries paired_error_series(const PairedSeries& paired);

struct AxisStats {
  double x{0.0}, y{0.0}, z{0.0}, d3{0.0};
};

struct ErrorStats {
  /// Per-axis: sample std of the signed errors. 3D: sample std of the
  /// e3d magnitudes (the paper's precision/scatter figure).
  AxisStats sigma1;
  /// Population RMS; rms_3d^2 == rms_x^2 + rms_y^2 + rms_z^2.
  AxisStats rms;
  /// Per-axis max |.|, 3D max of e3d.
  AxisStats max_abs;
  double mean_e3d{0.0};
  std::size_t n{0};
};

/// Needs >= 2 samples.
ErrorStats error_stats(const ErrorSeries& errors);

struct PathDeviationStats {
  double mean_mm{0.0};  // TP
  double stddev_mm{0.0};
  double max_mm{0.0};
  std::size_t n{0};
};

/// Distance of every sample position to the nearest point of the
/// reference polyline. Positions must already live in the path's frame.
PathDeviationStats path_deviation(const std::vector<Eigen::Vector3d>& positions,
                                  const ReferencePath& ref);
PathDeviationStats path_deviation(const std::vector<Eigen::Vector3d>& positions,
                                  const kernels::SegmentSoa& segments);

/// OLS slope of e3d against time, mm/s. Needs two distinct timestamps.
double drift_rate_mm_s(const std::vector<Timestamp>& t, const std::vector<double>& e3d);

struct JitterResult {
  double pos_rms_mm{0.0};
  double rot_rms_deg{0.0};
};

/// RMS fluctuation about the window mean pose; window must hold >= 10
/// samples.
JitterResult jitter(const PoseSeries& window);

struct StaticPoseResult {
  std::string pose_id;
  std::string condition;
  std::size_t n{0};
  double mean_acc_mm{0.0};
  double max_error_mm{0.0};
  /// Absent (not zero) for a single repetition.
  std::optional<double> repeatability_mm;
  /// ISO 9283 variant l_bar + 3 * S_l, emitted alongside for comparison.
  std::optional<double> iso_repeatability_mm;
  double orient_acc_deg{0.0};
  std::optional<double> jitter_pos_mm;
  std::optional<double> jitter_rot_deg;
};

/// Static accuracy/repeatability over segmented repetitions. Each rep
/// contributes one representative pose: the mean over its dwell window,
/// for tracker and truth alike.
StaticPoseResult static_metrics(const std::vector<PoseSeries>& tracker_reps,
                                const std::vector<PoseSeries>& truth_reps);

struct DynamicTrialResult {
  std::string trial_id;
  std::string trajectory;
  std::string hmd_position;
  double speed_mm_s{0.0};
  std::size_t n_samples{0};
  ErrorStats stats;
  double drift_mm_s{0.0};
  std::optional<PathDeviationStats> path_dev;
  double orient_acc_deg{0.0};
};

/// Mean geodesic orientation error over all pairs, degrees.
double mean_orientation_error_deg(const PairedSeries& paired);

}  // namespace posebench
