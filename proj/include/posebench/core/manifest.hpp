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

#include "posebench/core/transform.hpp"
#include "posebench/core/types.hpp"

namespace posebench {

enum class TrialCategory {
  kStaticPose,
  kDynamicTrajectory,
  kOcclusion,
  kReliability,
  kStability,
};

enum class EventKind {
  kOcclusionPartial,
  kOcclusionFull,
  kExitVolume,
  kEnterVolume,
  kSystemStart,
  kRepStart,
  kRepEnd,
};

std::string to_string(TrialCategory c);
TrialCategory category_from_string(const std::string& s);
std::string to_string(EventKind k);
EventKind event_kind_from_string(const std::string& s);

/// Annotated time window. Instant events carry t_start == t_end.
struct TrialEvent {
  EventKind kind{EventKind::kSystemStart};
  Timestamp t_start;
  Timestamp t_end;

  double duration_seconds() const { return (t_end - t_start) * 1e-9; }
};

enum class CleaningStage { kZScore, kIqr, kKinematic };

std::string to_string(CleaningStage s);
CleaningStage cleaning_stage_from_string(const std::string& s);

struct CleaningConfig {
  double zscore_k{3.0};
  double iqr_k{1.5};
  /// Kinematic plausibility ceiling; when unset it is resolved per trial
  /// as max(10 * trial speed, 100 mm/s).
  std::optional<double> vmax_mm_s;
  std::vector<CleaningStage> enabled_stages{CleaningStage::kZScore, CleaningStage::kIqr,
                                            CleaningStage::kKinematic};

  double resolve_vmax(double trial_speed_mm_s) const {
    if (vmax_mm_s) return *vmax_mm_s;
    return std::max(10.0 * trial_speed_mm_s, 100.0);
  }

  void validate() const;
};

struct AlignmentConfig {
  /// max |dt| admitted by nearest-timestamp pairing, as a multiple of the
  /// ground-truth sample period.
  double max_gap_factor{1.5};
  /// 0 means unlimited; reuse counts are always reported.
  std::size_t max_truth_reuse{0};

  void validate() const;
};

/// What counts as a stable track for occlusion/initialization metrics:
/// k consecutive valid samples whose implied speed stays below
/// v_stable (trial speed + margin), found within timeout.
struct StabilityRule {
  std::size_t k_samples{10};
  double v_margin_mm_s{5.0};
  double timeout_s{10.0};

  double v_stable(double trial_speed_mm_s) const { return trial_speed_mm_s + v_margin_mm_s; }
};

struct RegistrationPoint {
  std::string id;
  Eigen::Vector3d tracker{Eigen::Vector3d::Zero()};  // mm, tracker frame
  Eigen::Vector3d truth{Eigen::Vector3d::Zero()};    // mm, ground-truth frame
  bool holdout{false};
};

struct RegistrationSpec {
  std::vector<RegistrationPoint> points;
  bool with_scale{false};
  double rms_warn_mm{1.0};
};

/// Reference geometry attached to a dynamic trial: which protocol path to
/// regenerate and where it sits in the ground-truth frame.
struct ReferenceSpec {
  std::string protocol_id;  // DT01..DT04-2 or custom
  double length_mm{0.0};
  double radius_mm{0.0};
  double side_mm{0.0};
  double torus_major_mm{0.0};
  double torus_minor_mm{0.0};
  int torus_turns{0};
  double raster_width_mm{0.0};
  double raster_height_mm{0.0};
  int raster_lines{0};
  RigidTransform placement{RigidTransform::identity(FrameId::kReference,
                                                    FrameId::kGroundtruthWorld)};
};

/// Ground-truth labels written by the simulator so cleaning and detection
/// can be scored exactly.
struct FaultLabels {
  std::vector<Timestamp> spike_timestamps;
  std::vector<std::pair<Timestamp, Timestamp>> dropout_windows;
  bool confident_wrong{false};
  double injected_drift_mm_s{0.0};
};

struct TrialManifest {
  std::string trial_id;
  TrialCategory category{TrialCategory::kStaticPose};
  std::string protocol_id;  // SP01..SP08, DT01..DT04-2, RT03, SYT01/02, ST01
  bool custom_protocol{false};
  std::string hmd_position;  // F1, F2, S3, S4
  double speed_mm_s{0.0};
  int repetitions{1};
  std::string tracker_log;
  std::string truth_log;
  std::vector<TrialEvent> events;
  std::optional<ReferenceSpec> reference;
  std::optional<RegistrationSpec> registration;  // overrides the session block
  std::optional<FaultLabels> labels;
  std::string pose_id;  // static trials: which SP pose this trial measures

  std::vector<TrialEvent> events_of(EventKind kind) const;
  void validate() const;
};

struct Session {
  std::string session_id;
  std::vector<TrialManifest> trials;
  std::optional<RegistrationSpec> registration;
  CleaningConfig cleaning;
  AlignmentConfig alignment;
  StabilityRule stability;
  /// Directory the manifest was loaded from; log paths resolve against it.
  std::string base_dir;

  void validate() const;
};

bool is_known_protocol(const std::string& protocol_id);

}  // namespace posebench
