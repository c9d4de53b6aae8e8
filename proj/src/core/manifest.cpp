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

#include "posebench/core/manifest.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace posebench {

std::string to_string(TrialCategory c) {
  switch (c) {
    case TrialCategory::kStaticPose:
      return "STATIC_POSE";
    case TrialCategory::kDynamicTrajectory:
      return "DYNAMIC_TRAJECTORY";
    case TrialCategory::kOcclusion:
      return "OCCLUSION";
    case TrialCategory::kReliability:
      return "RELIABILITY";
    case TrialCategory::kStability:
      return "STABILITY";
  }
  return "UNKNOWN";
}

TrialCategory category_from_string(const std::string& s) {
  static const std::map<std::string, TrialCategory> table = {
      {"STATIC_POSE", TrialCategory::kStaticPose},
      {"DYNAMIC_TRAJECTORY", TrialCategory::kDynamicTrajectory},
      {"OCCLUSION", TrialCategory::kOcclusion},
      {"RELIABILITY", TrialCategory::kReliability},
      {"STABILITY", TrialCategory::kStability},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown trial category: " + s);
  return it->second;
}

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::kOcclusionPartial:
      return "OCCLUSION_PARTIAL";
    case EventKind::kOcclusionFull:
      return "OCCLUSION_FULL";
    case EventKind::kExitVolume:
      return "EXIT_VOLUME";
    case EventKind::kEnterVolume:
      return "ENTER_VOLUME";
    case EventKind::kSystemStart:
      return "SYSTEM_START";
    case EventKind::kRepStart:
      return "REP_START";
    case EventKind::kRepEnd:
      return "REP_END";
  }
  return "UNKNOWN";
}

EventKind event_kind_from_string(const std::string& s) {
  static const std::map<std::string, EventKind> table = {
      {"OCCLUSION_PARTIAL", EventKind::kOcclusionPartial},
      {"OCCLUSION_FULL", EventKind::kOcclusionFull},
      {"EXIT_VOLUME", EventKind::kExitVolume},
      {"ENTER_VOLUME", EventKind::kEnterVolume},
      {"SYSTEM_START", EventKind::kSystemStart},
      {"REP_START", EventKind::kRepStart},
      {"REP_END", EventKind::kRepEnd},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown event kind: " + s);
  return it->second;
}

std::string to_string(CleaningStage s) {
  switch (s) {
    case CleaningStage::kZScore:
      return "zscore";
    case CleaningStage::kIqr:
      return "iqr";
    case CleaningStage::kKinematic:
      return "kinematic";
  }
  return "unknown";
}

CleaningStage cleaning_stage_from_string(const std::string& s) {
  if (s == "zscore") return CleaningStage::kZScore;
  if (s == "iqr") return CleaningStage::kIqr;
  if (s == "kinematic") return CleaningStage::kKinematic;
  throw std::invalid_argument("unknown cleaning stage: " + s);
}

void CleaningConfig::validate() const {
  if (!(zscore_k > 0.0)) throw std::invalid_argument("cleaning: zscore_k must be > 0");
  if (!(iqr_k > 0.0)) throw std::invalid_argument("cleaning: iqr_k must be > 0");
  if (vmax_mm_s && !(*vmax_mm_s > 0.0)) {
    throw std::invalid_argument("cleaning: vmax must be > 0");
  }
}

void AlignmentConfig::validate() const {
  if (!(max_gap_factor > 0.0)) throw std::invalid_argument("alignment: max_gap_factor must be > 0");
}

std::vector<TrialEvent> TrialManifest::events_of(EventKind kind) const {
  std::vector<TrialEvent> out;
  for (const TrialEvent& e : events) {
    if (e.kind == kind) out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](const TrialEvent& a, const TrialEvent& b) { return a.t_start < b.t_start; });
  return out;
}

namespace {

const std::array<const char*, 4> kHmdPositions = {"F1", "F2", "S3", "S4"};

void check_no_overlap(const std::vector<TrialEvent>& events, const std::string& trial_id) {
  std::map<EventKind, std::vector<TrialEvent>> by_kind;
  for (const TrialEvent& e : events) {
    if (e.t_end < e.t_start) {
      throw std::invalid_argument("trial " + trial_id + ": event window ends before it starts");
    }
    by_kind[e.kind].push_back(e);
  }
  for (auto& [kind, list] : by_kind) {
    std::sort(list.begin(), list.end(),
              [](const TrialEvent& a, const TrialEvent& b) { return a.t_start < b.t_start; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].t_start < list[i - 1].t_end) {
        throw std::invalid_argument("trial " + trial_id + ": overlapping " + to_string(kind) +
                                    " windows");
      }
    }
  }
}

}  // namespace

bool is_known_protocol(const std::string& protocol_id) {
  static const std::array<const char*, 18> known = {
      "SP01", "SP02", "SP03", "SP04", "SP05", "SP06",   "SP07",   "SP08",  "DT01",
      "DT02", "DT03", "DT04", "DT04-1", "DT04-2", "RT03", "SYT01", "SYT02", "ST01"};
  return std::find(known.begin(), known.end(), protocol_id) != known.end();
}

void TrialManifest::validate() const {
  if (trial_id.empty()) throw std::invalid_argument("trial id must not be empty");
  if (repetitions < 1) {
    throw std::invalid_argument("trial " + trial_id + ": repetitions must be >= 1");
  }
  if (category == TrialCategory::kDynamicTrajectory && !(speed_mm_s > 0.0)) {
    throw std::invalid_argument("trial " + trial_id + ": dynamic trials need speed > 0");
  }
  if (std::find(kHmdPositions.begin(), kHmdPositions.end(), hmd_position) ==
      kHmdPositions.end()) {
    throw std::invalid_argument("trial " + trial_id + ": unknown hmd_position '" + hmd_position +
                                "'");
  }
  check_no_overlap(events, trial_id);
}

void Session::validate() const {
  if (trials.empty()) throw std::invalid_argument("session declares zero trials");
  for (const TrialManifest& t : trials) t.validate();
  cleaning.validate();
  alignment.validate();
  if (registration) {
    std::size_t fit = 0;
    for (const RegistrationPoint& p : registration->points) {
      if (!p.holdout) ++fit;
    }
    if (fit < 3) {
      throw std::invalid_argument("session registration needs >= 3 non-holdout point pairs");
    }
  }
}

}  // namespace posebench
