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
#include <vector>

#include "posebench/align/pairing.hpp"
#include "posebench/core/manifest.hpp"
#include "posebench/core/types.hpp"

namespace posebench {

struct TrackingGap {
  Timestamp t_start;
  Timestamp t_end;

  double duration_s() const { return (t_end - t_start) * 1e-9; }
};

/// A gap is an inter-sample interval longer than gap_factor x the nominal
/// period, or a run of valid=false samples. Returned sorted and merged.
std::vector<TrackingGap> detect_gaps(const PoseSeries& series, double gap_factor = 1.5);

struct OcclusionEventResult {
  TrialEvent event;
  bool skipped{false};  // window outside the recorded span
  bool success{false};
  /// ROT: window end to first sample of the stable run; present iff
  /// success.
  std::optional<double> reacquisition_s;
};

struct OcclusionMetrics {
  double osr_pct{0.0};
  std::size_t evaluated{0};
  std::vector<OcclusionEventResult> events;
};

/// An occlusion is recovered iff a stable track begins within the rule's
/// timeout after the window ends.
OcclusionMetrics occlusion_metrics(const PoseSeries& series,
                                   const std::vector<TrialEvent>& occlusion_windows,
                                   const StabilityRule& rule, double trial_speed_mm_s = 0.0);

/// INT: system start to the first sample of the first stable run, or
/// absent when the series never stabilizes.
std::optional<double> initialization_time_s(const PoseSeries& series, Timestamp system_start,
                                            const StabilityRule& rule,
                                            double trial_speed_mm_s = 0.0);

/// RLT per ENTER_VOLUME event, same stability semantics as occlusion.
std::vector<OcclusionEventResult> reacquisition_times(const PoseSeries& series,
                                                      const std::vector<TrialEvent>& enter_events,
                                                      const StabilityRule& rule,
                                                      double trial_speed_mm_s = 0.0);

struct LongTermDrift {
  double pos_mm_per_min{0.0};
  double rot_deg_per_min{0.0};
};

/// DRT over an extended static hold; throws (naming the required span)
/// when the paired data covers less than min_span_s.
LongTermDrift long_term_drift(const PairedSeries& paired, double min_span_s = 1800.0);

}  // namespace posebench
