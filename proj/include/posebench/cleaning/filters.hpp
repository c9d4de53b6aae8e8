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

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "posebench/align/pairing.hpp"
#include "posebench/core/manifest.hpp"

namespace posebench {

struct FilterMask {
  std::vector<bool> kept;
  std::size_t rejected{0};
};

/// Outlier iff |v - mean| > k * std, with mean/std taken over the full
/// input. Zero variance rejects nothing. Needs >= 3 values.
FilterMask zscore_filter(const std::vector<double>& values, double k);

/// Tukey fences with quartiles by linear interpolation between order
/// statistics. A degenerate IQR of 0 collapses the fence onto the
/// quartiles, so only values strictly outside them go. Needs >= 4 values.
FilterMask iqr_filter(const std::vector<double>& values, double k);

/// Forward pass with last-kept anchor: a sample is rejected iff the speed
/// implied against the last kept sample exceeds vmax, so one glitch does
/// not cascade. A repeated timestamp rejects the later sample.
FilterMask kinematic_filter(const std::vector<Eigen::Vector3d>& positions,
                            const std::vector<Timestamp>& times, double vmax_mm_s);

struct StageReport {
  CleaningStage stage{CleaningStage::kZScore};
  std::size_t input{0};
  std::size_t rejected{0};
  bool skipped{false};  // stage precondition unmet (too few samples)
};

struct CleaningReport {
  std::vector<StageReport> stages;
  std::size_t input{0};
  std::size_t kept{0};
  /// Indices into the original paired series, per rejected sample.
  std::vector<std::size_t> rejected_indices;
  /// More than 30% rejected: possible systematic failure upstream.
  bool excess_rejection_warning{false};

  double rejection_fraction() const {
    return input == 0 ? 0.0 : static_cast<double>(input - kept) / static_cast<double>(input);
  }
};

struct CleaningOutcome {
  PairedSeries cleaned;
  CleaningReport report;
};

/// Applies the configured stages in order, each exactly once. Z-score and
/// IQR act on the 3D error magnitudes, the kinematic stage on tracker
/// positions. Each stage only sees samples surviving the previous ones;
/// order is never changed.
CleaningOutcome run_pipeline(const PairedSeries& paired, const CleaningConfig& cfg,
                             double trial_speed_mm_s);

}  // namespace posebench
