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

#include "posebench/core/manifest.hpp"
#include "posebench/core/types.hpp"

namespace posebench {

struct PosePair {
  Pose tracker;
  Pose truth;
  std::int64_t dt_ns{0};  // tracker.t - truth.t
};

struct PairedSeries {
  std::vector<PosePair> pairs;
  std::int64_t max_abs_dt_ns{0};
  std::size_t dropped{0};
  /// Highest number of tracker samples matched to a single truth sample.
  std::size_t max_truth_reuse{0};

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

/// Matches every tracker sample to the truth sample with the nearest
/// timestamp; no interpolation. Pairs with |dt| > max_gap_ns are dropped
/// and counted. With max_truth_reuse > 0, a truth sample keeps only its
/// K nearest tracker matches and the rest are dropped.
///
/// Throws when either series is empty or their time ranges do not
/// intersect.
PairedSeries pair_nearest(const PoseSeries& tracker, const PoseSeries& truth,
                          std::int64_t max_gap_ns, std::size_t max_truth_reuse = 0);

/// 1.5 x the ground-truth sample period (admits 30 Hz-vs-50 Hz jitter,
/// rejects pairs spanning dropouts).
std::int64_t default_max_gap_ns(const PoseSeries& truth, double max_gap_factor = 1.5);

/// Worst-case positional error induced by nearest-timestamp pairing:
/// speed x half the truth sample period.
double pairing_error_bound_mm(double speed_mm_s, double truth_rate_hz);

}  // namespace posebench
