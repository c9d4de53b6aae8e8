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

#include "posebench/align/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace posebench {

PairedSeries pair_nearest(const PoseSeries& tracker, const PoseSeries& truth,
                          std::int64_t max_gap_ns, std::size_t max_truth_reuse) {
  if (tracker.empty() || truth.empty()) {
    throw std::invalid_argument("pair_nearest: empty series");
  }
  if (max_gap_ns <= 0) throw std::invalid_argument("pair_nearest: max_gap must be > 0");
  if (tracker.front().t.ns > truth.back().t.ns || tracker.back().t.ns < truth.front().t.ns) {
    throw std::invalid_argument("pair_nearest: series time ranges do not intersect");
  }

  struct Candidate {
    std::size_t tracker_idx;
    std::size_t truth_idx;
    std::int64_t dt;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(tracker.size());

  std::size_t j = 0;
  for (std::size_t i = 0; i < tracker.size(); ++i) {
    const std::int64_t t = tracker.samples[i].t.ns;
    while (j + 1 < truth.size() &&
           std::llabs(truth.samples[j + 1].t.ns - t) <= std::llabs(truth.samples[j].t.ns - t)) {
      ++j;
    }
    candidates.push_back({i, j, t - truth.samples[j].t.ns});
  }

  PairedSeries out;
  std::size_t gap_dropped = 0;
  std::vector<const Candidate*> kept;
  kept.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    if (std::llabs(c.dt) > max_gap_ns) {
      ++gap_dropped;
    } else {
      kept.push_back(&c);
    }
  }

  // Reuse accounting; with a limit, a truth sample keeps its K nearest
  // tracker matches.
  std::map<std::size_t, std::vector<const Candidate*>> by_truth;
  for (const Candidate* c : kept) by_truth[c->truth_idx].push_back(c);
  std::size_t reuse_dropped = 0;
  std::vector<const Candidate*> final_set;
  final_set.reserve(kept.size());
  for (auto& [idx, group] : by_truth) {
    out.max_truth_reuse = std::max(out.max_truth_reuse, group.size());
    if (max_truth_reuse > 0 && group.size() > max_truth_reuse) {
      std::stable_sort(group.begin(), group.end(), [](const Candidate* a, const Candidate* b) {
        return std::llabs(a->dt) < std::llabs(b->dt);
      });
      reuse_dropped += group.size() - max_truth_reuse;
      group.resize(max_truth_reuse);
    }
    final_set.insert(final_set.end(), group.begin(), group.end());
  }
  std::sort(final_set.begin(), final_set.end(),
            [](const Candidate* a, const Candidate* b) { return a->tracker_idx < b->tracker_idx; });

  out.dropped = gap_dropped + reuse_dropped;
  out.pairs.reserve(final_set.size());
  for (const Candidate* c : final_set) {
    out.pairs.push_back({tracker.samples[c->tracker_idx], truth.samples[c->truth_idx], c->dt});
    out.max_abs_dt_ns = std::max(out.max_abs_dt_ns, std::llabs(c->dt));
  }
  return out;
}

std::int64_t default_max_gap_ns(const PoseSeries& truth, double max_gap_factor) {
  double rate = truth.nominal_rate_hz;
  if (!(rate > 0.0)) rate = PoseSeries::estimate_rate_hz(truth.samples);
  if (!(rate > 0.0)) throw std::invalid_argument("default_max_gap_ns: truth rate unknown");
  return static_cast<std::int64_t>(std::llround(max_gap_factor * 1e9 / rate));
}

double pairing_error_bound_mm(double speed_mm_s, double truth_rate_hz) {
  if (speed_mm_s < 0.0) throw std::invalid_argument("pairing_error_bound: speed must be >= 0");
  if (!(truth_rate_hz > 0.0)) throw std::invalid_argument("pairing_error_bound: rate must be > 0");
  return speed_mm_s / (2.0 * truth_rate_hz);
}

}  // namespace posebench
