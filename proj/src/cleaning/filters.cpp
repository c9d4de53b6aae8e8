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

#include "posebench/cleaning/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace posebench {

namespace {

double quantile_linear(std::vector<double> sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

FilterMask zscore_filter(const std::vector<double>& values, double k) {
  if (values.size() < 3) throw std::invalid_argument("zscore_filter: need >= 3 values");
  if (!(k > 0.0)) throw std::invalid_argument("zscore_filter: k must be > 0");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ss / (n - 1.0));

  FilterMask mask;
  mask.kept.assign(values.size(), true);
  if (stddev == 0.0) return mask;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i] - mean) > k * stddev) {
      mask.kept[i] = false;
      ++mask.rejected;
    }
  }
  return mask;
}

FilterMask iqr_filter(const std::vector<double>& values, double k) {
  if (values.size() < 4) throw std::invalid_argument("iqr_filter: need >= 4 values");
  if (!(k > 0.0)) throw std::invalid_argument("iqr_filter: k must be > 0");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const double q1 = quantile_linear(sorted, 0.25);
  const double q3 = quantile_linear(sorted, 0.75);
  const double iqr = q3 - q1;
  const double lo = q1 - k * iqr;
  const double hi = q3 + k * iqr;

  FilterMask mask;
  mask.kept.assign(values.size(), true);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < lo || values[i] > hi) {
      mask.kept[i] = false;
      ++mask.rejected;
    }
  }
  return mask;
}

FilterMask kinematic_filter(const std::vector<Eigen::Vector3d>& positions,
                            const std::vector<Timestamp>& times, double vmax_mm_s) {
  if (positions.size() != times.size()) {
    throw std::invalid_argument("kinematic_filter: positions/times size mismatch");
  }
  if (positions.size() < 2) throw std::invalid_argument("kinematic_filter: need >= 2 samples");
  if (!(vmax_mm_s > 0.0)) throw std::invalid_argument("kinematic_filter: vmax must be > 0");

  FilterMask mask;
  mask.kept.assign(positions.size(), true);
  std::size_t anchor = 0;
  for (std::size_t i = 1; i < positions.size(); ++i) {
    const double dt_s = (times[i] - times[anchor]) * 1e-9;
    if (dt_s <= 0.0) {  // duplicate timestamp
      mask.kept[i] = false;
      ++mask.rejected;
      continue;
    }
    const double speed = (positions[i] - positions[anchor]).norm() / dt_s;
    if (speed > vmax_mm_s) {
      mask.kept[i] = false;
      ++mask.rejected;
    } else {
      anchor = i;
    }
  }
  return mask;
}

CleaningOutcome run_pipeline(const PairedSeries& paired, const CleaningConfig& cfg,
                             double trial_speed_mm_s) {
  cfg.validate();
  const double vmax = cfg.resolve_vmax(trial_speed_mm_s);

  CleaningOutcome out;
  out.report.input = paired.size();

  // Index into the original series for every surviving sample.
  std::vector<std::size_t> live(paired.size());
  std::iota(live.begin(), live.end(), 0);

  for (CleaningStage stage : cfg.enabled_stages) {
    StageReport sr;
    sr.stage = stage;
    sr.input = live.size();

    FilterMask mask;
    bool ran = false;
    switch (stage) {
      case CleaningStage::kZScore:
      case CleaningStage::kIqr: {
        const std::size_t min_n = stage == CleaningStage::kZScore ? 3 : 4;
        if (live.size() >= min_n) {
          std::vector<double> e3d;
          e3d.reserve(live.size());
          for (std::size_t idx : live) {
            e3d.push_back((paired.pairs[idx].tracker.p - paired.pairs[idx].truth.p).norm());
          }
          mask = stage == CleaningStage::kZScore ? zscore_filter(e3d, cfg.zscore_k)
                                                 : iqr_filter(e3d, cfg.iqr_k);
          ran = true;
        }
        break;
      }
      case CleaningStage::kKinematic: {
        if (live.size() >= 2) {
          std::vector<Eigen::Vector3d> pos;
          std::vector<Timestamp> times;
          pos.reserve(live.size());
          times.reserve(live.size());
          for (std::size_t idx : live) {
            pos.push_back(paired.pairs[idx].tracker.p);
            times.push_back(paired.pairs[idx].tracker.t);
          }
          mask = kinematic_filter(pos, times, vmax);
          ran = true;
        }
        break;
      }
    }

    if (!ran) {
      sr.skipped = true;
      out.report.stages.push_back(sr);
      continue;
    }

    std::vector<std::size_t> next;
    next.reserve(live.size() - mask.rejected);
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (mask.kept[i]) {
        next.push_back(live[i]);
      } else {
        out.report.rejected_indices.push_back(live[i]);
      }
    }
    sr.rejected = mask.rejected;
    out.report.stages.push_back(sr);
    live.swap(next);
  }

  out.report.kept = live.size();
  out.report.excess_rejection_warning = out.report.rejection_fraction() > 0.30;
  std::sort(out.report.rejected_indices.begin(), out.report.rejected_indices.end());

  out.cleaned = paired;
  out.cleaned.pairs.clear();
  out.cleaned.pairs.reserve(live.size());
  for (std::size_t idx : live) out.cleaned.pairs.push_back(paired.pairs[idx]);
  return out;
}

}  // namespace posebench
