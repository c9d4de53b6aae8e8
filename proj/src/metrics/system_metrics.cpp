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

#include "posebench/metrics/system_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace posebench {

std::vector<TrackingGap> detect_gaps(const PoseSeries& series, double gap_factor) {
  if (series.size() < 2) return {};
  double rate = series.nominal_rate_hz;
  if (!(rate > 0.0)) rate = PoseSeries::estimate_rate_hz(series.samples);
  if (!(rate > 0.0)) throw std::invalid_argument("detect_gaps: nominal rate unknown");
  const auto max_interval_ns =
      static_cast<std::int64_t>(std::llround(gap_factor * 1e9 / rate));

  std::vector<TrackingGap> gaps;
  // Timestamp holes.
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series.samples[i].t - series.samples[i - 1].t > max_interval_ns) {
      gaps.push_back({series.samples[i - 1].t, series.samples[i].t});
    }
  }
  // Runs of invalid samples.
  std::size_t i = 0;
  while (i < series.size()) {
    if (!series.samples[i].valid) {
      const Timestamp start = series.samples[i].t;
      std::size_t j = i;
      while (j < series.size() && !series.samples[j].valid) ++j;
      const Timestamp end = j < series.size() ? series.samples[j].t : series.back().t;
      gaps.push_back({start, end});
      i = j;
    } else {
      ++i;
    }
  }

  std::sort(gaps.begin(), gaps.end(),
            [](const TrackingGap& a, const TrackingGap& b) { return a.t_start < b.t_start; });
  std::vector<TrackingGap> merged;
  for (const TrackingGap& g : gaps) {
    if (!merged.empty() && g.t_start <= merged.back().t_end) {
      merged.back().t_end = std::max(merged.back().t_end, g.t_end);
    } else {
      merged.push_back(g);
    }
  }
  return merged;
}

namespace {

/// First sample index at/after `from` that starts a run of rule.k_samples
/// consecutive valid samples whose implied speeds stay below v_stable.
std::optional<std::size_t> find_stable_run(const PoseSeries& series, Timestamp from,
                                           const StabilityRule& rule, double v_stable) {
  const auto& s = series.samples;
  if (rule.k_samples < 2) throw std::invalid_argument("stability rule: k_samples must be >= 2");
  auto begin = std::lower_bound(
      s.begin(), s.end(), from, [](const Pose& p, Timestamp t) { return p.t < t; });
  for (auto it = begin; it != s.end(); ++it) {
    const std::size_t start = static_cast<std::size_t>(it - s.begin());
    if (start + rule.k_samples > s.size()) break;
    bool ok = s[start].valid;
    for (std::size_t k = start + 1; ok && k < start + rule.k_samples; ++k) {
      if (!s[k].valid) {
        ok = false;
        break;
      }
      const double dt_s = (s[k].t - s[k - 1].t) * 1e-9;
      if (dt_s <= 0.0 || (s[k].p - s[k - 1].p).norm() / dt_s >= v_stable) ok = false;
    }
    if (ok) return start;
  }
  return std::nullopt;
}

OcclusionEventResult score_event(const PoseSeries& series, const TrialEvent& event,
                                 Timestamp reference, const StabilityRule& rule,
                                 double v_stable) {
  OcclusionEventResult res;
  res.event = event;
  if (series.empty() || event.t_start > series.back().t || event.t_end < series.front().t) {
    res.skipped = true;
    return res;
  }
  const auto idx = find_stable_run(series, reference, rule, v_stable);
  if (idx) {
    const double dt_s = (series.samples[*idx].t - reference) * 1e-9;
    if (dt_s <= rule.timeout_s) {
      res.success = true;
      res.reacquisition_s = dt_s;
    }
  }
  return res;
}

}  // namespace

OcclusionMetrics occlusion_metrics(const PoseSeries& series,
                                   const std::vector<TrialEvent>& occlusion_windows,
                                   const StabilityRule& rule, double trial_speed_mm_s) {
  if (occlusion_windows.empty()) {
    throw std::invalid_argument("occlusion_metrics: need >= 1 occlusion event");
  }
  const double v_stable = rule.v_stable(trial_speed_mm_s);
  OcclusionMetrics out;
  std::size_t successes = 0;
  for (const TrialEvent& ev : occlusion_windows) {
    OcclusionEventResult res = score_event(series, ev, ev.t_end, rule, v_stable);
    if (!res.skipped) {
      ++out.evaluated;
      if (res.success) ++successes;
    }
    out.events.push_back(std::move(res));
  }
  out.osr_pct = out.evaluated == 0
                    ? 0.0
                    : 100.0 * static_cast<double>(successes) / static_cast<double>(out.evaluated);
  return out;
}

std::optional<double> initialization_time_s(const PoseSeries& series, Timestamp system_start,
                                            const StabilityRule& rule, double trial_speed_mm_s) {
  if (series.empty()) return std::nullopt;
  if (system_start > series.front().t) {
    throw std::invalid_argument("initialization_time: system start after first sample");
  }
  const auto idx = find_stable_run(series, system_start, rule, rule.v_stable(trial_speed_mm_s));
  if (!idx) return std::nullopt;
  return (series.samples[*idx].t - system_start) * 1e-9;
}

std::vector<OcclusionEventResult> reacquisition_times(const PoseSeries& series,
                                                      const std::vector<TrialEvent>& enter_events,
                                                      const StabilityRule& rule,
                                                      double trial_speed_mm_s) {
  const double v_stable = rule.v_stable(trial_speed_mm_s);
  std::vector<OcclusionEventResult> out;
  out.reserve(enter_events.size());
  for (const TrialEvent& ev : enter_events) {
    out.push_back(score_event(series, ev, ev.t_start, rule, v_stable));
  }
  return out;
}

LongTermDrift long_term_drift(const PairedSeries& paired, double min_span_s) {
  if (paired.size() < 2) throw std::invalid_argument("long_term_drift: need >= 2 pairs");
  const double span_s = (paired.pairs.back().tracker.t - paired.pairs.front().tracker.t) * 1e-9;
  if (span_s < min_span_s) {
    throw std::invalid_argument("long_term_drift: span " + std::to_string(span_s) +
                                " s below required " + std::to_string(min_span_s) + " s");
  }
  const std::int64_t t0 = paired.pairs.front().tracker.t.ns;
  const double n = static_cast<double>(paired.size());
  double mean_t = 0.0, mean_p = 0.0, mean_r = 0.0;
  std::vector<double> ts(paired.size()), ps(paired.size()), rs(paired.size());
  for (std::size_t i = 0; i < paired.size(); ++i) {
    const PosePair& pp = paired.pairs[i];
    ts[i] = (pp.tracker.t.ns - t0) * 1e-9;
    ps[i] = (pp.tracker.p - pp.truth.p).norm();
    rs[i] = rotation_angle_deg(pp.tracker.q, pp.truth.q);
    mean_t += ts[i];
    mean_p += ps[i];
    mean_r += rs[i];
  }
  mean_t /= n;
  mean_p /= n;
  mean_r /= n;
  double den = 0.0, num_p = 0.0, num_r = 0.0;
  for (std::size_t i = 0; i < paired.size(); ++i) {
    const double dt = ts[i] - mean_t;
    den += dt * dt;
    num_p += dt * (ps[i] - mean_p);
    num_r += dt * (rs[i] - mean_r);
  }
  if (den == 0.0) throw std::invalid_argument("long_term_drift: zero time variance");
  return {num_p / den * 60.0, num_r / den * 60.0};
}

}  // namespace posebench
