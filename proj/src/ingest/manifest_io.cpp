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

#include "posebench/ingest/manifest_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace posebench {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

Eigen::Vector3d vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::runtime_error("manifest: expected 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec3_to_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

RigidTransform transform_from_json(const json& j) {
  RigidTransform t = RigidTransform::identity(FrameId::kReference, FrameId::kGroundtruthWorld);
  if (j.contains("rot")) {
    const auto& r = j.at("rot");
    if (!r.is_array() || r.size() != 9) throw std::runtime_error("manifest: rot needs 9 entries");
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) t.rot(i, k) = r[static_cast<std::size_t>(3 * i + k)];
    }
  }
  if (j.contains("tvec")) t.tvec = vec3_from_json(j.at("tvec"));
  if (j.contains("scale")) t.scale = j.at("scale").get<double>();
  if (j.contains("src_frame")) t.src_frame = frame_from_string(j.at("src_frame"));
  if (j.contains("dst_frame")) t.dst_frame = frame_from_string(j.at("dst_frame"));
  t.validate(1e-6);
  return t;
}

json transform_to_json(const RigidTransform& t) {
  json r = json::array();
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) r.push_back(t.rot(i, k));
  }
  return {{"rot", r},
          {"tvec", vec3_to_json(t.tvec)},
          {"scale", t.scale},
          {"src_frame", to_string(t.src_frame)},
          {"dst_frame", to_string(t.dst_frame)}};
}

RegistrationSpec registration_from_json(const json& j) {
  RegistrationSpec spec;
  spec.with_scale = j.value("with_scale", false);
  spec.rms_warn_mm = j.value("rms_warn_mm", 1.0);
  for (const json& p : j.at("points")) {
    RegistrationPoint pt;
    pt.id = p.value("id", "");
    pt.tracker = vec3_from_json(p.at("tracker"));
    pt.truth = vec3_from_json(p.at("truth"));
    pt.holdout = p.value("holdout", false);
    spec.points.push_back(pt);
  }
  return spec;
}

json registration_to_json(const RegistrationSpec& spec) {
  json points = json::array();
  for (const RegistrationPoint& p : spec.points) {
    points.push_back({{"id", p.id},
                      {"tracker", vec3_to_json(p.tracker)},
                      {"truth", vec3_to_json(p.truth)},
                      {"holdout", p.holdout}});
  }
  return {{"with_scale", spec.with_scale}, {"rms_warn_mm", spec.rms_warn_mm}, {"points", points}};
}

ReferenceSpec reference_from_json(const json& j) {
  ReferenceSpec spec;
  spec.protocol_id = j.at("protocol_id").get<std::string>();
  spec.length_mm = j.value("length_mm", 0.0);
  spec.radius_mm = j.value("radius_mm", 0.0);
  spec.side_mm = j.value("side_mm", 0.0);
  spec.torus_major_mm = j.value("torus_major_mm", 0.0);
  spec.torus_minor_mm = j.value("torus_minor_mm", 0.0);
  spec.torus_turns = j.value("torus_turns", 0);
  spec.raster_width_mm = j.value("raster_width_mm", 0.0);
  spec.raster_height_mm = j.value("raster_height_mm", 0.0);
  spec.raster_lines = j.value("raster_lines", 0);
  if (j.contains("placement")) spec.placement = transform_from_json(j.at("placement"));
  return spec;
}

json reference_to_json(const ReferenceSpec& spec) {
  json j = {{"protocol_id", spec.protocol_id}, {"placement", transform_to_json(spec.placement)}};
  if (spec.length_mm > 0) j["length_mm"] = spec.length_mm;
  if (spec.radius_mm > 0) j["radius_mm"] = spec.radius_mm;
  if (spec.side_mm > 0) j["side_mm"] = spec.side_mm;
  if (spec.torus_major_mm > 0) j["torus_major_mm"] = spec.torus_major_mm;
  if (spec.torus_minor_mm > 0) j["torus_minor_mm"] = spec.torus_minor_mm;
  if (spec.torus_turns > 0) j["torus_turns"] = spec.torus_turns;
  if (spec.raster_width_mm > 0) j["raster_width_mm"] = spec.raster_width_mm;
  if (spec.raster_height_mm > 0) j["raster_height_mm"] = spec.raster_height_mm;
  if (spec.raster_lines > 0) j["raster_lines"] = spec.raster_lines;
  return j;
}

FaultLabels labels_from_json(const json& j) {
  FaultLabels labels;
  for (const json& t : j.value("spike_t_ns", json::array())) {
    labels.spike_timestamps.push_back(Timestamp{t.get<std::int64_t>()});
  }
  for (const json& w : j.value("dropouts_ns", json::array())) {
    labels.dropout_windows.emplace_back(Timestamp{w.at(0).get<std::int64_t>()},
                                        Timestamp{w.at(1).get<std::int64_t>()});
  }
  labels.confident_wrong = j.value("confident_wrong", false);
  labels.injected_drift_mm_s = j.value("injected_drift_mm_s", 0.0);
  return labels;
}

json labels_to_json(const FaultLabels& labels) {
  json spikes = json::array();
  for (const Timestamp& t : labels.spike_timestamps) spikes.push_back(t.ns);
  json dropouts = json::array();
  for (const auto& [a, b] : labels.dropout_windows) dropouts.push_back(json::array({a.ns, b.ns}));
  return {{"spike_t_ns", spikes},
          {"dropouts_ns", dropouts},
          {"confident_wrong", labels.confident_wrong},
          {"injected_drift_mm_s", labels.injected_drift_mm_s}};
}

TrialManifest trial_from_json(const json& j) {
  TrialManifest t;
  t.trial_id = j.at("trial_id").get<std::string>();
  t.category = category_from_string(j.at("category").get<std::string>());
  t.protocol_id = j.value("protocol_id", "");
  t.custom_protocol = !is_known_protocol(t.protocol_id);
  t.hmd_position = j.value("hmd_position", "F1");
  t.speed_mm_s = j.value("speed_mm_s", 0.0);
  t.repetitions = j.value("repetitions", 1);
  t.tracker_log = j.at("tracker_log").get<std::string>();
  t.truth_log = j.at("truth_log").get<std::string>();
  t.pose_id = j.value("pose_id", "");
  for (const json& e : j.value("events", json::array())) {
    TrialEvent ev;
    ev.kind = event_kind_from_string(e.at("kind").get<std::string>());
    ev.t_start = Timestamp{e.at("t_start_ns").get<std::int64_t>()};
    ev.t_end = Timestamp{e.at("t_end_ns").get<std::int64_t>()};
    t.events.push_back(ev);
  }
  if (j.contains("reference")) t.reference = reference_from_json(j.at("reference"));
  if (j.contains("registration")) t.registration = registration_from_json(j.at("registration"));
  if (j.contains("labels")) t.labels = labels_from_json(j.at("labels"));
  return t;
}

json trial_to_json(const TrialManifest& t) {
  json events = json::array();
  for (const TrialEvent& e : t.events) {
    events.push_back(
        {{"kind", to_string(e.kind)}, {"t_start_ns", e.t_start.ns}, {"t_end_ns", e.t_end.ns}});
  }
  json j = {{"trial_id", t.trial_id},
            {"category", to_string(t.category)},
            {"protocol_id", t.protocol_id},
            {"hmd_position", t.hmd_position},
            {"speed_mm_s", t.speed_mm_s},
            {"repetitions", t.repetitions},
            {"tracker_log", t.tracker_log},
            {"truth_log", t.truth_log},
            {"events", events}};
  if (!t.pose_id.empty()) j["pose_id"] = t.pose_id;
  if (t.reference) j["reference"] = reference_to_json(*t.reference);
  if (t.registration) j["registration"] = registration_to_json(*t.registration);
  if (t.labels) j["labels"] = labels_to_json(*t.labels);
  return j;
}

}  // namespace

Session parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("manifest: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("manifest " + path + ": " + e.what());
  }

  const std::string schema = j.value("schema", "");
  if (schema != kSessionSchema) {
    throw std::runtime_error("manifest " + path + ": unsupported schema '" + schema + "'");
  }

  Session s;
  s.session_id = j.value("session_id", "unnamed");
  s.base_dir = fs::path(path).parent_path().string();
  if (j.contains("registration")) s.registration = registration_from_json(j.at("registration"));
  if (j.contains("cleaning")) {
    const json& c = j.at("cleaning");
    s.cleaning.zscore_k = c.value("zscore_k", 3.0);
    s.cleaning.iqr_k = c.value("iqr_k", 1.5);
    if (c.contains("vmax_mm_s") && !c.at("vmax_mm_s").is_null()) {
      s.cleaning.vmax_mm_s = c.at("vmax_mm_s").get<double>();
    }
    if (c.contains("stages")) {
      s.cleaning.enabled_stages.clear();
      for (const json& st : c.at("stages")) {
        s.cleaning.enabled_stages.push_back(cleaning_stage_from_string(st.get<std::string>()));
      }
    }
  }
  if (j.contains("alignment")) {
    const json& a = j.at("alignment");
    s.alignment.max_gap_factor = a.value("max_gap_factor", 1.5);
    s.alignment.max_truth_reuse = a.value("max_truth_reuse", std::size_t{0});
  }
  if (j.contains("stability")) {
    const json& st = j.at("stability");
    s.stability.k_samples = st.value("k_samples", std::size_t{10});
    s.stability.v_margin_mm_s = st.value("v_margin_mm_s", 5.0);
    s.stability.timeout_s = st.value("timeout_s", 10.0);
  }
  for (const json& t : j.value("trials", json::array())) {
    s.trials.push_back(trial_from_json(t));
  }

  s.validate();
  for (const TrialManifest& t : s.trials) {
    for (const std::string& log : {t.tracker_log, t.truth_log}) {
      if (!fs::exists(resolve_path(s, log))) {
        throw std::runtime_error("manifest " + path + ": trial " + t.trial_id +
                                 " references missing log " + log);
      }
    }
  }
  return s;
}

void write_manifest(const std::string& path, const Session& session) {
  json trials = json::array();
  for (const TrialManifest& t : session.trials) trials.push_back(trial_to_json(t));
  json stages = json::array();
  for (CleaningStage st : session.cleaning.enabled_stages) stages.push_back(to_string(st));
  json j = {
      {"schema", kSessionSchema},
      {"session_id", session.session_id},
      {"cleaning",
       {{"zscore_k", session.cleaning.zscore_k},
        {"iqr_k", session.cleaning.iqr_k},
        {"vmax_mm_s",
         session.cleaning.vmax_mm_s ? json(*session.cleaning.vmax_mm_s) : json(nullptr)},
        {"stages", stages}}},
      {"alignment",
       {{"max_gap_factor", session.alignment.max_gap_factor},
        {"max_truth_reuse", session.alignment.max_truth_reuse}}},
      {"stability",
       {{"k_samples", session.stability.k_samples},
        {"v_margin_mm_s", session.stability.v_margin_mm_s},
        {"timeout_s", session.stability.timeout_s}}},
      {"trials", trials},
  };
  if (session.registration) j["registration"] = registration_to_json(*session.registration);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("manifest: cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string resolve_path(const Session& session, const std::string& relative) {
  const fs::path p(relative);
  if (p.is_absolute() || session.base_dir.empty()) return relative;
  return (fs::path(session.base_dir) / p).string();
}

}  // namespace posebench
