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

#include "posebench/refgen/paths.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace posebench {

namespace {

constexpr double kMaxChordMm = 1.0;

double polyline_length(const std::vector<Eigen::Vector3d>& pts, bool closed) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) len += (pts[i] - pts[i - 1]).norm();
  if (closed && pts.size() > 1) len += (pts.front() - pts.back()).norm();
  return len;
}

void finalize(ReferencePath& path) {
  if (path.points.size() < 2) throw std::logic_error("reference path needs >= 2 points");
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    if ((path.points[i] - path.points[i - 1]).norm() == 0.0) {
      throw std::logic_error("reference path has duplicate consecutive points");
    }
  }
  path.arc_length_mm = polyline_length(path.points, path.closed);
}

/// Appends the open segment (from, to] subdivided at <= 1 mm chords.
void append_segment(std::vector<Eigen::Vector3d>& pts, const Eigen::Vector3d& from,
                    const Eigen::Vector3d& to) {
  const double len = (to - from).norm();
  const int steps = std::max(1, static_cast<int>(std::ceil(len / kMaxChordMm)));
  for (int i = 1; i <= steps; ++i) {
    pts.push_back(from + (to - from) * (static_cast<double>(i) / steps));
  }
}

}  // namespace

ReferencePoseSet gen_iso_cube_poses(double edge_mm, double incline_deg) {
  if (!(edge_mm > 0.0)) throw std::invalid_argument("gen_iso_cube_poses: edge must be > 0");
  if (incline_deg < 0.0 || incline_deg > 90.0) {
    throw std::invalid_argument("gen_iso_cube_poses: incline must be in [0, 90] deg");
  }
  const double theta = deg_to_rad(incline_deg);

  // Measurement plane through the cube center, tilted about x. The plane
  // rectangle is clipped by the cube: width = edge along x, height =
  // edge / max(cos, sin) across the tilt.
  const double half_w = 0.5 * edge_mm;
  const double half_h = 0.5 * edge_mm / std::max(std::cos(theta), std::sin(theta));
  const Eigen::Vector3d u(1.0, 0.0, 0.0);
  const Eigen::Vector3d v(0.0, std::cos(theta), std::sin(theta));
  // Rotating +z about x by theta yields the plane normal (0, -sin, cos).
  const Quaternion orient = incline_deg == 0.0
                                ? Quaternion::identity()
                                : Quaternion::from_axis_angle(Eigen::Vector3d::UnitX(), theta);

  ReferencePoseSet set;
  set.protocol_id = "ISO-CUBE";
  set.poses.push_back({"SP01", Eigen::Vector3d::Zero(), orient});
  // Diagonal points sit 10% of the plane diagonal in from each corner,
  // i.e. at 0.8 of the half-diagonal from the center.
  const std::array<std::pair<double, double>, 4> corners = {
      {{+1.0, +1.0}, {-1.0, +1.0}, {-1.0, -1.0}, {+1.0, -1.0}}};
  int idx = 2;
  for (const auto& [cu, cv] : corners) {
    const Eigen::Vector3d corner = cu * half_w * u + cv * half_h * v;
    set.poses.push_back({"SP0" + std::to_string(idx++), 0.8 * corner, orient});
  }
  return set;
}

ReferencePath gen_line(double length_mm) {
  if (!(length_mm > 0.0)) throw std::invalid_argument("gen_line: length must be > 0");
  ReferencePath path;
  path.protocol_id = "DT01";
  path.points.push_back(Eigen::Vector3d::Zero());
  append_segment(path.points, Eigen::Vector3d::Zero(), {length_mm, 0.0, 0.0});
  finalize(path);
  return path;
}

ReferencePath gen_circle(double radius_mm) {
  if (!(radius_mm > 0.0)) throw std::invalid_argument("gen_circle: radius must be > 0");
  ReferencePath path;
  path.protocol_id = "DT02";
  path.closed = true;
  const int n = std::max(8, static_cast<int>(std::ceil(2.0 * kPi * radius_mm / kMaxChordMm)));
  path.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * kPi * i / n;  // counter-clockwise
    path.points.emplace_back(radius_mm * std::cos(a), radius_mm * std::sin(a), 0.0);
  }
  finalize(path);
  return path;
}

ReferencePath gen_square(double side_mm) {
  if (!(side_mm > 0.0)) throw std::invalid_argument("gen_square: side must be > 0");
  const double h = 0.5 * side_mm;
  const std::array<Eigen::Vector3d, 4> corners = {
      Eigen::Vector3d{-h, -h, 0.0},
      Eigen::Vector3d{+h, -h, 0.0},
      Eigen::Vector3d{+h, +h, 0.0},
      Eigen::Vector3d{-h, +h, 0.0},
  };
  ReferencePath path;
  path.protocol_id = "DT03";
  path.closed = true;
  path.points.push_back(corners[0]);
  append_segment(path.points, corners[0], corners[1]);
  append_segment(path.points, corners[1], corners[2]);
  append_segment(path.points, corners[2], corners[3]);
  append_segment(path.points, corners[3], corners[0]);
  path.points.pop_back();  // closing edge is implicit
  finalize(path);
  return path;
}

ReferencePath gen_torus(double major_mm, double minor_mm, int turns) {
  if (!(major_mm > minor_mm) || !(minor_mm > 0.0)) {
    throw std::invalid_argument("gen_torus: require major > minor > 0");
  }
  if (turns < 1) throw std::invalid_argument("gen_torus: turns must be >= 1");
  ReferencePath path;
  path.protocol_id = "DT04-1";
  path.closed = true;
  // Parametric speed bound; the u-circle and tube velocities are
  // orthogonal, so |dp/du| <= sqrt((R+r)^2 + (r*turns)^2).
  const double vmax = std::hypot(major_mm + minor_mm, minor_mm * turns);
  const int n = std::max(16, static_cast<int>(std::ceil(2.0 * kPi * vmax / kMaxChordMm)));
  path.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double u = 2.0 * kPi * i / n;
    const double v = turns * u;
    const double ring = major_mm + minor_mm * std::cos(v);
    path.points.emplace_back(ring * std::cos(u), ring * std::sin(u), minor_mm * std::sin(v));
  }
  finalize(path);
  return path;
}

ReferencePath gen_raster(double width_mm, double height_mm, int lines) {
  if (!(width_mm > 0.0) || !(height_mm > 0.0)) {
    throw std::invalid_argument("gen_raster: dimensions must be > 0");
  }
  if (lines < 2) throw std::invalid_argument("gen_raster: need >= 2 lines");
  const double spacing = height_mm / (lines - 1);
  ReferencePath path;
  path.protocol_id = "DT04-2";
  Eigen::Vector3d cursor(0.0, 0.0, 0.0);
  path.points.push_back(cursor);
  for (int j = 0; j < lines; ++j) {
    const double x_target = (j % 2 == 0) ? width_mm : 0.0;
    Eigen::Vector3d next(x_target, j * spacing, 0.0);
    append_segment(path.points, cursor, next);
    cursor = next;
    if (j + 1 < lines) {
      Eigen::Vector3d link(x_target, (j + 1) * spacing, 0.0);
      append_segment(path.points, cursor, link);
      cursor = link;
    }
  }
  finalize(path);
  return path;
}

PoseSeries schedule(const ReferencePath& path, double speed_mm_s, double rate_hz, Timestamp t0,
                    const Quaternion& orientation) {
  if (!(speed_mm_s > 0.0)) throw std::invalid_argument("schedule: speed must be > 0");
  if (!(rate_hz > 0.0)) throw std::invalid_argument("schedule: rate must be > 0");
  const double duration_s = path.arc_length_mm / speed_mm_s;
  const auto count = static_cast<std::size_t>(std::floor(duration_s * rate_hz + 1e-9)) + 1;

  PoseSeries series;
  series.frame = FrameId::kReference;
  series.nominal_rate_hz = rate_hz;
  series.samples.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t_s = static_cast<double>(k) / rate_hz;
    Pose pose;
    pose.t = t0 + static_cast<std::int64_t>(std::llround(t_s * 1e9));
    pose.p = point_at_arc_length(path, speed_mm_s * t_s);
    pose.q = orientation;
    pose.frame = FrameId::kReference;
    series.samples.push_back(pose);
  }
  return series;
}

kernels::SegmentSoa path_segments(const ReferencePath& path) {
  kernels::SegmentSoa soa;
  const auto& p = path.points;
  for (std::size_t i = 1; i < p.size(); ++i) {
    soa.push(p[i - 1].x(), p[i - 1].y(), p[i - 1].z(), p[i].x(), p[i].y(), p[i].z());
  }
  if (path.closed && p.size() > 1) {
    soa.push(p.back().x(), p.back().y(), p.back().z(), p.front().x(), p.front().y(),
             p.front().z());
  }
  return soa;
}

Eigen::Vector3d point_at_arc_length(const ReferencePath& path, double s_mm) {
  const auto& pts = path.points;
  double s = std::clamp(s_mm, 0.0, path.arc_length_mm);
  const std::size_t n_edges = pts.size() - 1 + (path.closed ? 1 : 0);
  for (std::size_t e = 0; e < n_edges; ++e) {
    const Eigen::Vector3d& a = pts[e];
    const Eigen::Vector3d& b = pts[(e + 1) % pts.size()];
    const double len = (b - a).norm();
    if (s <= len || e + 1 == n_edges) {
      const double t = len > 0.0 ? std::min(1.0, s / len) : 0.0;
      return a + t * (b - a);
    }
    s -= len;
  }
  return pts.back();
}

ReferencePath path_from_spec(const ReferenceSpec& spec) {
  if (spec.protocol_id == "DT01") return gen_line(spec.length_mm);
  if (spec.protocol_id == "DT02") return gen_circle(spec.radius_mm);
  if (spec.protocol_id == "DT03") return gen_square(spec.side_mm);
  if (spec.protocol_id == "DT04-1") {
    return gen_torus(spec.torus_major_mm, spec.torus_minor_mm, spec.torus_turns);
  }
  if (spec.protocol_id == "DT04-2") {
    return gen_raster(spec.raster_width_mm, spec.raster_height_mm, spec.raster_lines);
  }
  throw std::invalid_argument("path_from_spec: no generator for protocol '" + spec.protocol_id +
                              "'");
}

}  // namespace posebench
