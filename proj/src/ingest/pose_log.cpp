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

#include "posebench/ingest/pose_log.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace posebench {

namespace {

const std::array<const char*, 9> kColumns = {"t_ns", "x_mm", "y_mm", "z_mm", "qw",
                                             "qx",   "qy",   "qz",   "valid"};

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_int64(std::string_view s, std::int64_t& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

ParsedLog parse_pose_log(const std::string& path, FrameId frame) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pose log: cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("pose log: empty file " + path);
  strip_cr(line);

  const auto header = split_csv(line);
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i >= header.size() || header[i] != kColumns[i]) {
      throw std::runtime_error("pose log " + path + ": missing or misplaced column '" +
                               kColumns[i] + "'");
    }
  }
  if (header.size() != kColumns.size()) {
    throw std::runtime_error("pose log " + path + ": unexpected extra columns");
  }

  ParsedLog out;
  out.series.frame = frame;
  std::int64_t last_t = std::numeric_limits<std::int64_t>::min();

  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    ++out.total_rows;

    const auto fields = split_csv(line);
    bool ok = fields.size() == kColumns.size();

    std::int64_t t_ns = 0;
    std::array<double, 7> num{};
    std::int64_t valid_raw = 0;
    if (ok) ok = parse_int64(fields[0], t_ns);
    for (std::size_t i = 0; ok && i < 7; ++i) {
      ok = parse_double(fields[i + 1], num[i]) && std::isfinite(num[i]);
    }
    if (ok) ok = parse_int64(fields[8], valid_raw) && (valid_raw == 0 || valid_raw == 1);
    if (ok) ok = t_ns >= 0 && t_ns > last_t;

    Quaternion q{num[3], num[4], num[5], num[6]};
    if (ok) {
      const double qn = q.norm();
      if (std::abs(qn - 1.0) <= 1e-3) {
        q = q.normalized().canonicalized();
      } else if (valid_raw == 0) {
        // Invalid samples may carry a garbage orientation; substitute
        // identity so the row still documents the tracking loss.
        q = Quaternion::identity();
      } else {
        ok = false;
      }
    }

    if (!ok) {
      ++out.dropped;
      continue;
    }

    Pose pose;
    pose.t = Timestamp{t_ns};
    pose.p = {num[0], num[1], num[2]};
    pose.q = q;
    pose.frame = frame;
    pose.valid = valid_raw == 1;
    out.series.samples.push_back(pose);
    last_t = t_ns;
  }

  if (out.total_rows == 0) throw std::runtime_error("pose log: no data rows in " + path);
  if (out.series.samples.empty() ||
      2 * out.dropped > out.total_rows) {
    throw std::runtime_error("pose log " + path + ": " + std::to_string(out.dropped) + " of " +
                             std::to_string(out.total_rows) +
                             " rows dropped; log presumed corrupt");
  }
  out.series.nominal_rate_hz = PoseSeries::estimate_rate_hz(out.series.samples);
  return out;
}

void write_pose_log(const std::string& path, const PoseSeries& series) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw std::runtime_error("pose log: cannot write " + path);
  std::fputs("t_ns,x_mm,y_mm,z_mm,qw,qx,qy,qz,valid\n", f);
  for (const Pose& s : series.samples) {
    std::fprintf(f, "%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n",
                 static_cast<long long>(s.t.ns), s.p.x(), s.p.y(), s.p.z(), s.q.w, s.q.x, s.q.y,
                 s.q.z, s.valid ? 1 : 0);
  }
  if (std::fclose(f) != 0) throw std::runtime_error("pose log: close failed for " + path);
}

}  // namespace posebench
