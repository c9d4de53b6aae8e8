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

#include <cstddef>
#include <string>
#include <vector>

namespace posebench::kernels {

// Data-parallel inner loops behind the metric computations. Every kernel
// has a scalar reference implementation and an AVX2 variant selected at
// runtime; the two are equivalence-tested against each other.

enum class Backend { kAuto, kScalar, kAvx2 };

bool avx2_supported();

/// Backend actually used by the dispatched entry points.
Backend active_backend();
std::string backend_name(Backend b);

/// Force a backend (kAvx2 throws when the CPU or build lacks it).
/// kAuto re-enables detection, honoring the POSEBENCH_KERNELS env var
/// ("scalar" | "avx2" | "auto").
void set_backend(Backend b);

/// Per-sample signed axis errors and 3D magnitudes: e = a - b,
/// e3d = |e|. All arrays hold n elements.
void axis_errors(const double* ax, const double* ay, const double* az, const double* bx,
                 const double* by, const double* bz, double* ex, double* ey, double* ez,
                 double* e3d, std::size_t n);

struct Moments {
  double sum{0.0};
  double sum_sq{0.0};
  double max_abs{0.0};
};

Moments reduce_moments(const double* v, std::size_t n);

/// Polyline segments in SoA layout for nearest-distance queries.
/// inv_len_sq is 0 for degenerate segments, which then behave as points.
struct SegmentSoa {
  std::vector<double> ax, ay, az;
  std::vector<double> dx, dy, dz;
  std::vector<double> inv_len_sq;

  std::size_t size() const { return ax.size(); }
  void push(double sx, double sy, double sz, double ex, double ey, double ez);
};

/// Squared distance from point p to the nearest segment of the soup.
double min_dist_sq_to_segments(const SegmentSoa& segs, double px, double py, double pz);

namespace scalar {
void axis_errors(const double* ax, const double* ay, const double* az, const double* bx,
                 const double* by, const double* bz, double* ex, double* ey, double* ez,
                 double* e3d, std::size_t n);
Moments reduce_moments(const double* v, std::size_t n);
double min_dist_sq_to_segments(const SegmentSoa& segs, double px, double py, double pz);
}  // namespace scalar

#if defined(POSEBENCH_HAVE_AVX2)
namespace avx2 {
void axis_errors(const double* ax, const double* ay, const double* az, const double* bx,
                 const double* by, const double* bz, double* ex, double* ey, double* ez,
                 double* e3d, std::size_t n);
Moments reduce_moments(const double* v, std::size_t n);
double min_dist_sq_to_segments(const SegmentSoa& segs, double px, double py, double pz);
}  // namespace avx2
#endif

}  // namespace posebench::kernels
