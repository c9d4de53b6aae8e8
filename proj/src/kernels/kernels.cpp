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

#include "posebench/kernels/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace posebench::kernels {

void SegmentSoa::push(double sx, double sy, double sz, double ex, double ey, double ez) {
  const double ddx = ex - sx, ddy = ey - sy, ddz = ez - sz;
  const double len_sq = ddx * ddx + ddy * ddy + ddz * ddz;
  ax.push_back(sx);
  ay.push_back(sy);
  az.push_back(sz);
  dx.push_back(ddx);
  dy.push_back(ddy);
  dz.push_back(ddz);
  inv_len_sq.push_back(len_sq > 0.0 ? 1.0 / len_sq : 0.0);
}

namespace scalar {

void axis_errors(const double* ax, const double* ay, const double* az, const double* bx,
                 const double* by, const double* bz, double* ex, double* ey, double* ez,
                 double* e3d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = ax[i] - bx[i];
    const double y = ay[i] - by[i];
    const double z = az[i] - bz[i];
    ex[i] = x;
    ey[i] = y;
    ez[i] = z;
    e3d[i] = std::sqrt(x * x + y * y + z * z);
  }
}

Moments reduce_moments(const double* v, std::size_t n) {
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    m.sum += v[i];
    m.sum_sq += v[i] * v[i];
    m.max_abs = std::max(m.max_abs, std::abs(v[i]));
  }
  return m;
}

double min_dist_sq_to_segments(const SegmentSoa& segs, double px, double py, double pz) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = segs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double wx = px - segs.ax[i];
    const double wy = py - segs.ay[i];
    const double wz = pz - segs.az[i];
    const double t_raw = (wx * segs.dx[i] + wy * segs.dy[i] + wz * segs.dz[i]) * segs.inv_len_sq[i];
    const double t = std::clamp(t_raw, 0.0, 1.0);
    const double rx = wx - t * segs.dx[i];
    const double ry = wy - t * segs.dy[i];
    const double rz = wz - t * segs.dz[i];
    best = std::min(best, rx * rx + ry * ry + rz * rz);
  }
  return best;
}

}  // namespace scalar

namespace {

Backend requested_from_env() {
  const char* env = std::getenv("POSEBENCH_KERNELS");
  if (env == nullptr) return Backend::kAuto;
  const std::string s(env);
  if (s == "scalar") return Backend::kScalar;
  if (s == "avx2") return Backend::kAvx2;
  return Backend::kAuto;
}

Backend resolve(Backend requested) {
  if (requested == Backend::kAuto) {
    requested = requested_from_env();
  }
  if (requested == Backend::kAuto) {
    return avx2_supported() ? Backend::kAvx2 : Backend::kScalar;
  }
  if (requested == Backend::kAvx2 && !avx2_supported()) {
    throw std::runtime_error("AVX2 kernels requested but unavailable on this CPU/build");
  }
  return requested;
}

std::atomic<Backend> g_backend{resolve(Backend::kAuto)};

}  // namespace

bool avx2_supported() {
#if defined(POSEBENCH_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::kAuto:
      return "auto";
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

void set_backend(Backend b) { g_backend.store(resolve(b), std::memory_order_relaxed); }

void axis_errors(const double* ax, const double* ay, const double* az, const double* bx,
                 const double* by, const double* bz, double* ex, double* ey, double* ez,
                 double* e3d, std::size_t n) {
#if defined(POSEBENCH_HAVE_AVX2)
  if (active_backend() == Backend::kAvx2) {
    avx2::axis_errors(ax, ay, az, bx, by, bz, ex, ey, ez, e3d, n);
    return;
  }
#endif
  scalar::axis_errors(ax, ay, az, bx, by, bz, ex, ey, ez, e3d, n);
}

Moments reduce_moments(const double* v, std::size_t n) {
#if defined(POSEBENCH_HAVE_AVX2)
  if (active_backend() == Backend::kAvx2) return avx2::reduce_moments(v, n);
#endif
  return scalar::reduce_moments(v, n);
}

double min_dist_sq_to_segments(const SegmentSoa& segs, double px, double py, double pz) {
#if defined(POSEBENCH_HAVE_AVX2)
  if (active_backend() == Backend::kAvx2) return avx2::min_dist_sq_to_segments(segs, px, py, pz);
#endif
  return scalar::min_dist_sq_to_segments(segs, px, py, pz);
}

}  // namespace posebench::kernels
