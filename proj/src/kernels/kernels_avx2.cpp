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

// 4-wide double kernels. This TU is the only one compiled with -mavx2.

#if defined(POSEBENCH_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "posebench/kernels/kernels.hpp"

namespace posebench::kernels::avx2 {

namespace {

inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return std::min(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

void axis_errors(const double* ax, const double* ay, const double* az, const double* bx,
                 const double* by, const double* bz, double* ex, double* ey, double* ez,
                 double* e3d, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(ax + i), _mm256_loadu_pd(bx + i));
    const __m256d y = _mm256_sub_pd(_mm256_loadu_pd(ay + i), _mm256_loadu_pd(by + i));
    const __m256d z = _mm256_sub_pd(_mm256_loadu_pd(az + i), _mm256_loadu_pd(bz + i));
    const __m256d sq = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)), _mm256_mul_pd(z, z));
    _mm256_storeu_pd(ex + i, x);
    _mm256_storeu_pd(ey + i, y);
    _mm256_storeu_pd(ez + i, z);
    _mm256_storeu_pd(e3d + i, _mm256_sqrt_pd(sq));
  }
  if (i < n) {
    scalar::axis_errors(ax + i, ay + i, az + i, bx + i, by + i, bz + i, ex + i, ey + i, ez + i,
                        e3d + i, n - i);
  }
}

Moments reduce_moments(const double* v, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d sum = _mm256_setzero_pd();
  __m256d sum_sq = _mm256_setzero_pd();
  __m256d max_abs = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    sum = _mm256_add_pd(sum, x);
    sum_sq = _mm256_add_pd(sum_sq, _mm256_mul_pd(x, x));
    max_abs = _mm256_max_pd(max_abs, _mm256_andnot_pd(sign_mask, x));
  }
  Moments m;
  m.sum = hsum(sum);
  m.sum_sq = hsum(sum_sq);
  m.max_abs = hmax(max_abs);
  for (; i < n; ++i) {
    m.sum += v[i];
    m.sum_sq += v[i] * v[i];
    m.max_abs = std::max(m.max_abs, std::abs(v[i]));
  }
  return m;
}

double min_dist_sq_to_segments(const SegmentSoa& segs, double px, double py, double pz) {
  const std::size_t n = segs.size();
  const __m256d qx = _mm256_set1_pd(px);
  const __m256d qy = _mm256_set1_pd(py);
  const __m256d qz = _mm256_set1_pd(pz);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wx = _mm256_sub_pd(qx, _mm256_loadu_pd(segs.ax.data() + i));
    const __m256d wy = _mm256_sub_pd(qy, _mm256_loadu_pd(segs.ay.data() + i));
    const __m256d wz = _mm256_sub_pd(qz, _mm256_loadu_pd(segs.az.data() + i));
    const __m256d dx = _mm256_loadu_pd(segs.dx.data() + i);
    const __m256d dy = _mm256_loadu_pd(segs.dy.data() + i);
    const __m256d dz = _mm256_loadu_pd(segs.dz.data() + i);
    const __m256d dot = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(wx, dx), _mm256_mul_pd(wy, dy)), _mm256_mul_pd(wz, dz));
    const __m256d t_raw = _mm256_mul_pd(dot, _mm256_loadu_pd(segs.inv_len_sq.data() + i));
    const __m256d t = _mm256_max_pd(zero, _mm256_min_pd(one, t_raw));
    const __m256d rx = _mm256_sub_pd(wx, _mm256_mul_pd(t, dx));
    const __m256d ry = _mm256_sub_pd(wy, _mm256_mul_pd(t, dy));
    const __m256d rz = _mm256_sub_pd(wz, _mm256_mul_pd(t, dz));
    const __m256d d2 = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(rx, rx), _mm256_mul_pd(ry, ry)), _mm256_mul_pd(rz, rz));
    best = _mm256_min_pd(best, d2);
  }
  double out = hmin(best);
  for (; i < n; ++i) {
    const double wx = px - segs.ax[i];
    const double wy = py - segs.ay[i];
    const double wz = pz - segs.az[i];
    const double t_raw = (wx * segs.dx[i] + wy * segs.dy[i] + wz * segs.dz[i]) * segs.inv_len_sq[i];
    const double t = std::clamp(t_raw, 0.0, 1.0);
    const double rx = wx - t * segs.dx[i];
    const double ry = wy - t * segs.dy[i];
    const double rz = wz - t * segs.dz[i];
    out = std::min(out, rx * rx + ry * ry + rz * rz);
  }
  return out;
}

}  // namespace posebench::kernels::avx2

#endif  // POSEBENCH_HAVE_AVX2
