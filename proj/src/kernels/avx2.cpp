// Compiled with -mavx2 only when the toolchain targets x86-64; never called
// unless the CPU reports AVX2 at runtime.

#include <immintrin.h>

#include <array>
#include <cmath>
#include <limits>

#include "qstar/kernels.hpp"

namespace qstar::kernels {

namespace {

struct Broadcast {
  __m256d c0r, c0i, c1r, c1i, c2r, c2i, w, one;

  explicit Broadcast(const QuadraticForm& f)
      : c0r(_mm256_set1_pd(f.c0_re)),
        c0i(_mm256_set1_pd(f.c0_im)),
        c1r(_mm256_set1_pd(f.c1_re)),
        c1i(_mm256_set1_pd(f.c1_im)),
        c2r(_mm256_set1_pd(f.c2_re)),
        c2i(_mm256_set1_pd(f.c2_im)),
        w(_mm256_set1_pd(f.disk_weight)),
        one(_mm256_set1_pd(1.0)) {}

  __m256d value(__m256d zr, __m256d zi) const {
    const __m256d tr = _mm256_add_pd(c1r, _mm256_sub_pd(_mm256_mul_pd(zr, c2r), _mm256_mul_pd(zi, c2i)));
    const __m256d ti = _mm256_add_pd(c1i, _mm256_add_pd(_mm256_mul_pd(zr, c2i), _mm256_mul_pd(zi, c2r)));
    const __m256d vr = _mm256_add_pd(c0r, _mm256_sub_pd(_mm256_mul_pd(zr, tr), _mm256_mul_pd(zi, ti)));
    const __m256d vi = _mm256_add_pd(c0i, _mm256_add_pd(_mm256_mul_pd(zr, ti), _mm256_mul_pd(zi, tr)));
    const __m256d modulus =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(vr, vr), _mm256_mul_pd(vi, vi)));
    const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(zr, zr), _mm256_mul_pd(zi, zi));
    return _mm256_add_pd(modulus, _mm256_mul_pd(w, _mm256_sub_pd(one, r2)));
  }
};

}  // namespace

void evaluate_avx2(const QuadraticForm& form, std::span<const double> re,
                   std::span<const double> im, std::span<double> out) {
  const Broadcast b(form);
  const std::size_t n = re.size();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    _mm256_storeu_pd(out.data() + j, b.value(_mm256_loadu_pd(re.data() + j), _mm256_loadu_pd(im.data() + j)));
  }
  if (j < n) evaluate_scalar(form, re.subspan(j), im.subspan(j), out.subspan(j));
}

ArgMax max_avx2(const QuadraticForm& form, std::span<const double> re, std::span<const double> im) {
  const Broadcast b(form);
  const std::size_t n = re.size();
  const std::size_t body = n - n % 4;

  ArgMax best{-std::numeric_limits<double>::infinity(), ArgMax::npos};
  if (body > 0) {
    // Per-lane running max; lane index tracked as doubles (exact below 2^53).
    __m256d lane_max = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    __m256d lane_idx = _mm256_set1_pd(-1.0);
    __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    const __m256d step = _mm256_set1_pd(4.0);
    for (std::size_t j = 0; j < body; j += 4) {
      const __m256d v = b.value(_mm256_loadu_pd(re.data() + j), _mm256_loadu_pd(im.data() + j));
      const __m256d gt = _mm256_cmp_pd(v, lane_max, _CMP_GT_OQ);
      lane_max = _mm256_blendv_pd(lane_max, v, gt);
      lane_idx = _mm256_blendv_pd(lane_idx, idx, gt);
      idx = _mm256_add_pd(idx, step);
    }
    std::array<double, 4> m{};
    std::array<double, 4> k{};
    _mm256_storeu_pd(m.data(), lane_max);
    _mm256_storeu_pd(k.data(), lane_idx);
    for (int lane = 0; lane < 4; ++lane) {
      if (k[lane] < 0.0) continue;
      const auto at = static_cast<std::size_t>(k[lane]);
      if (m[lane] > best.value || (m[lane] == best.value && at < best.index)) best = {m[lane], at};
    }
  }
  if (body < n) {
    const ArgMax tail = max_scalar(form, re.subspan(body), im.subspan(body));
    if (tail.index != ArgMax::npos && tail.value > best.value) best = {tail.value, body + tail.index};
  }
  return best;
}

}  // namespace qstar::kernels
