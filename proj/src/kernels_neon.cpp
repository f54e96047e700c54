// AArch64 Advanced SIMD variant (two double lanes).

#include <arm_neon.h>

#include <cmath>

#include "deltafn/kernels.hpp"

namespace deltafn::kernels {

namespace {

inline float64x2_t int_power(float64x2_t x, int s) {
  float64x2_t result = vdupq_n_f64(1.0);
  float64x2_t base = x;
  while (s > 0) {
    if (s & 1) result = vmulq_f64(result, base);
    base = vmulq_f64(base, base);
    s >>= 1;
  }
  return result;
}

}  // namespace

double inverse_power_sum_neon(double a, int count, int s) {
  if (count <= 0) return 0.0;
  const bool invert_first = s * std::log2(a + count - 1) > 1000.0;
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t base_a = vdupq_n_f64(a);
  float64x2_t acc = vdupq_n_f64(0.0);

  int k = count - 1;
  for (; k >= 1; k -= 2) {
    // a + (k - j) rounds exactly like the scalar kernel's a + k.
    const double index[2] = {static_cast<double>(k), k - 1.0};
    const float64x2_t x = vaddq_f64(base_a, vld1q_f64(index));
    const float64x2_t term = invert_first ? int_power(vdivq_f64(one, x), s)
                                          : vdivq_f64(one, int_power(x, s));
    acc = vaddq_f64(acc, term);
  }
  double sum = vgetq_lane_f64(acc, 1) + vgetq_lane_f64(acc, 0);
  if (k == 0) {
    double p = 1.0;
    double base = invert_first ? 1.0 / a : a;
    for (int e = s; e > 0; e >>= 1) {
      if (e & 1) p *= base;
      base *= base;
    }
    sum += invert_first ? p : 1.0 / p;
  }
  return sum;
}

}  // namespace deltafn::kernels
