// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "deltafn/kernels.hpp"

namespace deltafn::kernels {

namespace {

inline __m256d int_power(__m256d x, int s) {
  __m256d result = _mm256_set1_pd(1.0);
  __m256d base = x;
  while (s > 0) {
    if (s & 1) result = _mm256_mul_pd(result, base);
    base = _mm256_mul_pd(base, base);
    s >>= 1;
  }
  return result;
}

}  // namespace

double inverse_power_sum_avx2(double a, int count, int s) {
  if (count <= 0) return 0.0;
  const bool invert_first = s * std::log2(a + count - 1) > 1000.0;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d base_a = _mm256_set1_pd(a);
  __m256d acc = _mm256_setzero_pd();

  // Blocks of four descending indices k, k-1, k-2, k-3.
  int k = count - 1;
  for (; k >= 3; k -= 4) {
    // a + (k - j) rounds exactly like the scalar kernel's a + k.
    const __m256d x = _mm256_add_pd(base_a, _mm256_set_pd(k - 3.0, k - 2.0, k - 1.0, k));
    const __m256d term = invert_first ? int_power(_mm256_div_pd(one, x), s)
                                      : _mm256_div_pd(one, int_power(x, s));
    acc = _mm256_add_pd(acc, term);
  }

  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[3] + lanes[2]) + (lanes[1] + lanes[0]);
  for (; k >= 0; --k) {
    const double x = a + k;
    double p = 1.0;
    double base = invert_first ? 1.0 / x : x;
    for (int e = s; e > 0; e >>= 1) {
      if (e & 1) p *= base;
      base *= base;
    }
    sum += invert_first ? p : 1.0 / p;
  }
  return sum;
}

}  // namespace deltafn::kernels
