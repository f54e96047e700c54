#include "deltafn/kernels.hpp"

#include <atomic>
#include <cmath>

namespace deltafn::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(DELTAFN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__)) && \
    (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool cpu_has_neon() {
#if defined(DELTAFN_HAVE_NEON)
  return true;  // mandatory on AArch64
#else
  return false;
#endif
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() {
  if (cpu_has_avx2()) return Isa::kAvx2;
  if (cpu_has_neon()) return Isa::kNeon;
  return Isa::kScalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if ((isa == Isa::kAvx2 && !cpu_has_avx2()) || (isa == Isa::kNeon && !cpu_has_neon())) {
    isa = Isa::kScalar;
  }
  active().store(isa, std::memory_order_relaxed);
  return isa;
}

double inverse_power_sum(double a, int count, int s) {
  switch (active_isa()) {
    case Isa::kAvx2:
      return inverse_power_sum_avx2(a, count, s);
    case Isa::kNeon:
      return inverse_power_sum_neon(a, count, s);
    case Isa::kScalar:
      break;
  }
  return inverse_power_sum_scalar(a, count, s);
}

namespace {

// x^s by binary powering; exact inputs keep the error at a few ulp.
inline double int_power(double x, int s) {
  double result = 1.0;
  double base = x;
  while (s > 0) {
    if (s & 1) result *= base;
    base *= base;
    s >>= 1;
  }
  return result;
}

}  // namespace

double inverse_power_sum_scalar(double a, int count, int s) {
  if (count <= 0) return 0.0;
  // Power the argument while x^s stays finite, otherwise power 1/x.
  const bool invert_first = s * std::log2(a + count - 1) > 1000.0;
  double sum = 0.0;
  for (int k = count - 1; k >= 0; --k) {
    const double x = a + k;
    sum += invert_first ? int_power(1.0 / x, s) : 1.0 / int_power(x, s);
  }
  return sum;
}

#if !defined(DELTAFN_HAVE_AVX2)
double inverse_power_sum_avx2(double a, int count, int s) {
  return inverse_power_sum_scalar(a, count, s);
}
#endif

#if !defined(DELTAFN_HAVE_NEON)
double inverse_power_sum_neon(double a, int count, int s) {
  return inverse_power_sum_scalar(a, count, s);
}
#endif

}  // namespace deltafn::kernels
