#pragma once

// Precision-generic kernels shared by the double and the binary128 builds of
// the special functions. Not part of the public interface.

#include <array>
#include <cstddef>

namespace deltafn::detail {

// Even Bernoulli numbers B_2 .. B_30 as exact numerator/denominator pairs.
struct Rational {
  double num;
  double den;
};

inline constexpr std::array<Rational, 15> kBernoulliEven = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

// Tuning per arithmetic type. `Ops` supplies log() and the constants.
//   lgamma_shift:  Stirling series used once x >= lgamma_shift
//   digamma_shift: asymptotic series used once x >= digamma_shift
//   zeta_shift:    Euler-Maclaurin start index N = zeta_shift + s
template <class T, class Ops>
struct Kernels {
  static T bernoulli(std::size_t j) {  // B_{2(j+1)}
    return T(kBernoulliEven[j].num) / T(kBernoulliEven[j].den);
  }

  static T ln_gamma_stirling(T x) {
    T result = (x - T(0.5)) * Ops::log(x) - x + Ops::half_ln_2pi();
    const T inv = T(1) / x;
    const T inv2 = inv * inv;
    T power = inv;
    for (std::size_t j = 0; j < kBernoulliEven.size(); ++j) {
      const T k2 = T(2 * (j + 1));
      const T term = bernoulli(j) / (k2 * (k2 - T(1))) * power;
      result += term;
      if (Ops::abs(term) <= Ops::eps() * Ops::abs(result)) break;
      power *= inv2;
    }
    return result;
  }

  static T ln_gamma_shifted(T x) {
    if (x >= T(Ops::lgamma_shift)) return ln_gamma_stirling(x);
    T product = T(1);
    while (x < T(Ops::lgamma_shift)) {
      product *= x;
      x += T(1);
    }
    return ln_gamma_stirling(x) - Ops::log(product);
  }

  static T digamma(T x) {
    T acc = T(0);
    while (x < T(Ops::digamma_shift)) {
      acc -= T(1) / x;
      x += T(1);
    }
    const T inv = T(1) / x;
    const T inv2 = inv * inv;
    T result = Ops::log(x) - T(0.5) * inv;
    T power = inv2;
    for (std::size_t j = 0; j < kBernoulliEven.size(); ++j) {
      const T term = bernoulli(j) / T(2 * (j + 1)) * power;
      result -= term;
      if (Ops::abs(term) <= Ops::eps() * Ops::abs(result)) break;
      power *= inv2;
    }
    return result + acc;
  }

  // x^(-s) for integer s >= 1 by binary powering.
  static T inverse_power(T x, int s) {
    T base = x;
    T result = T(1);
    int e = s;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return T(1) / result;
  }

  // Euler-Maclaurin tail of zeta(s, a) beyond the first `shift` terms:
  // w^(1-s)/(s-1) + w^(-s)/2 + sum_j B_2j/(2j)! (s)_(2j-1) w^(-s-2j+1), w = a + shift.
  static T zeta_tail(T s, T w, T w_pow_minus_s) {
    T result = w * w_pow_minus_s / (s - T(1)) + T(0.5) * w_pow_minus_s;
    const T inv = T(1) / w;
    const T inv2 = inv * inv;
    T rising = s;                   // (s)_(2j-1)
    T factorial = T(2);             // (2j)!
    T power = w_pow_minus_s * inv;  // w^(-s-2j+1)
    for (std::size_t j = 0; j < kBernoulliEven.size(); ++j) {
      const T term = bernoulli(j) / factorial * rising * power;
      result += term;
      if (Ops::abs(term) <= Ops::eps() * Ops::abs(result)) break;
      const T k = T(2 * (j + 1));
      rising *= (s + k - T(1)) * (s + k);
      factorial *= (k + T(1)) * (k + T(2));
      power *= inv2;
    }
    return result;
  }

  // zeta(s, a) for integer s >= 2, plain loop for the direct part.
  static T hurwitz_int(int s, T a) {
    const int shift = Ops::zeta_shift + s;
    T direct = T(0);
    for (int k = shift - 1; k >= 0; --k) direct += inverse_power(a + T(k), s);
    const T w = a + T(shift);
    return direct + zeta_tail(T(s), w, inverse_power(w, s));
  }
};

}  // namespace deltafn::detail
