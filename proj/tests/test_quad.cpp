#include <doctest.h>

#include <cmath>

#include "deltafn/errors.hpp"
#include "deltafn/quad.hpp"
#include "deltafn/specfun.hpp"
#include "oracles.hpp"

using namespace deltafn;
using oracle::kEuler;

TEST_CASE("finite integrals with exact antiderivatives") {
  const QuadResult half = integrate_finite([](double u) { return u; }, 0.0, 1.0);
  CHECK(half.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.converged);

  const QuadResult r = integrate_finite([](double u) { return u / ((u + 1.0) * (u + 1.0)); }, 0.0, 1.0);
  CHECK(std::fabs(r.value - (std::log(2.0) - 0.5)) < 1e-14);

  const QuadResult z = integrate_finite([](double u) { return u * hurwitz_zeta(2.0, u + 1.0); }, 0.0, 1.0);
  CHECK(std::fabs(z.value - (1.0 - kEuler)) < 1e-12);
}

TEST_CASE("error estimates are honest on smooth and endpoint-singular integrands") {
  QuadConfig cfg;
  cfg.rel_tol = 1e-6;
  const QuadResult r = integrate_finite([](double u) { return std::exp(3.0 * u) * std::cos(7.0 * u); }, 0.0, 2.0, cfg);
  const double exact = (std::exp(6.0) * (3.0 * std::cos(14.0) + 7.0 * std::sin(14.0)) - 3.0) / 58.0;
  CHECK(std::fabs(r.value - exact) <= 10.0 * r.abs_err_est + 1e-15);

  const QuadResult s = integrate_finite([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0);
  CHECK(std::fabs(s.value - 2.0) <= 10.0 * s.abs_err_est + 1e-12);
  CHECK(s.converged);
}

TEST_CASE("exhausted subdivision budget is flagged") {
  QuadConfig cfg;
  cfg.max_subdivisions = 1;
  const QuadResult r = integrate_finite([](double u) { return std::sin(50.0 * u); }, 0.0, 3.0, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.abs_err_est > 0.0);
}

TEST_CASE("configuration validation") {
  QuadConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = QuadConfig{};
  bad.max_subdivisions = 0;
  CHECK_THROWS_AS(integrate_finite([](double u) { return u; }, 0.0, 1.0, bad), DomainError);
  CHECK_THROWS_AS(integrate_finite([](double u) { return u; }, 1.0, 0.0), DomainError);
}

TEST_CASE("additivity of finite integrals") {
  auto f = [](double u) { return std::exp(-u) * std::sin(3.0 * u) + u * u; };
  for (auto [a, b, c] : {std::tuple{0.0, 0.4, 1.0}, std::tuple{-2.0, 0.5, 3.0}}) {
    const QuadResult ab = integrate_finite(f, a, b);
    const QuadResult bc = integrate_finite(f, b, c);
    const QuadResult ac = integrate_finite(f, a, c);
    CHECK(std::fabs(ab.value + bc.value - ac.value) <= ab.abs_err_est + bc.abs_err_est + ac.abs_err_est + 1e-15);
  }
}

TEST_CASE("semi-infinite integrals") {
  CHECK(std::fabs(integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0).value - 1.0) < 1e-13);
  CHECK(std::fabs(integrate_semi_infinite([](double t) { return 1.0 / (t * t); }, 1.0).value - 1.0) < 1e-12);
}

TEST_CASE("fractional-part integrals over half-lines") {
  const QuadResult a = integrate_unit_split([](double phase, double x) { return phase / (x * x); }, 1.0);
  CHECK(std::fabs(a.value - (1.0 - kEuler)) < 1e-12);
  CHECK(a.converged);

  // -Delta''(1)/2 = (3 - pi^2/6 - 2 gamma)/2.
  const QuadResult b = integrate_unit_split([](double phase, double x) { return phase * phase / (x * x * x); }, 1.0);
  CHECK(std::fabs(b.value - (-oracle::kDelta2At1 / 2.0)) < 1e-12);

  const QuadResult c = integrate_unit_split([](double, double x) { return 1.0 / (x * x); }, 1.0);
  CHECK(std::fabs(c.value - 1.0) < 1e-12);
}

TEST_CASE("fractional-part integral of 1 - gamma via the telescoping oracle") {
  // sum_{l>=1} [ln((l+1)/l) - 1/(l+1)] = 1 - gamma, summed with an asymptotic tail.
  double sum = 0.0;
  const long n = 1000000;
  for (long l = n; l >= 1; --l) sum += std::log1p(1.0 / l) - 1.0 / (l + 1.0);
  const double N = static_cast<double>(n);
  sum += 1.0 / (2.0 * N) - 5.0 / (12.0 * N * N);  // remainder of the series after n terms
  CHECK(std::fabs(sum - (1.0 - kEuler)) < 1e-12);
  const QuadResult q = integrate_unit_split([](double phase, double x) { return phase / (x * x); }, 1.0);
  CHECK(std::fabs(q.value - sum) < 1e-12);
}

TEST_CASE("splitting a half-line into unit pieces") {
  // int_1^inf f({x}) g(x) dx = sum_l int_0^1 f(y) g(y + l) dy for f = y^m, g = (x+1)^(-m-2).
  for (int m = 0; m <= 3; ++m) {
    const double p = m;
    const QuadResult direct = integrate_unit_split(
        [p](double phase, double x) { return std::pow(phase, p) * std::pow(x + 1.0, -p - 2.0); }, 1.0);
    double pieces = 0.0;
    double pieces_err = 0.0;
    for (int l = 1; l <= 20000; ++l) {
      const QuadResult q = integrate_finite(
          [p, l](double y) { return std::pow(y, p) * std::pow(y + l + 1.0, -p - 2.0); }, 0.0, 1.0);
      pieces += q.value;
      pieces_err += q.abs_err_est;
    }
    // Remainder after L pieces: mean of y^m times int_(L+1)^inf (x+1)^(-m-2) dx, exact for m = 0.
    pieces += std::pow(20002.0, -p - 1.0) / ((p + 1.0) * (p + 1.0));
    CAPTURE(m);
    CHECK(std::fabs(direct.value - pieces) <= direct.abs_err_est + pieces_err + 1e-11);
  }
}

TEST_CASE("zeta transform of periodic integrands: documented values") {
  const TransformSides one = lemma2_transform([](double) { return 1.0; }, 1.0, 1.0, 2.0);
  CHECK(std::fabs(one.lhs.value - 1.0) < 1e-11);
  CHECK(std::fabs(one.rhs.value - 1.0) < 1e-11);
  const TransformSides lin = lemma2_transform([](double y) { return y; }, 1.0, 1.0, 2.0);
  CHECK(std::fabs(lin.lhs.value - (1.0 - kEuler)) < 1e-11);
  CHECK(std::fabs(lin.rhs.value - (1.0 - kEuler)) < 1e-11);
  const TransformSides sq = lemma2_transform([](double y) { return y * y; }, 1.0, 1.0, 3.0);
  CHECK(std::fabs(sq.lhs.value - (-oracle::kDelta2At1 / 2.0)) < 1e-11);
  CHECK(std::fabs(sq.rhs.value - (-oracle::kDelta2At1 / 2.0)) < 1e-11);
  CHECK_THROWS_AS(lemma2_transform([](double) { return 1.0; }, 0.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(lemma2_transform([](double) { return 1.0; }, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("zeta transform of periodic integrands: grid") {
  using Fn = double (*)(double);
  const Fn fs[] = {[](double) { return 1.0; }, [](double y) { return y; }, [](double y) { return y * y; }};
  for (double b : {1.0, 2.0, 3.0}) {
    for (double c : {1.0, 2.0}) {
      for (double lambda : {2.0, 3.0, 4.0}) {
        for (Fn f : fs) {
          const TransformSides t = lemma2_transform(f, b, c, lambda);
          CAPTURE(b);
          CAPTURE(c);
          CAPTURE(lambda);
          CHECK(std::fabs(t.lhs.value - t.rhs.value) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("scaling substitution x = b v") {
  // int_0^inf f({x/b}) g(x) dx = b int_0^inf f({v}) g(b v) dv, g(x) = (x+c)^(-lambda).
  for (double b : {1.0, 2.0, 3.0}) {
    for (double c : {1.0, 2.0}) {
      for (double lambda : {2.0, 3.0, 4.0}) {
        auto f = [](double y) { return y * y + 0.5 * y + 0.25; };
        const QuadResult direct = integrate_unit_split(
            [&](double phase, double x) { return f(phase) * std::pow(x + c, -lambda); }, 0.0, QuadConfig{}, b);
        const QuadResult scaled = integrate_unit_split(
            [&](double phase, double v) { return b * f(phase) * std::pow(b * v + c, -lambda); }, 0.0);
        CHECK(std::fabs(direct.value - scaled.value) <= 1e-10);
      }
    }
  }
}

TEST_CASE("frac and p1") {
  CHECK(frac(3.25) == 0.25);
  CHECK(frac(-0.25) == 0.75);
  CHECK(p1(2.0) == -0.5);
  for (double x : {0.125, 7.5, 1023.75}) CHECK(frac(x + 1.0) == frac(x));
}
