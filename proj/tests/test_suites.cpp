#include <doctest.h>

#include <cmath>

#include "deltafn/errors.hpp"
#include "deltafn/suites.hpp"

using namespace deltafn;

TEST_CASE("every named suite passes at its default tolerances") {
  for (const auto& name : suite_names()) {
    const VerificationReport rep = run_suite(name);
    CAPTURE(name);
    CHECK(rep.suite == name);
    CHECK(rep.n_pass + rep.n_fail == static_cast<long>(rep.checks.size()));
    CHECK(rep.n_fail == 0);
    CHECK(!rep.checks.empty());
  }
}

TEST_CASE("tolerance override applies to every check") {
  const VerificationReport strict = run_suite("halfint", 0.0);
  for (const auto& c : strict.checks) CHECK(c.tolerance == 0.0);
  CHECK(strict.n_fail > 0);
  const VerificationReport loose = run_suite("halfint", 1.0);
  CHECK(loose.n_fail == 0);
  CHECK_THROWS_AS(run_suite("halfint", -1.0), DomainError);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nosuch"), DomainError); }

TEST_CASE("suite output order is deterministic") {
  const VerificationReport a = run_suite("recurrence");
  const VerificationReport b = run_suite("recurrence");
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].point.to_string() == b.checks[i].point.to_string());
    CHECK(a.checks[i].residual == b.checks[i].residual);
  }
}

TEST_CASE("grids") {
  const auto lin = make_grid(0.0, 10.0, 11, false);
  REQUIRE(lin.size() == 11);
  CHECK(lin[3] == 3.0);
  CHECK(lin.back() == 10.0);
  const auto lg = make_grid(1.0, 100.0, 3, true);
  CHECK(lg[1] == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(lg.back() == 100.0);
  CHECK(make_grid(1.0, 1.0, 1, false).size() == 1);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 3, true), DomainError);
  CHECK_THROWS_AS(make_grid(-1.0, 1.0, 3, false), DomainError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0, false), DomainError);
  CHECK_THROWS_AS(make_grid(2.0, 1.0, 3, false), DomainError);

  const auto mixed = mixed_grid(40);
  REQUIRE(mixed.size() == 40);
  CHECK(mixed.front() == -0.9);
  CHECK(mixed.back() == 100.0);
  for (std::size_t i = 1; i < mixed.size(); ++i) CHECK(mixed[i] > mixed[i - 1]);
}
