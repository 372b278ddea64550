#include "cel/einstein.hpp"

#include "cel/errors.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace cel;
using namespace cel::einstein;

namespace {

// Reconstructs (g1, g2, h0) from x through the two block equations only:
// z = 2x^2/(n1^2 (x-2)) from the first block, y from n1 x + n2 y = 2(n1+n2+1).
// At a root of phi the torus equation must then hold as well.
ExactMetric from_root(int n1, const Rational& x, int n2) {
  const Rational y = (Rational(2 * n1 + 2 * n2 + 2) - n1 * x) / n2;
  const Rational z = 2 * x * x / (Rational(n1 * n1) * (x - 2));
  return {1 / x, 1 / y, 16 / z};
}

}  // namespace

TEST_CASE("phi anchors") {
  CHECK(phi(2, 2, 1, 3) == 2);
  CHECK(phi(2, 2, 1, 5) == 25);
  CHECK(phi(2, 2, 1, Rational(5, 2)) == 0);
  for (int n1 = 1; n1 <= 12; ++n1)
    for (int n2 = 1; n2 <= 12; ++n2) {
      CHECK(phi(n1, n2, 1, 2 + Rational(2, n1)) == Rational(8, n1 * n2));
      const Rational s(n1 + n2 + 1);
      for (const Rational& kappa : {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)})
        CHECK(phi(n1, n2, kappa, search_bound(n1, n2)) == 8 * n2 * s * s / Rational(n1 * n1 * n1 * n1));
    }
  CHECK(search_bound(2, 2) == 5);
}

TEST_CASE("phi_polynomial agrees with phi and phi_eval") {
  gen::Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const int n1 = gen::integer(rng, 1, 8);
    const int n2 = gen::integer(rng, 1, 8);
    const Rational kappa = gen::positive_rational(rng);
    const Rational x = gen::rational(rng, -20, 40, 7);
    const auto poly = phi_polynomial(n1, n2, kappa);
    CHECK(poly(x) == phi(n1, n2, kappa, x));
    CHECK(phi_eval(n1, n2, to_double(kappa), to_double(x)) ==
          doctest::Approx(to_double(phi(n1, n2, kappa, x))).epsilon(1e-9));
  }
}

TEST_CASE("solutions satisfy the Einstein system") {
  auto s = solve(ClassCParams::make(1, 1, 0, 1));
  REQUIRE(s.size() == 1);
  CHECK(s[0].metric.g1 == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(s[0].metric.h0 == doctest::Approx(8.0 / 9).epsilon(1e-14));

  s = solve(ClassCParams::make(2, 2, 0, 1));
  REQUIRE(s.size() == 1);
  CHECK(s[0].metric.g2 == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(s[0].metric.h0 == doctest::Approx(2.56).epsilon(1e-14));

  s = solve(ClassCParams::make(1, 2, 0, 1));
  REQUIRE(s.size() == 1);
  CHECK(s[0].x > 2);
  CHECK(s[0].x <= 4);
  CHECK(s[0].residual < 1e-10);

  gen::Rng rng(99);
  for (int k = 0; k < 60; ++k) {
    const auto p = gen::params(rng, 3);
    for (const auto& sol : solve(p)) {
      CHECK(sol.residual < 1e-10);
      const auto r = classc::second_ricci(p, sol.metric);
      CHECK(std::abs(r.s_n1 - sol.metric.g1) < 1e-10);
      CHECK(std::abs(r.s_t - sol.metric.h0) < 1e-10);
      const auto o = classc::oracle_second_ricci(p, sol.metric);
      CHECK(std::abs(o.s_n2 - sol.metric.g2) < 1e-10);
      CHECK(std::abs(o.s_t - sol.metric.h0) < 1e-10);
    }
  }
}

TEST_CASE("solutions are sorted and admissible for kappa != 1") {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 1}, {3, 1}, {0, 3}}) {
    const auto p = ClassCParams::make(2, 3, a, b);
    const auto s = solve(p);
    for (size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].x > 2);
      CHECK(s[i].y > 0);
      if (i > 0) CHECK(s[i - 1].x < s[i].x);
    }
  }
}

TEST_CASE("symmetric solutions are exact") {
  auto s = symmetric_solution(1);
  CHECK(s.exact->g1 == Rational(1, 3));
  CHECK(s.exact->h0 == Rational(8, 9));
  s = symmetric_solution(2);
  CHECK(s.exact->h0 == Rational(64, 25));
  s = symmetric_solution(10);
  CHECK(s.exact->g1 == Rational(10, 21));
  CHECK(s.exact->g2 == Rational(10, 21));
  CHECK(s.exact->h0 == Rational(8000, 441));
  CHECK(exact_residual(ClassCParams::make(10, 10, 0, 1), *s.exact) == 0);
  CHECK(s.residual == 0);
  CHECK_THROWS_AS(symmetric_solution(0), std::invalid_argument);
}

TEST_CASE("discriminant and uniqueness") {
  CHECK(discriminant(2, 2) == -2880);
  for (int n = 1; n <= 20; ++n) {
    Rational n2 = Rational(n) * n;
    CHECK(discriminant(n, n) == 3 * n2 * n2 * n2 - 12 * n2 * n2 * n2 * n2);
    CHECK(discriminant(n, n) < 0);
  }
  auto r = uniqueness_report(2, 2);
  CHECK(r.root_count == 1);
  CHECK(r.roots_in_interval);
  CHECK(uniqueness_report(1, 1).root_count == 1);
  r = uniqueness_report(3, 2);
  CHECK(r.discriminant < 0);
  CHECK(r.root_count == 1);
  CHECK_THROWS_AS(uniqueness_report(ClassCParams::make(2, 2, 1, 1)), std::invalid_argument);
}

TEST_CASE("phi is negative at 0 and 2") {
  for (int n1 = 1; n1 <= 10; ++n1)
    for (int n2 = 1; n2 <= 10; ++n2)
      for (const Rational& kappa : {Rational(1, 2), Rational(1), Rational(2)}) {
        CHECK(phi(n1, n2, kappa, 0) < 0);
        CHECK(phi(n1, n2, kappa, 2) < 0);
      }
}

TEST_CASE("rational roots of phi reconstruct exact Einstein metrics") {
  for (int n = 1; n <= 15; ++n) {
    const Rational x = Rational(2 * n + 1, n);
    REQUIRE(phi(n, n, 1, x) == 0);
    const auto m = from_root(n, x, n);
    CHECK(exact_residual(ClassCParams::make(n, n, 0, 1), m) == 0);
    CHECK(m.g1 == symmetric_solution(n).exact->g1);
  }
  // a non-root leaves the torus equation unsatisfied
  const auto m = from_root(2, Rational(3), 2);
  CHECK(exact_residual(ClassCParams::make(2, 2, 0, 1), m) != 0);
}
