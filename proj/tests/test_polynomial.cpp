#include "cel/polynomial.hpp"

#include <doctest.h>

#include <random>

using cel::Polynomial;
using cel::Rational;

namespace {

Polynomial linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p({Rational(1)});
  for (const auto& r : roots) p = p * linear(r);
  return p;
}

}  // namespace

TEST_CASE("evaluation and derivative") {
  const Polynomial p({Rational(1), Rational(-2), Rational(3)});  // 3x^2 - 2x + 1
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == 9);
  CHECK(p.derivative() == Polynomial({Rational(-2), Rational(6)}));
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("division identity a = q*b + r") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int k = 0; k < 50; ++k) {
    std::vector<Rational> ac(6), bc(3);
    for (auto& x : ac) x = c(rng);
    for (auto& x : bc) x = c(rng);
    bc.back() = 1 + std::abs(c(rng));
    const Polynomial a(ac), b(bc);
    const auto [q, r] = cel::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("squarefree part drops repeated factors") {
  const Polynomial p = from_roots({1, 1, 2, Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(cel::squarefree_part(p).monic() == from_roots({1, 2, Rational(1, 3)}));
}

TEST_CASE("Sturm counts distinct roots on half-open intervals") {
  const Polynomial p = from_roots({1, 2, 3});
  const cel::SturmSequence st(p);
  CHECK(st.count(0, 4) == 3);
  CHECK(st.count(1, 3) == 2);  // (1, 3]
  CHECK(st.count(Rational(3, 2), Rational(5, 2)) == 1);
}

TEST_CASE("isolate_roots brackets each root, including one at the right endpoint") {
  const Polynomial p = from_roots({Rational(1, 7), Rational(2, 7), 1});
  const auto roots = cel::isolate_roots(p, 0, 1, Rational(1, 1 << 20));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo < Rational(1, 7));
  CHECK(roots[0].hi >= Rational(1, 7));
  CHECK(roots[1].lo < Rational(2, 7));
  CHECK(roots[1].hi >= Rational(2, 7));
  for (const auto& r : roots) CHECK((r.exact || r.hi - r.lo <= Rational(1, 1 << 20)));
}

TEST_CASE("isolate_roots on random split cubics") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-40, 40);
  for (int k = 0; k < 40; ++k) {
    std::vector<Rational> roots = {Rational(num(rng), 7), Rational(num(rng), 11), Rational(num(rng), 13)};
    const Polynomial p = Rational(-5, 2) * from_roots(roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto iv = cel::isolate_roots(p, -10, 10, Rational(1, 1 << 30));
    REQUIRE(iv.size() == roots.size());
    for (size_t i = 0; i < iv.size(); ++i) {
      CHECK(iv[i].lo <= roots[i]);
      CHECK(roots[i] <= iv[i].hi);
    }
  }
}

TEST_CASE("isolate_roots rejects degenerate input") {
  CHECK_THROWS_AS(cel::isolate_roots(Polynomial(), 0, 1, Rational(1, 8)), std::invalid_argument);
  CHECK_THROWS_AS(cel::isolate_roots(linear(0), 1, 1, Rational(1, 8)), std::invalid_argument);
}
