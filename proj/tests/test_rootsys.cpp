#include "cel/rootsys.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace cel;
using namespace cel::rootsys;

namespace {

Root r(std::vector<int> c) { return Root{std::move(c)}; }

std::vector<std::vector<int>> painted_sets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << rank); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < rank; ++k)
      if (mask & (1 << k)) s.push_back(k + 1);
    out.push_back(s);
  }
  return out;
}

const Gaussian kI = Gaussian::i();

}  // namespace

TEST_CASE("type A root counts") {
  for (int l = 1; l <= 6; ++l) {
    auto rs = RootSystem::type_a(l);
    CHECK(static_cast<int>(rs.roots().size()) == l * (l + 1));
    CHECK(static_cast<int>(rs.positive_roots().size()) == l * (l + 1) / 2);
    for (const auto& a : rs.positive_roots()) {
      CHECK(a.is_positive());
      CHECK(rs.is_root(-a));
      CHECK(!(-a).is_positive());
    }
  }
  auto a1 = RootSystem::type_a(1);
  CHECK(a1.cartan_matrix()(0, 0) == 2);
  auto a2 = RootSystem::type_a(2);
  CHECK(a2.positive_roots() == std::vector<Root>{r({1, 0}), r({0, 1}), r({1, 1})});
  CHECK_THROWS_AS(RootSystem::type_a(0), std::invalid_argument);
}

TEST_CASE("Killing duals") {
  auto a1 = RootSystem::type_a(1);
  const Root alpha = a1.simple_root(1);
  CHECK(a1.pairing(alpha, dual_element(a1, alpha)) == Gaussian(Rational(1, 2)));
  CHECK(a1.trace_form_scale() == 4);

  auto a2 = RootSystem::type_a(2);
  CHECK(dual_element(a2, r({1, 1})) == dual_element(a2, r({1, 0})) + dual_element(a2, r({0, 1})));
  CHECK_THROWS_AS(dual_element(a2, r({1, -1})), std::invalid_argument);
}

TEST_CASE("B(H_alpha, X) = alpha(X) for random X") {
  gen::Rng rng(101);
  for (int l = 1; l <= 4; ++l) {
    auto rs = RootSystem::type_a(l);
    for (int k = 0; k < 20; ++k) {
      const auto x = gen::cartan(rng, l, k % 2 == 1);
      for (const auto& a : rs.roots()) CHECK(rs.killing(dual_element(rs, a), x) == rs.pairing(a, x));
    }
  }
}

TEST_CASE("Killing gram is positive definite") {
  for (int l = 1; l <= 5; ++l) {
    auto rs = RootSystem::type_a(l);
    const auto& g = rs.killing_gram();
    // leading principal minors by exact elimination
    Matrix<Rational> m = g;
    for (int k = 0; k < l; ++k) {
      CHECK(m(k, k) > 0);
      for (int i = k + 1; i < l; ++i) {
        const Rational f = m(i, k) / m(k, k);
        for (int j = k; j < l; ++j) m(i, j) -= f * m(k, j);
      }
    }
  }
}

TEST_CASE("diagonal round trip") {
  gen::Rng rng(3);
  auto rs = RootSystem::type_a(4);
  for (int k = 0; k < 20; ++k) {
    const auto x = gen::cartan(rng, 4);
    CHECK(rs.from_diagonal(rs.diagonal(x)) == x);
  }
}

TEST_CASE("Hermitian symmetric pairs") {
  CHECK(hermitian_symmetric_pair(1, 1).n_dim == 1);
  auto p21 = hermitian_symmetric_pair(2, 1);
  CHECK(p21.n_dim == 2);
  CHECK(p21.rs.killing(p21.z, p21.z) == Gaussian(-4));
  CHECK(hermitian_symmetric_pair(3, 2).n_dim == 4);

  for (int l = 1; l <= 5; ++l)
    for (int node = 1; node <= l; ++node) {
      auto p = hermitian_symmetric_pair(l, node);
      CHECK(p.n_dim == node * (l + 1 - node));
      CHECK(p.rs.killing(p.z, p.z) == Gaussian(-2 * p.n_dim));
      CartanVector sum = CartanVector::zero(l);
      for (const auto& a : p.flag.r_n_pos) {
        CHECK(p.rs.pairing(a, p.z) == kI);
        sum += dual_element(p.rs, a);
        for (const auto& b : p.flag.r_n_pos) CHECK(!p.rs.is_root(a + b));
      }
      // sum of H_alpha = -(i/2) Z
      CHECK(sum == Rational(-1, 2) * times_i(p.z));
    }
}

TEST_CASE("flag decompositions partition the roots") {
  for (int l = 2; l <= 4; ++l) {
    auto rs = RootSystem::type_a(l);
    for (const auto& painted : painted_sets(l)) {
      auto fl = flag_decompose(rs, painted);
      CHECK(fl.center_dim == static_cast<int>(painted.size()));
      CHECK(fl.r_h.size() + 2 * fl.r_n_pos.size() == rs.roots().size());
      for (const auto& a : fl.r_n_pos) {
        CHECK(std::find(fl.r_h.begin(), fl.r_h.end(), a) == fl.r_h.end());
        CHECK(std::find(fl.r_h.begin(), fl.r_h.end(), -a) == fl.r_h.end());
      }
      size_t total = 0;
      for (int j = 0; j < fl.module_count(); ++j) {
        total += fl.modules[static_cast<size_t>(j)].size();
        for (const auto& a : fl.modules[static_cast<size_t>(j)])
          for (const auto& g : fl.r_h)
            for (const auto& b : {a + g, a - g})
              if (rs.is_root(b) && b.is_positive() && fl.module_of(b)) CHECK(*fl.module_of(b) == j);
      }
      CHECK(total == fl.r_n_pos.size());
    }
  }
}

TEST_CASE("flag examples") {
  auto a3 = RootSystem::type_a(3);
  auto full = flag_decompose(a3, {1, 2, 3});
  CHECK(full.module_count() == 6);
  CHECK(full.center_dim == 3);
  CHECK(full.n_matrix == std::vector<std::vector<Rational>>{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  CHECK(zeta(a3, full, 3) == dual_element(a3, r({1, 0, 0})) + dual_element(a3, r({0, 1, 0})));

  auto a2 = RootSystem::type_a(2);
  auto fl = flag_decompose(a2, {1});
  CHECK(fl.module_count() == 1);
  CHECK(fl.modules[0] == std::vector<Root>{r({1, 0}), r({1, 1})});
  const auto z1 = zeta(a2, fl, 0);
  CHECK(z1 == dual_element(a2, r({1, 0})) + dual_element(a2, r({1, 1})));
  CHECK(a2.killing(z1, dual_element(a2, r({0, 1}))).is_zero());

  CHECK_THROWS_AS(flag_decompose(a2, {}), std::invalid_argument);
  CHECK_THROWS_AS(flag_decompose(a2, {3}), std::invalid_argument);
}

TEST_CASE("zeta_j is central and n-matrix rows express the other modules") {
  for (int l = 2; l <= 4; ++l) {
    auto rs = RootSystem::type_a(l);
    for (const auto& painted : painted_sets(l)) {
      auto fl = flag_decompose(rs, painted);
      for (int j = 0; j < fl.module_count(); ++j)
        for (const auto& g : fl.r_h) CHECK(rs.pairing(g, zeta(rs, fl, j)).is_zero());
      for (int k = fl.center_dim; k < fl.module_count(); ++k) {
        CartanVector sum = CartanVector::zero(l);
        for (int j = 0; j < fl.center_dim; ++j)
          sum += fl.n_matrix[static_cast<size_t>(k - fl.center_dim)][static_cast<size_t>(j)] * zeta(rs, fl, j);
        CHECK(sum == zeta(rs, fl, k));
      }
    }
  }
}

TEST_CASE("gamma strings") {
  auto a2 = RootSystem::type_a(2);
  auto s = gamma_string(a2, r({1, 0}), r({0, 1}));
  CHECK(s.p == 0);
  CHECK(s.q == 1);
  s = gamma_string(a2, r({1, 1}), r({0, 1}));
  CHECK(s.p == -1);
  CHECK(s.q == 0);
  CHECK_THROWS_AS(gamma_string(a2, r({1, 0}), r({-1, 0})), std::invalid_argument);

  for (int l = 2; l <= 3; ++l) {
    auto rs = RootSystem::type_a(l);
    for (const auto& b : rs.roots())
      for (const auto& g : rs.roots()) {
        if (g == b || g == -b) continue;
        auto st = gamma_string(rs, b, g);
        Rational sum = 0;
        for (int k = st.p; k <= st.q; ++k) {
          CHECK(rs.is_root(b + k * g));
          sum += rs.inner(b + k * g, g);
        }
        CHECK(sum == 0);
        CHECK(!rs.is_root(b + (st.q + 1) * g));
        CHECK(!rs.is_root(b + (st.p - 1) * g));
      }
  }
}

TEST_CASE("Koszul element") {
  auto p = hermitian_symmetric_pair(1, 1);
  const auto dk = koszul_delta(p.rs, p.flag);
  CHECK(dk == Rational(1, 2) * dual_element(p.rs, p.rs.simple_root(1)));
  CHECK(dk == Rational(-1, 4) * times_i(p.z));

  auto a3 = RootSystem::type_a(3);
  for (const auto& painted : painted_sets(3)) {
    auto fl = flag_decompose(a3, painted);
    const auto d = koszul_delta(a3, fl);
    for (const auto& a : fl.r_n_pos) {
      const auto v = a3.pairing(a, d);
      CHECK(v.is_real());
      CHECK(v.re > 0);
    }
  }
}
