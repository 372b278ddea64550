#include "cel/balanced.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace cel;
using namespace cel::balanced;
using rootsys::CartanVector;
using rootsys::dual_element;
using rootsys::flag_decompose;
using rootsys::times_i;
using rootsys::zeta;

namespace {

bool is_zero(const HomogeneousSpace::Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Gaussian& x) { return x.is_zero(); });
}

std::vector<CartanVector> i_zetas(const RootSystem& rs, const rootsys::FlagDecomposition& fl, std::vector<int> js) {
  std::vector<CartanVector> out;
  for (int j : js) out.push_back(times_i(zeta(rs, fl, j)));
  return out;
}

}  // namespace

TEST_CASE("weights") {
  auto rs = RootSystem::type_a(3);
  auto fl = flag_decompose(rs, {1, 2, 3});
  CHECK_THROWS_AS(AdaptedMetricWeights::make(fl, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(AdaptedMetricWeights::make(fl, {1, 1, 1, 1, 1, 0}), std::invalid_argument);
  CHECK(AdaptedMetricWeights::uniform(fl, 2).g == std::vector<Rational>(6, Rational(2)));
}

TEST_CASE("delta_h") {
  auto rs = RootSystem::type_a(3);
  for (auto painted : std::vector<std::vector<int>>{{1}, {1, 3}, {1, 2, 3}}) {
    auto fl = flag_decompose(rs, painted);
    CHECK(delta_h(rs, fl, AdaptedMetricWeights::uniform(fl)) == Rational(2) * rootsys::koszul_delta(rs, fl));
  }
  for (int l = 1; l <= 4; ++l)
    for (int node = 1; node <= l; ++node) {
      auto p = rootsys::hermitian_symmetric_pair(l, node);
      const Rational g(3, 2);
      CHECK(delta_h(p.rs, p.flag, AdaptedMetricWeights::uniform(p.flag, g)) == Rational(-1) / (2 * g) * times_i(p.z));
    }
}

TEST_CASE("delta_h pairs positively with the Koszul element") {
  gen::Rng rng(13);
  for (int l = 2; l <= 4; ++l) {
    auto rs = RootSystem::type_a(l);
    for (int k = 0; k < 10; ++k) {
      std::vector<int> painted;
      for (int j = 1; j <= l; ++j)
        if (gen::integer(rng, 0, 1) || (painted.empty() && j == l)) painted.push_back(j);
      auto fl = flag_decompose(rs, painted);
      const auto d = delta_h(rs, fl, gen::weights(rng, fl));
      CHECK(!d.is_zero());
      CHECK(rs.killing(rootsys::koszul_delta(rs, fl), d).re > 0);
      CHECK(in_center(rs, fl, times_i(d)));
    }
  }
}

TEST_CASE("Levi-Civita identities") {
  gen::Rng rng(21);
  auto rs = RootSystem::type_a(3);
  auto fl = flag_decompose(rs, {1, 2, 3});
  HomogeneousSpace space(rs, fl, gen::weights(rng, fl), i_zetas(rs, fl, {0, 1}));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(is_zero(levi_civita(space, space.fiber_index(a), space.fiber_index(b))));
  const Gaussian half_scale(rs.trace_form_scale() / 2);
  for (int r = 0; r < space.root_count(); ++r) {
    auto expected = space.torus_part(dual_element(rs, fl.r_n_pos[static_cast<size_t>(r)]));
    for (auto& x : expected) x *= half_scale;
    CHECK(levi_civita(space, space.positive_index(r), space.negative_index(r)) == expected);
  }
  // metric compatibility on sampled triples
  for (int k = 0; k < 60; ++k) {
    const int v = gen::integer(rng, 0, space.dim() - 1);
    const int w = gen::integer(rng, 0, space.dim() - 1);
    const int z = gen::integer(rng, 0, space.dim() - 1);
    const auto lhs = space.h(levi_civita(space, v, w), space.unit(z)) + space.h(space.unit(w), levi_civita(space, v, z));
    CHECK(lhs.is_zero());
  }
  CHECK_THROWS_AS(levi_civita(space, -1, 0), std::out_of_range);
}

TEST_CASE("fiber validation") {
  auto rs = RootSystem::type_a(3);
  auto fl = flag_decompose(rs, {1, 3});
  CHECK_THROWS_AS(HomogeneousSpace(rs, fl, AdaptedMetricWeights::uniform(fl), {zeta(rs, fl, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      HomogeneousSpace(rs, fl, AdaptedMetricWeights::uniform(fl), {times_i(dual_element(rs, rs.simple_root(2)))}),
      std::invalid_argument);
  auto z = i_zetas(rs, fl, {0});
  z.push_back(z[0]);
  CHECK_THROWS_AS(HomogeneousSpace(rs, fl, AdaptedMetricWeights::uniform(fl), z), std::invalid_argument);
  HomogeneousSpace odd(rs, fl, AdaptedMetricWeights::uniform(fl), i_zetas(rs, fl, {0}));
  CHECK(!odd.has_complex_structure());
  CHECK_THROWS_AS(odd.complex_structure(), std::invalid_argument);
}

TEST_CASE("balanced residual") {
  gen::Rng rng(34);
  for (int l = 2; l <= 4; ++l) {
    auto rs = RootSystem::type_a(l);
    auto fl = flag_decompose(rs, {1, l});
    for (int k = 0; k < 5; ++k) {
      const auto w = gen::weights(rng, fl);
      // M-manifold: the fiber is all of z
      HomogeneousSpace m(rs, fl, w, i_zetas(rs, fl, {0, 1}));
      auto res = balanced_residual(m);
      CHECK(!res.is_zero());
      CHECK(is_zero(res.divergence));
      // flag manifold: no fiber
      HomogeneousSpace flag(rs, fl, w, {});
      CHECK(balanced_residual(flag).is_zero());
    }
  }
  for (int l = 3; l <= 4; ++l) {
    auto rs = RootSystem::type_a(l);
    auto fl = flag_decompose(rs, {1, 2, l});
    for (int k = 0; k < 5; ++k) {
      // fiber orthogonal to delta_h
      const auto w = gen::weights(rng, fl);
      auto d = delta_h(rs, fl, w);
      d.imaginary = true;
      HomogeneousSpace bal(rs, fl, w, center_complement(rs, fl, {d}));
      const auto res = balanced_residual(bal);
      CHECK(res.is_zero());
      CHECK(is_zero(res.divergence));
    }
  }
}

TEST_CASE("is_balanced") {
  gen::Rng rng(55);
  auto rs = RootSystem::type_a(3);
  auto fl = flag_decompose(rs, {1, 2, 3});
  for (int k = 0; k < 10; ++k) {
    const auto w = gen::weights(rng, fl);
    CHECK(!is_balanced(rs, fl, w, 0, {}).balanced);
    const auto all = i_zetas(rs, fl, {0, 1, 2});
    const auto v = is_balanced(rs, fl, w, 3, all);
    CHECK(v.balanced);
    CHECK(v.remainder.is_zero());
    // coordinates reproduce delta_h
    CartanVector sum = CartanVector::zero(3);
    for (size_t j = 0; j < 3; ++j) sum += v.coords[j] * zeta(rs, fl, static_cast<int>(j));
    CHECK(sum == delta_h(rs, fl, w));
  }
  const auto w = AdaptedMetricWeights::uniform(fl);
  CHECK_THROWS_AS(is_balanced(rs, fl, w, 2, i_zetas(rs, fl, {0})), std::invalid_argument);
  CHECK_THROWS_AS(is_balanced(rs, fl, w, 1, {zeta(rs, fl, 0)}), std::invalid_argument);
}

TEST_CASE("residual criterion and center criterion agree") {
  gen::Rng rng(89);
  auto rs = RootSystem::type_a(3);
  auto fl = flag_decompose(rs, {1, 2, 3});
  int balanced = 0;
  for (int k = 0; k < 30; ++k) {
    const auto w = gen::weights(rng, fl);
    std::vector<CartanVector> fiber;
    if (k % 3 == 0) {
      auto d = delta_h(rs, fl, w);
      d.imaginary = true;
      fiber = center_complement(rs, fl, {d});
    } else {
      fiber = i_zetas(rs, fl, {k % 3 == 1 ? 0 : 1, 2});
    }
    const auto center = center_complement(rs, fl, fiber);
    HomogeneousSpace space(rs, fl, w, fiber);
    const bool a = balanced_residual(space).is_zero();
    const bool b = is_balanced(rs, fl, w, static_cast<int>(center.size()), center).balanced;
    CHECK(a == b);
    balanced += a;
  }
  CHECK(balanced >= 10);
}

TEST_CASE("center complement") {
  auto rs = RootSystem::type_a(4);
  auto fl = flag_decompose(rs, {1, 2, 4});
  const auto sub = i_zetas(rs, fl, {1});
  const auto comp = center_complement(rs, fl, sub);
  CHECK(comp.size() == 2);
  for (const auto& c : comp) {
    CHECK(c.imaginary);
    CHECK(in_center(rs, fl, c));
    CHECK(rs.killing(c, sub[0]).is_zero());
  }
}

TEST_CASE("construction on the A3 full flag") {
  auto rs = RootSystem::type_a(3);
  auto fl = flag_decompose(rs, {1, 2, 3});
  auto bc = construct_balanced(rs, fl);
  CHECK(bc.c == std::vector<Rational>{3, 4, 3});
  CHECK(bc.n_column_sums == std::vector<Rational>{2, 3, 2});
  CHECK(bc.weights.g == std::vector<Rational>(6, Rational(1)));
  CHECK(bc.delta_h == 3 * zeta(rs, fl, 0) + 4 * zeta(rs, fl, 1) + 3 * zeta(rs, fl, 2));
  CHECK(bc.verdict.balanced);
  CHECK(bc.residual_zero);
  CHECK(bc.torus_dims.first == 1);
  CHECK(bc.torus_dims.second == 2);
  CHECK(bc.lattice.lambda == 8);

  CHECK_THROWS_AS(construct_balanced(rs, fl, std::vector<Rational>{2, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(construct_balanced(RootSystem::type_a(2), flag_decompose(RootSystem::type_a(2), {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("every construction is balanced with even codimension") {
  gen::Rng rng(144);
  for (int l = 3; l <= 5; ++l) {
    auto rs = RootSystem::type_a(l);
    for (int mask = 1; mask < (1 << l); ++mask) {
      std::vector<int> painted;
      for (int k = 0; k < l; ++k)
        if (mask & (1 << k)) painted.push_back(k + 1);
      if (painted.size() < 3) continue;
      auto fl = flag_decompose(rs, painted);
      std::vector<Rational> c;
      auto base = construct_balanced(rs, fl);
      for (const auto& s : base.n_column_sums) c.push_back(s + gen::positive_rational(rng));
      for (const auto& bc : {base, construct_balanced(rs, fl, c)}) {
        CHECK(bc.verdict.balanced);
        CHECK(bc.residual_zero);
        CHECK(bc.torus_dims.second % 2 == 0);
        CartanVector tele = CartanVector::zero(l);
        for (int j = 0; j < fl.module_count(); ++j) tele += (1 / bc.weights.g[static_cast<size_t>(j)]) * zeta(rs, fl, j);
        CartanVector cz = CartanVector::zero(l);
        for (int j = 0; j < fl.center_dim; ++j) cz += bc.c[static_cast<size_t>(j)] * zeta(rs, fl, j);
        CHECK(tele == cz);
      }
    }
  }
}
