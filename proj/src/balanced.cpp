/// @file balanced.cpp
#include "cel/balanced.hpp"

#include "cel/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cel::balanced {

namespace {

using Vec = HomogeneousSpace::Vec;

Rational module_weight(const FlagDecomposition& flag, const AdaptedMetricWeights& w, const rootsys::Root& a) {
  auto j = flag.module_of(a.is_positive() ? a : -a);
  if (!j) throw std::invalid_argument("root is not complementary");
  return w.g[static_cast<size_t>(*j)];
}

/// Basis of {c : M c = 0} by reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int k = r; k < rows; ++k)
      if (m(k, c) != 0) {
        piv = k;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < cols; ++k) std::swap(m(piv, k), m(r, k));
    Rational p = m(r, c);
    for (int k = 0; k < cols; ++k) m(r, k) /= p;
    for (int k = 0; k < rows; ++k) {
      if (k == r || m(k, c) == 0) continue;
      Rational f = m(k, c);
      for (int l = 0; l < cols; ++l) m(k, l) -= f * m(r, l);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(static_cast<size_t>(cols));
    v[static_cast<size_t>(free)] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[static_cast<size_t>(pivots[k])] = -m(static_cast<int>(k), free);
    out.push_back(std::move(v));
  }
  return out;
}

Rational real_killing(const RootSystem& rs, const CartanVector& a, const CartanVector& b) {
  CartanVector x = a;
  CartanVector y = b;
  x.imaginary = false;
  y.imaginary = false;
  return rs.killing(x, y).re;
}

Matrix<Gaussian> cartan_matrix(const RootSystem& rs, const CartanVector& x) {
  auto d = rs.diagonal(x);
  Matrix<Gaussian> m(rs.matrix_size(), rs.matrix_size());
  for (int k = 0; k < rs.matrix_size(); ++k)
    m(k, k) = x.imaginary ? Gaussian(Rational(0), d[static_cast<size_t>(k)]) : Gaussian(d[static_cast<size_t>(k)]);
  return m;
}

void require_independent(const RootSystem& rs, const std::vector<CartanVector>& vs, const char* what) {
  const int n = static_cast<int>(vs.size());
  Matrix<Rational> gram(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gram(a, b) = real_killing(rs, vs[static_cast<size_t>(a)], vs[static_cast<size_t>(b)]);
  if (n > 0 && !inverse(gram)) throw std::invalid_argument(std::string(what) + " vectors are linearly dependent");
}

}  // namespace

AdaptedMetricWeights AdaptedMetricWeights::make(const FlagDecomposition& flag, std::vector<Rational> g) {
  if (static_cast<int>(g.size()) != flag.module_count())
    throw std::invalid_argument("expected " + std::to_string(flag.module_count()) + " module weights, got " +
                                std::to_string(g.size()));
  for (const auto& x : g)
    if (x <= 0) throw std::invalid_argument("module weights must be positive");
  return {std::move(g)};
}

AdaptedMetricWeights AdaptedMetricWeights::uniform(const FlagDecomposition& flag, const Rational& g) {
  return make(flag, std::vector<Rational>(static_cast<size_t>(flag.module_count()), g));
}

bool in_center(const RootSystem& rs, const FlagDecomposition& flag, const CartanVector& v) {
  for (const auto& gamma : flag.r_h)
    if (!rs.pairing(gamma, v).is_zero()) return false;
  return true;
}

CartanVector delta_h(const RootSystem& rs, const FlagDecomposition& flag, const AdaptedMetricWeights& w) {
  CartanVector d = CartanVector::zero(rs.rank());
  for (const auto& a : flag.r_n_pos) d += (1 / module_weight(flag, w, a)) * rootsys::dual_element(rs, a);
  return d;
}

// ---- HomogeneousSpace ---------------------------------------------------

HomogeneousSpace::HomogeneousSpace(RootSystem rs, FlagDecomposition flag, AdaptedMetricWeights weights,
                                   std::vector<CartanVector> fiber)
    : rs_(std::move(rs)), flag_(std::move(flag)), weights_(std::move(weights)), fiber_(std::move(fiber)) {
  weights_ = AdaptedMetricWeights::make(flag_, weights_.g);
  for (const auto& v : fiber_) {
    if (!v.imaginary) throw std::invalid_argument("fiber vectors must be imaginary (compact) Cartan elements");
    if (!in_center(rs_, flag_, v)) throw std::invalid_argument("fiber vector is not in the center of h");
  }
  require_independent(rs_, fiber_, "fiber");
  if (static_cast<int>(fiber_.size()) > flag_.center_dim)
    throw std::invalid_argument("fiber is larger than the center of h");

  using Lie = LieRealization<Gaussian>;
  std::vector<Lie::RootVector> roots;
  for (int sign : {1, -1})
    for (const auto& a : flag_.r_n_pos) {
      auto [r, c] = rs_.matrix_entry(sign * a);
      roots.push_back({r, c, Gaussian(1)});
    }
  std::vector<Matrix<Gaussian>> fm;
  for (const auto& v : fiber_) fm.push_back(cartan_matrix(rs_, v));
  lie_.emplace(std::vector<Lie::Block>{{0, rs_.matrix_size(), rs_.trace_form_scale()}}, std::move(roots),
               std::move(fm));

  const int d = dim();
  const int nr = root_count();
  gram_ = Matrix<Gaussian>(d, d);
  for (int r = 0; r < nr; ++r) {
    const Rational g = module_weight(flag_, weights_, flag_.r_n_pos[static_cast<size_t>(r)]);
    const Gaussian b = lie_->killing(lie_->basis(positive_index(r)), lie_->basis(negative_index(r)));
    gram_(positive_index(r), negative_index(r)) = Gaussian(-g) * b;
    gram_(negative_index(r), positive_index(r)) = Gaussian(-g) * b;
  }
  for (int a = 0; a < static_cast<int>(fiber_.size()); ++a) gram_(fiber_index(a), fiber_index(a)) = Gaussian(1);
  auto inv = inverse(gram_);
  if (!inv) throw std::invalid_argument("degenerate metric");
  gram_inv_ = *inv;

  if (has_complex_structure()) {
    j_ = Matrix<Gaussian>(d, d);
    for (int r = 0; r < nr; ++r) {
      j_(positive_index(r), positive_index(r)) = Gaussian::i();
      j_(negative_index(r), negative_index(r)) = -Gaussian::i();
    }
    for (int a = 0; a + 1 < static_cast<int>(fiber_.size()); a += 2) {
      j_(fiber_index(a + 1), fiber_index(a)) = Gaussian(1);
      j_(fiber_index(a), fiber_index(a + 1)) = Gaussian(-1);
    }
  }
}

Gaussian HomogeneousSpace::h(const Vec& x, const Vec& y) const { return dot(x, gram_ * y); }

const Matrix<Gaussian>& HomogeneousSpace::complex_structure() const {
  if (!has_complex_structure())
    throw std::invalid_argument("odd-dimensional fiber carries no complex structure");
  return j_;
}

Vec HomogeneousSpace::torus_part(const CartanVector& x) const {
  Vec c = lie_->m_coords(cartan_matrix(rs_, x));
  for (int p = 0; p < 2 * root_count(); ++p) c[static_cast<size_t>(p)] = Gaussian(0);
  return c;
}

// ---- connection and residual -------------------------------------------

Vec levi_civita(const HomogeneousSpace& space, int p, int q) {
  const auto& lie = space.lie();
  const auto& g = space.metric_gram();
  const int d = space.dim();
  if (p < 0 || p >= d || q < 0 || q >= d) throw std::out_of_range("basis direction out of range");
  // h(x, b_k) = (G x)_k since G is symmetric
  Vec rhs = g * lie.bracket_m(p, q);
  for (int z = 0; z < d; ++z) {
    Vec zp = g * lie.bracket_m(z, p);
    Vec zq = g * lie.bracket_m(z, q);
    rhs[static_cast<size_t>(z)] += zp[static_cast<size_t>(q)] + zq[static_cast<size_t>(p)];
  }
  Vec out = space.metric_gram_inverse() * rhs;
  const Gaussian half(Rational(1, 2));
  for (auto& x : out) x *= half;
  return out;
}

BalancedResidual balanced_residual(const HomogeneousSpace& space) {
  const auto& j = space.complex_structure();
  const auto& ginv = space.metric_gram_inverse();
  const int d = space.dim();
  BalancedResidual r;
  r.coords.assign(static_cast<size_t>(d), Gaussian(0));
  r.divergence.assign(static_cast<size_t>(d), Gaussian(0));
  // Σ_i e_i ⊗ e_i = Σ_{pq} (G⁻¹)_{pq} b_p ⊗ b_q for any basis
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      const Gaussian w = ginv(p, q);
      if (w.is_zero()) continue;
      Vec dpq = levi_civita(space, p, q);
      axpy(r.divergence, w, dpq);
      axpy(r.coords, w, j * dpq);
      // D_{J b_p} b_q, with J b_p expanded over the basis
      for (int k = 0; k < d; ++k) {
        const Gaussian jk = j(k, p);
        if (jk.is_zero()) continue;
        axpy(r.coords, -(w * jk), levi_civita(space, k, q));
      }
    }
  r.value = CartanVector::zero(space.root_system().rank(), true);
  for (int p = 0; p < 2 * space.root_count(); ++p)
    if (!r.coords[static_cast<size_t>(p)].is_zero()) throw std::logic_error("balanced residual has a component in n");
  for (size_t a = 0; a < space.fiber().size(); ++a) {
    const Gaussian& c = r.coords[static_cast<size_t>(space.fiber_index(static_cast<int>(a)))];
    if (!c.is_real()) throw std::logic_error("balanced residual is not a real element of t");
    CartanVector term = space.fiber()[a];
    term *= c.re;
    r.value += term;
  }
  return r;
}

// ---- criterion and construction ----------------------------------------

BalancedVerdict is_balanced(const RootSystem& rs, const FlagDecomposition& flag, const AdaptedMetricWeights& w,
                            int l_center_dim, const std::vector<CartanVector>& l_center_basis) {
  if (l_center_dim != static_cast<int>(l_center_basis.size()))
    throw std::invalid_argument("l_center_dim does not match the number of basis vectors");
  for (const auto& v : l_center_basis) {
    if (!v.imaginary) throw std::invalid_argument("center basis vectors must be imaginary Cartan elements");
    if (!in_center(rs, flag, v)) throw std::invalid_argument("center basis vector is not in the center of h");
  }
  require_independent(rs, l_center_basis, "center basis");
  const CartanVector d = delta_h(rs, flag, AdaptedMetricWeights::make(flag, w.g));
  const int n = l_center_dim;
  BalancedVerdict v;
  CartanVector proj = CartanVector::zero(rs.rank());
  if (n > 0) {
    Matrix<Rational> gram(n, n);
    std::vector<Rational> rhs(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        gram(a, b) = real_killing(rs, l_center_basis[static_cast<size_t>(a)], l_center_basis[static_cast<size_t>(b)]);
      rhs[static_cast<size_t>(a)] = real_killing(rs, l_center_basis[static_cast<size_t>(a)], d);
    }
    v.coords = *solve(gram, rhs);
    for (int a = 0; a < n; ++a) {
      CartanVector t = l_center_basis[static_cast<size_t>(a)];
      t.imaginary = false;
      proj += v.coords[static_cast<size_t>(a)] * t;
    }
  }
  v.remainder = d - proj;
  v.balanced = v.remainder.is_zero();
  if (!v.balanced) v.coords.clear();
  return v;
}

std::vector<CartanVector> center_complement(const RootSystem& rs, const FlagDecomposition& flag,
                                            const std::vector<CartanVector>& sub) {
  const int t = flag.center_dim;
  std::vector<CartanVector> zetas;
  for (int j = 0; j < t; ++j) zetas.push_back(rootsys::zeta(rs, flag, j));
  Matrix<Rational> m(static_cast<int>(sub.size()), t);
  for (int k = 0; k < static_cast<int>(sub.size()); ++k)
    for (int j = 0; j < t; ++j) m(k, j) = real_killing(rs, sub[static_cast<size_t>(k)], zetas[static_cast<size_t>(j)]);
  std::vector<CartanVector> out;
  for (const auto& c : nullspace(m)) {
    CartanVector v = CartanVector::zero(rs.rank());
    for (int j = 0; j < t; ++j) v += c[static_cast<size_t>(j)] * zetas[static_cast<size_t>(j)];
    v.imaginary = true;
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

constexpr long kLatticeBound = 1000000;

/// Smallest λ with λ·x in the coroot lattice, and the integer coordinates.
std::optional<LatticeCertificate> lattice_scale(const RootSystem& rs, const CartanVector& x) {
  auto y = rs.coroot_coords(x);
  Integer lambda(1);
  for (const auto& c : y) {
    Integer den = denominator(c);
    lambda = lambda / boost::multiprecision::gcd(lambda, den) * den;
    if (lambda > kLatticeBound) return std::nullopt;
  }
  LatticeCertificate cert{lambda, {}};
  for (const auto& c : y) cert.coords.push_back(numerator(c * Rational(lambda)));
  return cert;
}

CartanVector scaled_to_lattice(const RootSystem& rs, const CartanVector& x) {
  auto cert = lattice_scale(rs, x);
  if (!cert) throw NumericFailure("lattice scaling exceeds the search bound");
  CartanVector out = x;
  out *= Rational(cert->lambda);
  return out;
}

}  // namespace

BalancedConstruction construct_balanced(const RootSystem& rs, const FlagDecomposition& flag,
                                        std::optional<std::vector<Rational>> c) {
  const int t = flag.center_dim;
  const int s = flag.module_count();
  if (t < 3)
    throw std::invalid_argument("construction needs b2 = dim z >= 3, got b2 = " + std::to_string(t) +
                                " (no balanced metric arises this way for b2 <= 2)");
  BalancedConstruction out;
  out.flag = flag;
  out.n_column_sums.assign(static_cast<size_t>(t), Rational(0));
  for (const auto& row : flag.n_matrix)
    for (int j = 0; j < t; ++j) out.n_column_sums[static_cast<size_t>(j)] += row[static_cast<size_t>(j)];

  if (c) {
    if (static_cast<int>(c->size()) != t)
      throw std::invalid_argument("expected " + std::to_string(t) + " values for c, got " + std::to_string(c->size()));
    out.c = *c;
  } else {
    for (const auto& sum : out.n_column_sums) {
      Integer fl = numerator(sum) / denominator(sum);  // sums are nonnegative
      out.c.emplace_back(Rational(fl + 1));
    }
  }
  for (int j = 0; j < t; ++j)
    if (!(out.c[static_cast<size_t>(j)] > out.n_column_sums[static_cast<size_t>(j)]))
      throw std::invalid_argument("c_" + std::to_string(j + 1) + " = " + to_string(out.c[static_cast<size_t>(j)]) +
                                  " must exceed " + to_string(out.n_column_sums[static_cast<size_t>(j)]) +
                                  " (strict inequality)");

  std::vector<Rational> g(static_cast<size_t>(s), Rational(1));
  for (int j = 0; j < t; ++j)
    g[static_cast<size_t>(j)] = 1 / (out.c[static_cast<size_t>(j)] - out.n_column_sums[static_cast<size_t>(j)]);
  out.weights = AdaptedMetricWeights::make(flag, g);
  out.delta_h = delta_h(rs, flag, out.weights);

  CartanVector telescoped = CartanVector::zero(rs.rank());
  for (int j = 0; j < t; ++j) telescoped += out.c[static_cast<size_t>(j)] * rootsys::zeta(rs, flag, j);
  if (!(telescoped == out.delta_h)) throw std::logic_error("delta_h differs from the sum of c_j zeta_j");

  auto cert = lattice_scale(rs, out.delta_h);
  if (!cert) throw NumericFailure("no lattice scaling of delta_h with lambda <= 1e6");
  out.lattice = *cert;

  CartanVector gen = out.delta_h;
  gen *= Rational(out.lattice.lambda);
  gen.imaginary = true;
  out.t_tilde.push_back(gen);
  if (t % 2 == 0) {
    for (int j = 0; j < t; ++j) {
      CartanVector z = scaled_to_lattice(rs, rootsys::zeta(rs, flag, j));
      z.imaginary = true;
      std::vector<CartanVector> cand = {gen, z};
      try {
        require_independent(rs, cand, "torus");
      } catch (const std::invalid_argument&) {
        continue;
      }
      out.t_tilde.push_back(z);
      break;
    }
  }
  out.torus_dims = {static_cast<int>(out.t_tilde.size()), t - static_cast<int>(out.t_tilde.size())};
  out.fiber = center_complement(rs, flag, out.t_tilde);
  out.verdict = is_balanced(rs, flag, out.weights, static_cast<int>(out.t_tilde.size()), out.t_tilde);

  HomogeneousSpace space(rs, flag, out.weights, out.fiber);
  out.residual_zero = balanced_residual(space).is_zero();
  return out;
}

}  // namespace cel::balanced
