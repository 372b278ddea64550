/// @file rootsys.cpp
#include "cel/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace cel::rootsys {

// ---- Root ---------------------------------------------------------------

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
  return r;
}

Root operator-(const Root& a, const Root& b) {
  Root r = a;
  for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
  return r;
}

Root operator-(const Root& a) { return -1 * a; }

Root operator*(int k, const Root& a) {
  Root r = a;
  for (int& c : r.coeffs) c *= k;
  return r;
}

// ---- CartanVector -------------------------------------------------------

bool CartanVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

namespace {

void align_flags(CartanVector& a, const CartanVector& b) {
  if (a.imaginary == b.imaginary || b.is_zero()) return;
  if (a.is_zero()) {
    a.imaginary = b.imaginary;
    return;
  }
  throw std::invalid_argument("cannot add a real and an imaginary Cartan element");
}

}  // namespace

CartanVector& CartanVector::operator+=(const CartanVector& o) {
  align_flags(*this, o);
  for (size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

CartanVector& CartanVector::operator-=(const CartanVector& o) {
  align_flags(*this, o);
  for (size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

CartanVector& CartanVector::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

CartanVector times_i(CartanVector v) {
  if (v.imaginary) {
    v *= Rational(-1);
    v.imaginary = false;
  } else {
    v.imaginary = true;
  }
  return v;
}

// ---- RootSystem ---------------------------------------------------------

RootSystem RootSystem::type_a(int rank) {
  if (rank < 1) throw std::invalid_argument("type A rank must be >= 1, got " + std::to_string(rank));
  RootSystem rs;
  rs.rank_ = rank;
  const int n = rank + 1;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Root r{std::vector<int>(static_cast<size_t>(rank), 0)};
      for (int k = i; k < j; ++k) r.coeffs[static_cast<size_t>(k)] = 1;
      rs.positive_.push_back(std::move(r));
    }
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs > b.coeffs;
  });
  rs.roots_ = rs.positive_;
  for (const auto& r : rs.positive_) rs.roots_.push_back(-r);

  rs.cartan_ = Matrix<Rational>(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.cartan_(i, j) = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);

  // Coroot h_a = E_aa − E_{a+1,a+1}; ad(h_a) acts on E_ij by (h_a)_ii − (h_a)_jj and
  // kills the Cartan, so tr(ad h_a ∘ ad h_b) is a sum over ordered pairs i ≠ j.
  auto coroot_diag = [n](int a, int i) { return i == a ? 1 : (i == a + 1 ? -1 : 0); };
  Matrix<Rational> b_coroot(rank, rank);
  Matrix<Rational> tr_coroot(rank, rank);
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) {
      long sum = 0;
      long tr = 0;
      for (int i = 0; i < n; ++i) {
        tr += coroot_diag(a, i) * coroot_diag(b, i);
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          sum += (coroot_diag(a, i) - coroot_diag(a, j)) * (coroot_diag(b, i) - coroot_diag(b, j));
        }
      }
      b_coroot(a, b) = sum;
      tr_coroot(a, b) = tr;
    }
  rs.trace_scale_ = b_coroot(0, 0) / tr_coroot(0, 0);
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      if (b_coroot(a, b) != rs.trace_scale_ * tr_coroot(a, b))
        throw std::logic_error("adjoint trace form is not proportional to the matrix trace form");

  // B(H_{α_k}, h_a) = α_k(h_a) = A(a, k).
  auto b_inv = inverse(b_coroot);
  if (!b_inv) throw std::logic_error("degenerate Killing form on the Cartan subalgebra");
  rs.duals_in_coroots_ = (*b_inv) * rs.cartan_;
  rs.gram_ = rs.cartan_.transpose() * rs.duals_in_coroots_;
  rs.gram_inv_ = *inverse(rs.gram_);
  rs.coroots_in_duals_ = *inverse(rs.duals_in_coroots_);
  return rs;
}

bool RootSystem::is_root(const Root& r) const { return root_index(r).has_value(); }

std::optional<size_t> RootSystem::root_index(const Root& r) const {
  if (static_cast<int>(r.size()) != rank_) return std::nullopt;
  auto it = std::find(roots_.begin(), roots_.end(), r);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<size_t>(it - roots_.begin());
}

Root RootSystem::simple_root(int label) const {
  if (label < 1 || label > rank_)
    throw std::invalid_argument("simple root label out of range: " + std::to_string(label));
  Root r{std::vector<int>(static_cast<size_t>(rank_), 0)};
  r.coeffs[static_cast<size_t>(label - 1)] = 1;
  return r;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a[static_cast<size_t>(i)] != 0 && b[static_cast<size_t>(j)] != 0)
        s += Rational(a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) * gram_(i, j);
  return s;
}

Gaussian RootSystem::pairing(const Root& a, const CartanVector& x) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += Rational(a[static_cast<size_t>(i)]) * gram_(i, j) * x.coords[static_cast<size_t>(j)];
  }
  return x.imaginary ? Gaussian(Rational(0), s) : Gaussian(s);
}

Gaussian RootSystem::killing(const CartanVector& x, const CartanVector& y) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += x.coords[static_cast<size_t>(i)] * gram_(i, j) * y.coords[static_cast<size_t>(j)];
  if (x.imaginary && y.imaginary) return Gaussian(-s);
  if (x.imaginary || y.imaginary) return Gaussian(Rational(0), s);
  return Gaussian(s);
}

std::pair<int, int> RootSystem::matrix_entry(const Root& a) const {
  if (!is_root(a)) throw std::invalid_argument("not a root");
  int first = -1;
  int last = -1;
  for (int k = 0; k < rank_; ++k)
    if (a[static_cast<size_t>(k)] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  // e_first − e_{last+1} for positive roots
  if (a[static_cast<size_t>(first)] > 0) return {first, last + 1};
  return {last + 1, first};
}

std::vector<Rational> RootSystem::coroot_coords(const CartanVector& x) const {
  return duals_in_coroots_ * x.coords;
}

std::vector<Rational> RootSystem::diagonal(const CartanVector& x) const {
  auto y = coroot_coords(x);
  std::vector<Rational> d(static_cast<size_t>(rank_ + 1));
  for (int k = 0; k <= rank_; ++k) {
    if (k < rank_) d[static_cast<size_t>(k)] += y[static_cast<size_t>(k)];
    if (k > 0) d[static_cast<size_t>(k)] -= y[static_cast<size_t>(k - 1)];
  }
  return d;
}

CartanVector RootSystem::from_diagonal(const std::vector<Rational>& diag, bool imaginary) const {
  if (static_cast<int>(diag.size()) != rank_ + 1)
    throw std::invalid_argument("diagonal has the wrong size");
  Rational total(0);
  for (const auto& d : diag) total += d;
  if (total != 0) throw std::invalid_argument("diagonal is not traceless");
  std::vector<Rational> y(static_cast<size_t>(rank_));
  Rational running(0);
  for (int k = 0; k < rank_; ++k) {
    running += diag[static_cast<size_t>(k)];
    y[static_cast<size_t>(k)] = running;
  }
  return {coroots_in_duals_ * y, imaginary};
}

// ---- free operations ----------------------------------------------------

CartanVector dual_element(const RootSystem& rs, const Root& alpha) {
  if (!rs.is_root(alpha)) throw std::invalid_argument("dual_element: argument is not a root");
  CartanVector v = CartanVector::zero(rs.rank());
  for (int k = 0; k < rs.rank(); ++k) v.coords[static_cast<size_t>(k)] = alpha[static_cast<size_t>(k)];
  return v;
}

std::optional<int> FlagDecomposition::module_of(const Root& a) const {
  for (size_t j = 0; j < modules.size(); ++j)
    if (std::find(modules[j].begin(), modules[j].end(), a) != modules[j].end()) return static_cast<int>(j);
  return std::nullopt;
}

FlagDecomposition flag_decompose(const RootSystem& rs, std::vector<int> painted) {
  if (painted.empty()) throw std::invalid_argument("painted set is empty: no fibration over a flag");
  std::sort(painted.begin(), painted.end());
  painted.erase(std::unique(painted.begin(), painted.end()), painted.end());
  for (int p : painted)
    if (p < 1 || p > rs.rank())
      throw std::invalid_argument("painted node out of range: " + std::to_string(p));

  FlagDecomposition f;
  f.painted = painted;
  f.center_dim = static_cast<int>(painted.size());

  auto restriction = [&](const Root& r) {
    std::vector<int> c;
    for (int p : painted) c.push_back(r[static_cast<size_t>(p - 1)]);
    return c;
  };
  auto is_zero = [](const std::vector<int>& c) {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
  };

  for (const auto& r : rs.roots())
    if (is_zero(restriction(r))) f.r_h.push_back(r);

  std::map<std::vector<int>, std::vector<Root>> classes;
  for (const auto& r : rs.positive_roots()) {
    auto c = restriction(r);
    if (is_zero(c)) continue;
    f.r_n_pos.push_back(r);
    classes[c].push_back(r);
  }

  std::vector<std::vector<int>> order;
  for (size_t j = 0; j < painted.size(); ++j) {
    std::vector<int> unit(painted.size(), 0);
    unit[j] = 1;
    order.push_back(unit);
  }
  std::vector<std::vector<int>> rest;
  for (const auto& [c, _] : classes)
    if (std::find(order.begin(), order.end(), c) == order.end()) rest.push_back(c);
  std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  order.insert(order.end(), rest.begin(), rest.end());
  for (const auto& c : order) {
    f.t_roots.push_back(c);
    f.modules.push_back(classes.at(c));
  }

  const int t = f.center_dim;
  const int s = f.module_count();
  std::vector<CartanVector> zetas;
  for (int j = 0; j < s; ++j) zetas.push_back(zeta(rs, f, j));
  Matrix<Rational> gram(t, t);
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) gram(a, b) = rs.killing(zetas[static_cast<size_t>(a)], zetas[static_cast<size_t>(b)]).re;
  auto gram_inv = inverse(gram);
  if (!gram_inv) throw std::logic_error("painted-simple ζ's are linearly dependent");
  for (int k = t; k < s; ++k) {
    std::vector<Rational> rhs(static_cast<size_t>(t));
    for (int a = 0; a < t; ++a)
      rhs[static_cast<size_t>(a)] = rs.killing(zetas[static_cast<size_t>(a)], zetas[static_cast<size_t>(k)]).re;
    auto coeffs = (*gram_inv) * rhs;
    CartanVector rebuilt = CartanVector::zero(rs.rank());
    for (int j = 0; j < t; ++j) rebuilt += coeffs[static_cast<size_t>(j)] * zetas[static_cast<size_t>(j)];
    if (!(rebuilt == zetas[static_cast<size_t>(k)]))
      throw std::logic_error("ζ of a non-simple module is outside the span of the simple ζ's");
    f.n_matrix.push_back(std::move(coeffs));
  }
  return f;
}

HermitianSymmetricPair hermitian_symmetric_pair(int rank, int node) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (node < 1 || node > rank)
    throw std::invalid_argument("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank));
  HermitianSymmetricPair pair{RootSystem::type_a(rank), {}, {}, 0};
  pair.flag = flag_decompose(pair.rs, {node});
  for (const auto& a : pair.flag.r_n_pos)
    for (const auto& b : pair.flag.r_n_pos)
      if (pair.rs.is_root(a + b)) throw std::logic_error("complement of the symmetric pair is not abelian");

  // Z = √−1 Σ c_k H_{α_k} with α_j(Z) = √−1 δ_{j,node}, i.e. c = G⁻¹ e_node.
  const auto& g = pair.rs.killing_gram();
  auto g_inv = *inverse(g);
  pair.z = CartanVector{g_inv.column(node - 1), true};
  pair.n_dim = static_cast<int>(pair.flag.r_n_pos.size());
  return pair;
}

GammaString gamma_string(const RootSystem& rs, const Root& beta, const Root& gamma) {
  if (!rs.is_root(beta) || !rs.is_root(gamma)) throw std::invalid_argument("gamma_string: arguments must be roots");
  if (gamma == beta || gamma == -beta) throw std::invalid_argument("gamma_string: γ = ±β");
  GammaString s;
  while (rs.is_root(beta + (s.q + 1) * gamma)) ++s.q;
  while (rs.is_root(beta + (s.p - 1) * gamma)) --s.p;
  // root strings are unbroken; anything beyond the extremes would contradict that
  const int reach = 2 * rs.rank() + 2;
  for (int k = -reach; k <= reach; ++k)
    if ((k < s.p || k > s.q) && rs.is_root(beta + k * gamma))
      throw std::logic_error("broken root string");
  return s;
}

CartanVector zeta(const RootSystem& rs, const FlagDecomposition& flag, int j) {
  if (j < 0 || j >= flag.module_count())
    throw std::invalid_argument("module index out of range: " + std::to_string(j));
  CartanVector z = CartanVector::zero(rs.rank());
  for (const auto& a : flag.modules[static_cast<size_t>(j)]) z += dual_element(rs, a);
  return z;
}

CartanVector koszul_delta(const RootSystem& rs, const FlagDecomposition& flag) {
  CartanVector d = CartanVector::zero(rs.rank());
  for (const auto& a : flag.r_n_pos) d += dual_element(rs, a);
  d *= Rational(1, 2);
  return d;
}

}  // namespace cel::rootsys
