/// @file rootsys.hpp
/// @brief Exact root-system engine for type-A simple Lie algebras.
///
/// Cartan elements are stored in the basis of B-duals {H_{α_1}, …, H_{α_r}} of
/// the simple roots, so the dual of a root is just its simple-root coordinate
/// vector. B is the trace form of the adjoint representation; it is computed
/// from the ad-action of the coroots on the root vectors of sl(N), N = rank+1,
/// realized as N×N matrices (root e_i − e_j ↔ matrix unit E_ij).
#pragma once

#include "cel/linalg.hpp"
#include "cel/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cel::rootsys {

/// Integer coefficients over the simple roots.
struct Root {
  std::vector<int> coeffs;

  size_t size() const { return coeffs.size(); }
  int operator[](size_t k) const { return coeffs[k]; }
  int height() const;
  bool is_positive() const;  // nonzero with nonnegative coefficients

  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator-(const Root& a);
  friend Root operator*(int k, const Root& a);
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Σ coords_k H_{α_k}, multiplied by √−1 when `imaginary` is set.
struct CartanVector {
  std::vector<Rational> coords;
  bool imaginary = false;

  static CartanVector zero(int rank, bool imaginary = false) {
    return {std::vector<Rational>(static_cast<size_t>(rank)), imaginary};
  }
  bool is_zero() const;

  CartanVector& operator+=(const CartanVector& o);
  CartanVector& operator-=(const CartanVector& o);
  CartanVector& operator*=(const Rational& s);
  friend CartanVector operator+(CartanVector a, const CartanVector& b) { return a += b; }
  friend CartanVector operator-(CartanVector a, const CartanVector& b) { return a -= b; }
  friend CartanVector operator*(const Rational& s, CartanVector a) { return a *= s; }
  friend bool operator==(const CartanVector&, const CartanVector&) = default;
};

/// Multiplies by √−1 (flips the flag and the sign when it was already set).
CartanVector times_i(CartanVector v);

class RootSystem {
 public:
  /// Type A_rank. Throws std::invalid_argument for rank < 1.
  static RootSystem type_a(int rank);

  int rank() const { return rank_; }
  /// Size N of the defining representation.
  int matrix_size() const { return rank_ + 1; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Matrix<Rational>& cartan_matrix() const { return cartan_; }
  /// killing_gram()(i,j) = B(H_{α_i}, H_{α_j}) = (α_i, α_j).
  const Matrix<Rational>& killing_gram() const { return gram_; }
  /// B(X, Y) = trace_form_scale() · tr(XY) in the defining representation.
  const Rational& trace_form_scale() const { return trace_scale_; }

  bool is_root(const Root& r) const;
  std::optional<size_t> root_index(const Root& r) const;
  Root simple_root(int label) const;  // 1-based label

  /// (α, β) = B(H_α, H_β).
  Rational inner(const Root& a, const Root& b) const;
  /// α(X), exact in Q(i).
  Gaussian pairing(const Root& a, const CartanVector& x) const;
  /// B(X, Y), exact in Q(i).
  Gaussian killing(const CartanVector& x, const CartanVector& y) const;

  /// (row, col) of the matrix unit realizing the root vector E_α.
  std::pair<int, int> matrix_entry(const Root& a) const;
  /// Diagonal of Σ coords_k H_{α_k} in the defining representation (without the √−1).
  std::vector<Rational> diagonal(const CartanVector& x) const;
  /// Inverse of diagonal(): a traceless real diagonal → Cartan coordinates.
  CartanVector from_diagonal(const std::vector<Rational>& diag, bool imaginary = false) const;
  /// Coordinates of Σ coords_k H_{α_k} over the coroots h_k = E_kk − E_{k+1,k+1}.
  std::vector<Rational> coroot_coords(const CartanVector& x) const;

 private:
  int rank_ = 0;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  Matrix<Rational> cartan_;
  Matrix<Rational> gram_;
  Matrix<Rational> gram_inv_;
  // column k: H_{α_k} over the coroot basis
  Matrix<Rational> duals_in_coroots_;
  Matrix<Rational> coroots_in_duals_;
  Rational trace_scale_;
};

/// H_α, the B-dual of α. Throws std::invalid_argument if α is not a root.
CartanVector dual_element(const RootSystem& rs, const Root& alpha);

/// Painted-node (1-based) decomposition of the positive roots.
struct FlagDecomposition {
  std::vector<int> painted;
  std::vector<Root> r_h;      // roots of h, both signs
  std::vector<Root> r_n_pos;  // positive complementary roots
  int center_dim = 0;         // t
  /// R_1 … R_s; module j < t contains the j-th painted simple root.
  std::vector<std::vector<Root>> modules;
  /// Restriction of each module to the center: coefficients over the painted simple roots.
  std::vector<std::vector<int>> t_roots;
  /// Row k − t for each module k ≥ t: ζ_k = Σ_j n(k−t, j) ζ_j.
  std::vector<std::vector<Rational>> n_matrix;

  int module_count() const { return static_cast<int>(modules.size()); }
  /// Module containing a positive complementary root, or nullopt.
  std::optional<int> module_of(const Root& a) const;
};

/// Throws std::invalid_argument for an empty or out-of-range painted set.
FlagDecomposition flag_decompose(const RootSystem& rs, std::vector<int> painted);

struct HermitianSymmetricPair {
  RootSystem rs;
  FlagDecomposition flag;
  CartanVector z;  // imaginary; α(Z) = √−1 on r_n_pos
  int n_dim = 0;
};

/// Grassmannian pair SU(N)/S(U(node)×U(N−node)), node 1-based.
HermitianSymmetricPair hermitian_symmetric_pair(int rank, int node);

struct GammaString {
  int p = 0;  // ≤ 0
  int q = 0;  // ≥ 0
};

/// Maximal string β + kγ ⊆ R, p ≤ k ≤ q. Throws for γ = ±β or non-roots.
GammaString gamma_string(const RootSystem& rs, const Root& beta, const Root& gamma);

/// ζ_j = Σ_{α∈R_j} H_α (module index 0-based).
CartanVector zeta(const RootSystem& rs, const FlagDecomposition& flag, int j);

/// δ_κ = ½ Σ_{α∈R_n⁺} H_α.
CartanVector koszul_delta(const RootSystem& rs, const FlagDecomposition& flag);

}  // namespace cel::rootsys
