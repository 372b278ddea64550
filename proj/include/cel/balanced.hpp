/// @file balanced.hpp
/// @brief Adapted balanced metrics on G/L fibering over a flag manifold G/H of
/// type A, with fiber torus 𝔱 ⊂ 𝔷 (the center of 𝔥).
///
/// Cartan elements follow rootsys conventions: ζ_j and δ_h are real
/// (sums of B-duals); subspaces of 𝔷 are given by imaginary CartanVectors.
#pragma once

#include "cel/linalg.hpp"
#include "cel/rational.hpp"
#include "cel/realization.hpp"
#include "cel/rootsys.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cel::balanced {

using rootsys::CartanVector;
using rootsys::FlagDecomposition;
using rootsys::RootSystem;

/// One weight g_j > 0 per irreducible module R_j; h = −g_j·B on 𝔫_j.
struct AdaptedMetricWeights {
  std::vector<Rational> g;

  /// Throws std::invalid_argument for a size mismatch or a nonpositive weight.
  static AdaptedMetricWeights make(const FlagDecomposition& flag, std::vector<Rational> g);
  static AdaptedMetricWeights uniform(const FlagDecomposition& flag, const Rational& g = 1);
};

/// True iff B(v, H_γ) = 0 for every root γ of 𝔥.
bool in_center(const RootSystem& rs, const FlagDecomposition& flag, const CartanVector& v);

/// δ_h = Σ_{α∈R_n⁺} (1/g_α) H_α.
CartanVector delta_h(const RootSystem& rs, const FlagDecomposition& flag, const AdaptedMetricWeights& w);

/// G/L with m = 𝔱 ⊕ 𝔫, realized over Q(i). Basis of m^c: E_α (α ∈ R_n⁺, flag order),
/// then E_{−α}, then the fiber vectors t_a. Root vectors are single matrix units, so
/// B(E_α, E_{−α}) = trace_form_scale. The fiber vectors are declared h-orthonormal.
class HomogeneousSpace {
 public:
  using Vec = std::vector<Gaussian>;

  /// `fiber` spans 𝔱: imaginary CartanVectors in 𝔷, linearly independent.
  /// Throws std::invalid_argument otherwise.
  HomogeneousSpace(RootSystem rs, FlagDecomposition flag, AdaptedMetricWeights weights,
                   std::vector<CartanVector> fiber);

  const RootSystem& root_system() const { return rs_; }
  const FlagDecomposition& flag() const { return flag_; }
  const AdaptedMetricWeights& weights() const { return weights_; }
  const std::vector<CartanVector>& fiber() const { return fiber_; }
  const LieRealization<Gaussian>& lie() const { return *lie_; }

  int dim() const { return lie_->dim(); }
  int root_count() const { return static_cast<int>(flag_.r_n_pos.size()); }
  int positive_index(int r) const { return r; }
  int negative_index(int r) const { return root_count() + r; }
  int fiber_index(int a) const { return 2 * root_count() + a; }
  bool is_fiber(int p) const { return p >= 2 * root_count(); }

  const Matrix<Gaussian>& metric_gram() const { return gram_; }
  const Matrix<Gaussian>& metric_gram_inverse() const { return gram_inv_; }
  Gaussian h(const Vec& x, const Vec& y) const;

  /// J on m^c: ±√−1 on E_{±α}, t_{2k} ↦ t_{2k+1} ↦ −t_{2k} on the fiber.
  /// Throws std::invalid_argument when the fiber is odd-dimensional.
  const Matrix<Gaussian>& complex_structure() const;
  bool has_complex_structure() const { return fiber_.size() % 2 == 0; }

  /// B-projection of a Cartan element onto 𝔱^c, as m^c coordinates.
  Vec torus_part(const CartanVector& x) const;

  Vec unit(int p) const { return lie_->unit(p); }

 private:
  RootSystem rs_;
  FlagDecomposition flag_;
  AdaptedMetricWeights weights_;
  std::vector<CartanVector> fiber_;
  std::optional<LieRealization<Gaussian>> lie_;
  Matrix<Gaussian> gram_;
  Matrix<Gaussian> gram_inv_;
  Matrix<Gaussian> j_;
};

/// D_{b_p} b_q from 2h(D_v w, z) = h([v,w]_m, z) + h([z,v]_m, w) + h([z,w]_m, v).
HomogeneousSpace::Vec levi_civita(const HomogeneousSpace& space, int p, int q);

struct BalancedResidual {
  /// Σ_i J D_{e_i}e_i − D_{Je_i}e_i over an orthonormal frame, in m^c coordinates.
  HomogeneousSpace::Vec coords;
  /// The same vector as an element of 𝔱 (imaginary CartanVector).
  CartanVector value;
  /// Σ_i D_{e_i}e_i, which vanishes identically.
  HomogeneousSpace::Vec divergence;
  bool is_zero() const { return value.is_zero(); }
};

BalancedResidual balanced_residual(const HomogeneousSpace& space);

struct BalancedVerdict {
  bool balanced = false;
  /// δ_h = Σ coords_k · (basis_k / √−1) when balanced.
  std::vector<Rational> coords;
  /// δ_h minus its B-projection onto the span; zero iff balanced.
  CartanVector remainder;
};

/// √−1·δ_h ∈ span(l_center_basis)? The basis must consist of imaginary vectors in 𝔷 and
/// have l_center_dim independent elements. Throws std::invalid_argument otherwise.
BalancedVerdict is_balanced(const RootSystem& rs, const FlagDecomposition& flag, const AdaptedMetricWeights& w,
                            int l_center_dim, const std::vector<CartanVector>& l_center_basis);

/// B-orthogonal complement of span(sub) inside 𝔷, as imaginary vectors in the ζ basis.
std::vector<CartanVector> center_complement(const RootSystem& rs, const FlagDecomposition& flag,
                                            const std::vector<CartanVector>& sub);

struct LatticeCertificate {
  Integer lambda;               // λ·(√−1 δ_h) lies in the lattice
  std::vector<Integer> coords;  // integer coroot coordinates of λ·δ_h
};

struct BalancedConstruction {
  FlagDecomposition flag;
  std::vector<Rational> c;
  std::vector<Rational> n_column_sums;  // Σ_{k>t} n_kj
  AdaptedMetricWeights weights;
  CartanVector delta_h;
  LatticeCertificate lattice;
  std::vector<CartanVector> t_tilde;  // Lie algebra of the central torus of L
  std::vector<CartanVector> fiber;    // its B-complement in 𝔷
  std::pair<int, int> torus_dims;     // (dim T̃, codim in Z(H))
  BalancedVerdict verdict;
  bool residual_zero = false;
};

/// Requires center_dim ≥ 3 and c_j > Σ_{k>t} n_kj; default c_j = ⌊Σ_{k>t} n_kj⌋ + 1.
/// Throws std::invalid_argument on a violated hypothesis, NumericFailure when the
/// lattice search exceeds λ ≤ 10⁶.
BalancedConstruction construct_balanced(const RootSystem& rs, const FlagDecomposition& flag,
                                        std::optional<std::vector<Rational>> c = std::nullopt);

}  // namespace cel::balanced
