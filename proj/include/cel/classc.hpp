/// @file classc.hpp
/// @brief Invariant Hermitian geometry on products M = G₁/H₁ × G₂/H₂ of two
/// M-manifolds over irreducible Hermitian symmetric spaces, with the
/// two-parameter family of complex structures J_t(a, b) on the torus part.
///
/// Closed forms (second/first Chern-Ricci, SKT and ∂∂̄ obstructions) live next
/// to a concrete matrix realization, ClassCModel, which builds the Chern
/// connection from its defining conditions and traces the curvature directly.
/// The realization uses the projective-space pairs SU(n_i+1)/S(U(1)×U(n_i)).
#pragma once

#include "cel/linalg.hpp"
#include "cel/rational.hpp"
#include "cel/realization.hpp"
#include "cel/rootsys.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace cel::classc {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using CMat = Matrix<cplx>;

struct ClassCParams {
  int n1 = 1;
  int n2 = 1;
  Rational a{0};
  Rational b{1};

  /// Validates n1, n2 ≥ 1 and b ≠ 0; throws std::invalid_argument otherwise.
  static ClassCParams make(int n1, int n2, Rational a, Rational b);

  /// (1 + a²) / b²
  Rational kappa() const { return (1 + a * a) / (b * b); }
  double kappa_value() const { return to_double(kappa()); }
  bool is_standard() const { return a == 0 && b == 1; }
};

/// h(E_α, Ē_α) = g_i on 𝔫_i, h(H, H̄) = h0 with H = Z₁ − √−1 J Z₁.
struct InvariantMetric {
  double g1 = 1.0;
  double g2 = 1.0;
  double h0 = 1.0;

  double h_z1z1() const { return h0 / 2; }
  double h_z2z2(const ClassCParams& p) const { return p.kappa_value() * h0 / 2; }
  bool is_positive() const { return g1 > 0 && g2 > 0 && h0 > 0; }
};

struct ExactMetric {
  Rational g1{1};
  Rational g2{1};
  Rational h0{1};
};

void require_positive(const InvariantMetric& m);

/// S(E_β, Ē_β) on 𝔫₁, on 𝔫₂, and S(H, H̄).
template <class S>
struct RicciValues {
  S s_n1{};
  S s_n2{};
  S s_t{};
};
using RicciData = RicciValues<double>;

/// Closed forms of the second Chern-Ricci tensor on the adapted family.
template <class S>
RicciValues<S> second_ricci_formula(int n1, int n2, const S& kappa, const S& g1, const S& g2, const S& h0) {
  const S one(1);
  const S half = one / S(2);
  const S sixteen(16);
  const S nn1(n1);
  const S nn2(n2);
  RicciValues<S> r;
  r.s_n1 = half - h0 / (sixteen * g1 * nn1 * nn1);
  r.s_n2 = half - kappa * h0 / (sixteen * g2 * nn2 * nn2);
  r.s_t = h0 * h0 / sixteen * (one / (g1 * g1 * nn1) + kappa / (g2 * g2 * nn2));
  return r;
}

RicciData second_ricci(const ClassCParams& p, const InvariantMetric& m);
RicciValues<Rational> second_ricci(const ClassCParams& p, const ExactMetric& m);

/// ρ(E_α, Ē_α) = ½ on both blocks and ρ(H, H̄) = 0; metric independent.
RicciData first_ricci(const ClassCParams& p);

struct StructureSummary {
  Matrix<Rational> j_t;  // columns: J Z₁, J Z₂ in the basis {Z₁, Z₂}
  Rational kappa;
  bool squares_to_minus_identity = false;
  double nijenhuis_residual = 0.0;  // max |N_J(b_p, b_q)| over the realized basis
};

/// Throws std::invalid_argument for b = 0.
StructureSummary validate_structure(const ClassCParams& p);

// ---- concrete realization ---------------------------------------------

/// Basis direction of m^c = 𝔫₁^c ⊕ 𝔫₂^c ⊕ 𝔱^c.
struct Direction {
  enum class Kind { Root, NegRoot, H, HBar };
  Kind kind = Kind::H;
  int block = 0;  // 0 or 1 for root directions
  int root = 0;   // index into the block's positive complementary roots

  static Direction e(int block, int root) { return {Kind::Root, block, root}; }
  static Direction e_neg(int block, int root) { return {Kind::NegRoot, block, root}; }
  static Direction h() { return {Kind::H, 0, 0}; }
  static Direction h_bar() { return {Kind::HBar, 0, 0}; }
};

class ClassCModel {
 public:
  ClassCModel(const ClassCParams& params, const InvariantMetric& metric);

  const ClassCParams& params() const { return params_; }
  const InvariantMetric& metric() const { return metric_; }
  const LieRealization<cplx>& lie() const { return lie_; }
  const rootsys::HermitianSymmetricPair& pair(int block) const { return pairs_[static_cast<size_t>(block)]; }

  int dim() const { return lie_.dim(); }
  int n(int block) const { return block == 0 ? params_.n1 : params_.n2; }
  /// Throws std::out_of_range for an unrealized direction.
  int index(const Direction& d) const;
  int h_index() const { return 2 * (params_.n1 + params_.n2); }
  int h_bar_index() const { return h_index() + 1; }
  bool holomorphic(int p) const;
  const std::vector<int>& holomorphic_indices() const { return hol_; }
  const std::vector<int>& antiholomorphic_indices() const { return antihol_; }
  int block_of(int p) const;

  /// Conjugation with respect to the compact real form (Ē_α = −E_{−α}).
  CVec conj(const CVec& x) const;
  /// Complex-bilinear extension of h on the basis.
  const CMat& metric_gram() const { return h_; }
  cplx h(const CVec& x, const CVec& y) const;
  const CMat& complex_structure() const { return j_; }
  /// Z_i in basis coordinates (it lies in 𝔱^c).
  const CVec& z(int block) const { return z_[static_cast<size_t>(block)]; }
  const CMat& z_matrix(int block) const { return z_mat_[static_cast<size_t>(block)]; }
  /// α(v) for a positive root direction of `block` and v ∈ 𝔱^c in basis coordinates.
  cplx root_on_torus(int block, const CVec& v) const;
  CVec to_z_coords(cplx h_coeff, cplx h_bar_coeff) const;
  CVec from_z_coords(cplx z1, cplx z2) const;
  /// m-component of the B-dual of the positive root (block, root).
  CVec h_alpha_m(int block, int root) const;

  CVec unit(int p) const { return lie_.unit(p); }

 private:
  ClassCParams params_;
  InvariantMetric metric_;
  std::vector<rootsys::HermitianSymmetricPair> pairs_;
  std::vector<CMat> z_mat_;  // filled while building lie_
  LieRealization<cplx> lie_;
  std::vector<int> hol_;
  std::vector<int> antihol_;
  CMat h_;
  CMat j_;
  std::vector<CVec> z_;
};

/// Λ ∈ Hom(m^c, End(m^c)) of the Chern connection, one dim × dim matrix per
/// basis direction (column w of Λ(v) is Λ(v) b_w).
class ChernConnectionTable {
 public:
  /// Builds Λ from ∇h = 0, ∇J = 0 and T(m^{10}, m^{01}) = 0, using only brackets,
  /// J and h of the realization.
  static ChernConnectionTable from_torsion(const ClassCModel& model);
  /// Builds Λ from the closed-form description on root vectors and 𝔱^c
  /// (Λ(v) = ad(v) on 𝔱^c, Λ(E_α)E_{−α} = −√−1/(2n_i) Z_i^{01}, …), with Λ(Ē) = conj ∘ Λ(E) ∘ conj.
  static ChernConnectionTable closed_form(const ClassCModel& model);

  const ClassCModel& model() const { return *model_; }
  const CMat& lambda(int p) const { return lambda_[static_cast<size_t>(p)]; }
  /// Λ(v) applied to a coordinate vector, v a coordinate vector.
  CVec apply(const CVec& v, const CVec& w) const;
  CVec apply(const Direction& v, const Direction& w) const;

  /// R(b_p, b_q) = [Λ(b_p), Λ(b_q)] − Λ([b_p, b_q]_m) − ad([b_p, b_q]_l) on m^c.
  CMat curvature(int p, int q) const;
  CMat curvature(const CVec& v, const CVec& w) const;
  CVec curvature_apply(const Direction& v, const Direction& w, const Direction& x) const;

  /// T(b_p, b_q) = Λ(b_p)b_q − Λ(b_q)b_p − [b_p, b_q]_m.
  CVec torsion(int p, int q) const;

 private:
  explicit ChernConnectionTable(const ClassCModel& model) : model_(&model) {}
  const ClassCModel* model_;
  std::vector<CMat> lambda_;
};

/// Λ(v)w through the closed-form table. Throws std::out_of_range for an unrealized direction.
CVec lambda_apply(const ChernConnectionTable& table, const Direction& v, const Direction& w);
CVec curvature_apply(const ChernConnectionTable& table, const Direction& v, const Direction& w, const Direction& x);

/// Traces the curvature of the torsion-built Chern connection over the
/// unitary frame {E_α/√g_i, H/√h0}.
RicciData oracle_second_ricci(const ClassCParams& p, const InvariantMetric& m);
/// Endomorphism trace of R(X, X̄) over m^{10}.
RicciData oracle_first_ricci(const ClassCParams& p, const InvariantMetric& m);

/// Full second Ricci form S(b_p, conj b_q) on m^{10} (rows/cols: holomorphic indices).
CMat oracle_second_ricci_form(const ChernConnectionTable& table);

// ---- obstructions -----------------------------------------------------

struct ObstructionReport {
  enum class Kind { Skt, DDbar };
  Kind kind = Kind::Skt;
  std::string witness;
  cplx value;                 // closed-form value
  std::optional<cplx> realized;  // the same quantity evaluated in the matrix realization
  std::optional<Rational> exact;  // real exact value when inputs are rational
};

/// dd^cω(E_α, E_{−α}, E_β, E_{−β}) = 2h((H_α)_m, (H_β)_m) = −h0/(4n₁²) for α, β ∈ R_{𝔫₁}⁺.
/// Throws std::invalid_argument unless both directions are positive roots of block 0.
ObstructionReport skt_obstruction(const ClassCParams& p, const InvariantMetric& m, const Direction& alpha,
                                  const Direction& beta);
Rational skt_obstruction_value(int n1, const Rational& h0);

/// ω = dξ* with ξ = xi1·Z₁ + xi2·Z₂, evaluated on (E_α, E_{−α}) for the first
/// positive root α with α(ξ) ≠ 0. Throws std::invalid_argument for ξ = 0.
ObstructionReport ddbar_witness(const ClassCParams& p, double xi1, double xi2);
/// ω(E_α, E_{−α}) = −α(ξ)·B(E_α, E_{−α}) for a chosen positive root direction.
cplx ddbar_form_value(const ClassCParams& p, double xi1, double xi2, const Direction& alpha);
/// max |ω(JX, JY) − ω(X, Y)| over basis pairs of the realization.
double ddbar_type_residual(const ClassCParams& p, double xi1, double xi2);

}  // namespace cel::classc
