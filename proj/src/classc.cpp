/// @file classc.cpp
#include "cel/classc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cel::classc {

namespace {

constexpr cplx kI{0.0, 1.0};

double max_abs(const CVec& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

CVec scaled(const CVec& v, cplx s) {
  CVec out = v;
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace

ClassCParams ClassCParams::make(int n1, int n2, Rational a, Rational b) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("n1 and n2 must be >= 1 (got " + std::to_string(n1) + ", " + std::to_string(n2) + ")");
  if (b == 0) throw std::invalid_argument("b must be nonzero");
  return {n1, n2, std::move(a), std::move(b)};
}

void require_positive(const InvariantMetric& m) {
  if (!(m.g1 > 0)) throw std::invalid_argument("metric coefficient g1 must be positive");
  if (!(m.g2 > 0)) throw std::invalid_argument("metric coefficient g2 must be positive");
  if (!(m.h0 > 0)) throw std::invalid_argument("metric coefficient h0 must be positive");
}

RicciData second_ricci(const ClassCParams& p, const InvariantMetric& m) {
  require_positive(m);
  return second_ricci_formula<double>(p.n1, p.n2, p.kappa_value(), m.g1, m.g2, m.h0);
}

RicciValues<Rational> second_ricci(const ClassCParams& p, const ExactMetric& m) {
  if (m.g1 <= 0 || m.g2 <= 0 || m.h0 <= 0) throw std::invalid_argument("metric coefficients must be positive");
  return second_ricci_formula<Rational>(p.n1, p.n2, p.kappa(), m.g1, m.g2, m.h0);
}

RicciData first_ricci(const ClassCParams&) { return {0.5, 0.5, 0.0}; }

StructureSummary validate_structure(const ClassCParams& p) {
  if (p.b == 0) throw std::invalid_argument("b must be nonzero");
  StructureSummary s;
  s.j_t = Matrix<Rational>(2, 2);
  s.j_t(0, 0) = p.a;
  s.j_t(0, 1) = (-1 - p.a * p.a) / p.b;
  s.j_t(1, 0) = p.b;
  s.j_t(1, 1) = -p.a;
  s.kappa = p.kappa();
  s.squares_to_minus_identity = s.j_t * s.j_t == Matrix<Rational>::identity(2) * Rational(-1);

  ClassCModel model(p, InvariantMetric{});
  const auto& lie = model.lie();
  const CMat& j = model.complex_structure();
  const int d = model.dim();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      CVec jx = j.column(x);
      CVec jy = j.column(y);
      CVec ex = model.unit(x);
      CVec ey = model.unit(y);
      CVec n = lie.bracket_m(jx, jy);
      CVec t1 = j * lie.bracket_m(jx, ey);
      CVec t2 = j * lie.bracket_m(ex, jy);
      const CVec& t3 = lie.bracket_m(x, y);
      for (size_t k = 0; k < n.size(); ++k) n[k] -= t1[k] + t2[k] + t3[k];
      s.nijenhuis_residual = std::max(s.nijenhuis_residual, max_abs(n));
    }
  return s;
}

// ---- ClassCModel --------------------------------------------------------

namespace {

LieRealization<cplx> build_lie(const std::vector<rootsys::HermitianSymmetricPair>& pairs, const ClassCParams& p,
                               std::vector<CMat>& z_mat) {
  using Lie = LieRealization<cplx>;
  std::vector<Lie::Block> blocks;
  int offset = 0;
  for (const auto& pr : pairs) {
    blocks.push_back({offset, pr.rs.matrix_size(), pr.rs.trace_form_scale()});
    offset += pr.rs.matrix_size();
  }
  const int size = offset;

  std::vector<Lie::RootVector> roots;
  for (int sign : {1, -1})
    for (size_t b = 0; b < pairs.size(); ++b) {
      const auto& pr = pairs[b];
      const double entry = 1.0 / std::sqrt(to_double(pr.rs.trace_form_scale()));
      for (const auto& a : pr.flag.r_n_pos) {
        auto [r, c] = pr.rs.matrix_entry(sign * a);
        roots.push_back({blocks[b].offset + r, blocks[b].offset + c, cplx(entry)});
      }
    }

  z_mat.clear();
  for (size_t b = 0; b < pairs.size(); ++b) {
    CMat z(size, size);
    auto diag = pairs[b].rs.diagonal(pairs[b].z);
    for (int k = 0; k < pairs[b].rs.matrix_size(); ++k)
      z(blocks[b].offset + k, blocks[b].offset + k) = kI * to_double(diag[static_cast<size_t>(k)]);
    z_mat.push_back(std::move(z));
  }
  const double a = to_double(p.a);
  const double b = to_double(p.b);
  // H = Z₁ − √−1 J Z₁ with J Z₁ = a Z₁ + b Z₂
  CMat h = z_mat[0] * cplx(1.0, -a) + z_mat[1] * cplx(0.0, -b);
  CMat h_bar = z_mat[0] * cplx(1.0, a) + z_mat[1] * cplx(0.0, b);
  return Lie(std::move(blocks), std::move(roots), {h, h_bar});
}

}  // namespace

ClassCModel::ClassCModel(const ClassCParams& params, const InvariantMetric& metric)
    : params_(ClassCParams::make(params.n1, params.n2, params.a, params.b)),
      metric_(metric),
      pairs_{rootsys::hermitian_symmetric_pair(params.n1, 1), rootsys::hermitian_symmetric_pair(params.n2, 1)},
      z_mat_(),
      lie_(build_lie(pairs_, params_, z_mat_)) {
  require_positive(metric_);
  const int d = dim();
  const double a = to_double(params_.a);
  const double b = to_double(params_.b);
  for (int p = 0; p < d; ++p) (holomorphic(p) ? hol_ : antihol_).push_back(p);

  j_ = CMat(d, d);
  for (int p = 0; p < d; ++p) j_(p, p) = holomorphic(p) ? kI : -kI;

  z_.push_back(from_z_coords(1.0, 0.0));
  z_.push_back(from_z_coords(0.0, 1.0));

  h_ = CMat(d, d);
  const int npos = params_.n1 + params_.n2;
  for (int r = 0; r < npos; ++r) {
    const double g = block_of(r) == 0 ? metric_.g1 : metric_.g2;
    // h = −g·B on 𝔫 and B(E_α, E_{−α}) = 1
    h_(r, npos + r) = -g;
    h_(npos + r, r) = -g;
  }
  // 𝔱 block in the (Z₁, Z₂) basis, then moved to (H, H̄)
  const double h0 = metric_.h0;
  const double kappa = params_.kappa_value();
  const cplx m[2][2] = {{h0 / 2, -a * h0 / (2 * b)}, {-a * h0 / (2 * b), kappa * h0 / 2}};
  const cplx u[2][2] = {{cplx(1.0, -a), cplx(0.0, -b)}, {cplx(1.0, a), cplx(0.0, b)}};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      cplx v = 0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) v += u[s][k] * m[k][l] * u[t][l];
      h_(h_index() + s, h_index() + t) = v;
    }
}

int ClassCModel::index(const Direction& d) const {
  const int n1 = params_.n1;
  const int n2 = params_.n2;
  auto check_root = [&] {
    if (d.block < 0 || d.block > 1) throw std::out_of_range("direction block must be 0 or 1");
    if (d.root < 0 || d.root >= n(d.block)) throw std::out_of_range("root index out of range for block");
  };
  switch (d.kind) {
    case Direction::Kind::Root:
      check_root();
      return (d.block == 0 ? 0 : n1) + d.root;
    case Direction::Kind::NegRoot:
      check_root();
      return n1 + n2 + (d.block == 0 ? 0 : n1) + d.root;
    case Direction::Kind::H:
      return h_index();
    case Direction::Kind::HBar:
      return h_bar_index();
  }
  throw std::out_of_range("unknown direction");
}

bool ClassCModel::holomorphic(int p) const {
  const int npos = params_.n1 + params_.n2;
  return p < npos || p == h_index();
}

int ClassCModel::block_of(int p) const {
  const int npos = params_.n1 + params_.n2;
  if (p >= 2 * npos) return -1;
  return (p % npos) < params_.n1 ? 0 : 1;
}

CVec ClassCModel::conj(const CVec& x) const {
  const int npos = params_.n1 + params_.n2;
  CVec out(x.size());
  for (int r = 0; r < npos; ++r) {
    out[static_cast<size_t>(npos + r)] = -std::conj(x[static_cast<size_t>(r)]);
    out[static_cast<size_t>(r)] = -std::conj(x[static_cast<size_t>(npos + r)]);
  }
  out[static_cast<size_t>(h_index())] = std::conj(x[static_cast<size_t>(h_bar_index())]);
  out[static_cast<size_t>(h_bar_index())] = std::conj(x[static_cast<size_t>(h_index())]);
  return out;
}

cplx ClassCModel::h(const CVec& x, const CVec& y) const { return dot(x, h_ * y); }

cplx ClassCModel::root_on_torus(int block, const CVec& v) const {
  // α(Z_i) = √−1 δ_{i,block} for every positive complementary root
  CVec zc = to_z_coords(v[static_cast<size_t>(h_index())], v[static_cast<size_t>(h_bar_index())]);
  return kI * zc[static_cast<size_t>(block)];
}

CVec ClassCModel::to_z_coords(cplx h_coeff, cplx h_bar_coeff) const {
  const double a = to_double(params_.a);
  const double b = to_double(params_.b);
  return {h_coeff * cplx(1.0, -a) + h_bar_coeff * cplx(1.0, a), h_coeff * cplx(0.0, -b) + h_bar_coeff * cplx(0.0, b)};
}

CVec ClassCModel::from_z_coords(cplx z1, cplx z2) const {
  // [u v] (hc, hbc)ᵀ = (z1, z2)ᵀ with u = (1−ia, −ib), v = (1+ia, ib)
  const double a = to_double(params_.a);
  const double b = to_double(params_.b);
  const cplx m00(1.0, -a), m01(1.0, a), m10(0.0, -b), m11(0.0, b);
  const cplx det = m00 * m11 - m01 * m10;
  CVec out(static_cast<size_t>(dim()), cplx{});
  out[static_cast<size_t>(h_index())] = (m11 * z1 - m01 * z2) / det;
  out[static_cast<size_t>(h_bar_index())] = (-m10 * z1 + m00 * z2) / det;
  return out;
}

CVec ClassCModel::h_alpha_m(int block, int root) const {
  const int p = index(Direction::e(block, root));
  const int q = index(Direction::e_neg(block, root));
  return lie_.bracket_m(p, q);
}

// ---- Chern connection ---------------------------------------------------

namespace {

/// Solves x ∈ span(rows) from the Gram system h(x, b_r) = rhs_r, r ranging over `pair_with`.
CVec solve_in_span(const ClassCModel& m, const std::vector<int>& span, const std::vector<int>& pair_with,
                   const CVec& rhs) {
  const int n = static_cast<int>(span.size());
  CMat g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      g(r, c) = m.metric_gram()(span[static_cast<size_t>(c)], pair_with[static_cast<size_t>(r)]);
  auto coeffs = solve(g, rhs);
  if (!coeffs) throw std::runtime_error("degenerate metric pairing between (1,0) and (0,1)");
  CVec out(static_cast<size_t>(m.dim()), cplx{});
  for (int c = 0; c < n; ++c) out[static_cast<size_t>(span[static_cast<size_t>(c)])] = (*coeffs)[static_cast<size_t>(c)];
  return out;
}

CVec type_part(const ClassCModel& m, const CVec& x, bool hol) {
  CVec out(x.size(), cplx{});
  for (int p : hol ? m.holomorphic_indices() : m.antiholomorphic_indices())
    out[static_cast<size_t>(p)] = x[static_cast<size_t>(p)];
  return out;
}

}  // namespace

ChernConnectionTable ChernConnectionTable::from_torsion(const ClassCModel& model) {
  ChernConnectionTable t(model);
  const auto& lie = model.lie();
  const int d = model.dim();
  const auto& hol = model.holomorphic_indices();
  const auto& anti = model.antiholomorphic_indices();
  t.lambda_.assign(static_cast<size_t>(d), CMat(d, d));
  for (int v = 0; v < d; ++v) {
    CMat& L = t.lambda_[static_cast<size_t>(v)];
    const bool v_hol = model.holomorphic(v);
    // opposite type: Λ(A)B̄ = ([A, B̄]_m)^{01}, Λ(B̄)A = ([B̄, A]_m)^{10}
    const auto& opposite = v_hol ? anti : hol;
    for (int w : opposite) L.set_column(w, type_part(model, lie.bracket_m(v, w), !v_hol));
    // same type from skewness: h(Λ(v)c, o) = −h(c, Λ(v)o) for o of the opposite type
    const auto& same = v_hol ? hol : anti;
    for (int c : same) {
      CVec rhs;
      for (int o : opposite) rhs.push_back(-model.h(model.unit(c), L.column(o)));
      L.set_column(c, solve_in_span(model, same, opposite, rhs));
    }
  }
  return t;
}

ChernConnectionTable ChernConnectionTable::closed_form(const ClassCModel& model) {
  ChernConnectionTable t(model);
  const auto& lie = model.lie();
  const int d = model.dim();
  t.lambda_.assign(static_cast<size_t>(d), CMat(d, d));
  const int hi = model.h_index();
  const int hbi = model.h_bar_index();

  for (int v : {hi, hbi}) t.lambda_[static_cast<size_t>(v)] = lie.ad_matrix(lie.basis(v));

  CVec h_vec = model.unit(hi);
  for (int block = 0; block < 2; ++block) {
    const int ni = model.n(block);
    const double g = block == 0 ? model.metric().g1 : model.metric().g2;
    // (H_α)_m = −√−1/(2n_i) Z_i
    CVec h_alpha_m = scaled(model.z(block), -kI / (2.0 * ni));
    CVec zi01 = type_part(model, h_alpha_m, false);
    const cplx coeff_h = model.h(h_vec, h_alpha_m) / g;
    for (int r = 0; r < ni; ++r) {
      const int pa = model.index(Direction::e(block, r));
      const int na = model.index(Direction::e_neg(block, r));
      CMat& L = t.lambda_[static_cast<size_t>(pa)];
      L.set_column(na, zi01);
      L(pa, hi) = coeff_h;
    }
  }
  // Λ(E_{−α}) = −conj ∘ Λ(E_α) ∘ conj, since Ē_α = −E_{−α}
  for (int block = 0; block < 2; ++block)
    for (int r = 0; r < model.n(block); ++r) {
      const int pa = model.index(Direction::e(block, r));
      const int na = model.index(Direction::e_neg(block, r));
      CMat& L = t.lambda_[static_cast<size_t>(na)];
      const CMat& P = t.lambda_[static_cast<size_t>(pa)];
      for (int w = 0; w < d; ++w) {
        CVec img = model.conj(P * model.conj(model.unit(w)));
        L.set_column(w, scaled(img, -1.0));
      }
    }
  return t;
}

CVec ChernConnectionTable::apply(const CVec& v, const CVec& w) const {
  const int d = model_->dim();
  CVec out(static_cast<size_t>(d), cplx{});
  for (int p = 0; p < d; ++p) {
    if (v[static_cast<size_t>(p)] == cplx{}) continue;
    axpy(out, v[static_cast<size_t>(p)], lambda(p) * w);
  }
  return out;
}

CVec ChernConnectionTable::apply(const Direction& v, const Direction& w) const {
  return lambda(model_->index(v)).column(model_->index(w));
}

namespace {

CMat lambda_of(const ChernConnectionTable& t, const CVec& v) {
  const int d = t.model().dim();
  CMat out(d, d);
  for (int p = 0; p < d; ++p)
    if (v[static_cast<size_t>(p)] != cplx{}) out += t.lambda(p) * v[static_cast<size_t>(p)];
  return out;
}

}  // namespace

CMat ChernConnectionTable::curvature(const CVec& v, const CVec& w) const {
  const auto& lie = model_->lie();
  CMat lv = lambda_of(*this, v);
  CMat lw = lambda_of(*this, w);
  CMat r = commutator(lv, lw);
  r -= lambda_of(*this, lie.bracket_m(v, w));
  r -= lie.ad_matrix(lie.bracket_l(v, w));
  return r;
}

CMat ChernConnectionTable::curvature(int p, int q) const { return curvature(model_->unit(p), model_->unit(q)); }

CVec ChernConnectionTable::curvature_apply(const Direction& v, const Direction& w, const Direction& x) const {
  return curvature(model_->index(v), model_->index(w)).column(model_->index(x));
}

CVec ChernConnectionTable::torsion(int p, int q) const {
  CVec t = lambda(p).column(q);
  CVec back = lambda(q).column(p);
  const CVec& br = model_->lie().bracket_m(p, q);
  for (size_t k = 0; k < t.size(); ++k) t[k] -= back[k] + br[k];
  return t;
}

CVec lambda_apply(const ChernConnectionTable& table, const Direction& v, const Direction& w) {
  return table.apply(v, w);
}

CVec curvature_apply(const ChernConnectionTable& table, const Direction& v, const Direction& w, const Direction& x) {
  return table.curvature_apply(v, w, x);
}

CMat oracle_second_ricci_form(const ChernConnectionTable& table) {
  const ClassCModel& m = table.model();
  const auto& hol = m.holomorphic_indices();
  const int n = static_cast<int>(hol.size());
  // H_{pq} = h(e_p, ē_q) on m^{10}
  CMat gram(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      gram(p, q) = m.h(m.unit(hol[static_cast<size_t>(p)]), m.conj(m.unit(hol[static_cast<size_t>(q)])));
  auto inv = inverse(gram);
  if (!inv) throw std::runtime_error("degenerate Hermitian Gram matrix");
  std::vector<CMat> curv(static_cast<size_t>(n * n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (std::abs((*inv)(q, p)) == 0.0) continue;
      curv[static_cast<size_t>(p * n + q)] =
          table.curvature(m.unit(hol[static_cast<size_t>(p)]), m.conj(m.unit(hol[static_cast<size_t>(q)])));
    }
  CMat s(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CVec ex = m.unit(hol[static_cast<size_t>(x)]);
      CVec ey_bar = m.conj(m.unit(hol[static_cast<size_t>(y)]));
      cplx total = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const cplx w = (*inv)(q, p);
          if (std::abs(w) == 0.0) continue;
          total += w * m.h(curv[static_cast<size_t>(p * n + q)] * ex, ey_bar);
        }
      s(x, y) = total;
    }
  return s;
}

RicciData oracle_second_ricci(const ClassCParams& p, const InvariantMetric& metric) {
  ClassCModel model(p, metric);
  auto table = ChernConnectionTable::from_torsion(model);
  CMat s = oracle_second_ricci_form(table);
  // rows of s follow holomorphic_indices(): block-0 roots, block-1 roots, H
  const int i1 = 0;
  const int i2 = p.n1;
  const int ih = p.n1 + p.n2;
  return {s(i1, i1).real(), s(i2, i2).real(), s(ih, ih).real()};
}

RicciData oracle_first_ricci(const ClassCParams& p, const InvariantMetric& metric) {
  ClassCModel model(p, metric);
  auto table = ChernConnectionTable::from_torsion(model);
  auto rho = [&](int x) {
    CMat r = table.curvature(model.unit(x), model.conj(model.unit(x)));
    cplx tr = 0;
    for (int k : model.holomorphic_indices()) tr += r(k, k);
    return tr.real();
  };
  return {rho(model.index(Direction::e(0, 0))), rho(model.index(Direction::e(1, 0))), rho(model.h_index())};
}

// ---- obstructions -------------------------------------------------------

Rational skt_obstruction_value(int n1, const Rational& h0) { return -h0 / (4 * n1 * n1); }

ObstructionReport skt_obstruction(const ClassCParams& p, const InvariantMetric& m, const Direction& alpha,
                                  const Direction& beta) {
  for (const auto* d : {&alpha, &beta})
    if (d->kind != Direction::Kind::Root || d->block != 0)
      throw std::invalid_argument("SKT witness roots must both be positive roots of the first block");
  ClassCModel model(p, m);
  model.index(alpha);
  model.index(beta);
  ObstructionReport r;
  r.kind = ObstructionReport::Kind::Skt;
  r.witness = "ddc(omega)(E_a, E_-a, E_b, E_-b) with a = block-1 root #" + std::to_string(alpha.root) +
              ", b = block-1 root #" + std::to_string(beta.root);
  r.exact = skt_obstruction_value(p.n1, Rational(m.h0));
  r.value = to_double(*r.exact);
  r.realized = 2.0 * model.h(model.h_alpha_m(0, alpha.root), model.h_alpha_m(0, beta.root));
  return r;
}

namespace {

CMat xi_matrix(const ClassCModel& model, double xi1, double xi2) {
  return model.z_matrix(0) * cplx(xi1) + model.z_matrix(1) * cplx(xi2);
}

/// ω(X, Y) = dξ*(X, Y) = −B(ξ, [X, Y]).
cplx omega(const ClassCModel& model, const CMat& xi, const CVec& x, const CVec& y) {
  const auto& lie = model.lie();
  return -lie.killing(xi, commutator(lie.element(x), lie.element(y)));
}

}  // namespace

cplx ddbar_form_value(const ClassCParams& p, double xi1, double xi2, const Direction& alpha) {
  ClassCModel model(p, InvariantMetric{});
  CMat xi = xi_matrix(model, xi1, xi2);
  Direction neg = alpha;
  neg.kind = Direction::Kind::NegRoot;
  return omega(model, xi, model.unit(model.index(alpha)), model.unit(model.index(neg)));
}

ObstructionReport ddbar_witness(const ClassCParams& p, double xi1, double xi2) {
  if (xi1 == 0.0 && xi2 == 0.0) throw std::invalid_argument("xi must be nonzero");
  ClassCModel model(p, InvariantMetric{});
  CMat xi = xi_matrix(model, xi1, xi2);
  const auto& lie = model.lie();
  for (int block = 0; block < 2; ++block) {
    // α(ξ) = √−1 xi_block on every positive complementary root of the block
    const cplx alpha_xi = kI * (block == 0 ? xi1 : xi2);
    if (alpha_xi == cplx{}) continue;
    const int pa = model.index(Direction::e(block, 0));
    const int na = model.index(Direction::e_neg(block, 0));
    ObstructionReport r;
    r.kind = ObstructionReport::Kind::DDbar;
    r.witness = "d(xi*)(E_a, E_-a) with a = block-" + std::to_string(block + 1) + " root #0";
    r.value = -alpha_xi * lie.killing(lie.basis(pa), lie.basis(na));
    r.realized = omega(model, xi, model.unit(pa), model.unit(na));
    return r;
  }
  throw std::invalid_argument("xi is annihilated by every root");
}

double ddbar_type_residual(const ClassCParams& p, double xi1, double xi2) {
  ClassCModel model(p, InvariantMetric{});
  CMat xi = xi_matrix(model, xi1, xi2);
  const CMat& j = model.complex_structure();
  double worst = 0.0;
  for (int x = 0; x < model.dim(); ++x)
    for (int y = 0; y < model.dim(); ++y) {
      cplx lhs = omega(model, xi, j.column(x), j.column(y));
      cplx rhs = omega(model, xi, model.unit(x), model.unit(y));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  return worst;
}

}  // namespace cel::classc
