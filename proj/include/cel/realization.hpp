/// @file realization.hpp
/// @brief Matrix realization of a reductive split g = l ⊕ m for a product of
/// special linear algebras, embedded block-diagonally.
///
/// The complexified tangent space m^c is spanned by single-entry root vectors
/// (indices [0, root_count)) followed by diagonal fiber vectors spanning t^c
/// (indices [root_count, dim)). Everything else is l^c, the B-orthogonal
/// complement. Structure constants [b_p, b_q] = [b_p, b_q]_m + [b_p, b_q]_l are
/// computed once at construction.
#pragma once

#include "cel/linalg.hpp"
#include "cel/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cel {

template <class T>
class LieRealization {
 public:
  using Mat = Matrix<T>;
  using Vec = std::vector<T>;

  struct Block {
    int offset = 0;
    int size = 0;
    Rational trace_scale;  // B = trace_scale · tr on this block
  };

  /// entry · E_{row,col}
  struct RootVector {
    int row = 0;
    int col = 0;
    T entry;
  };

  LieRealization(std::vector<Block> blocks, std::vector<RootVector> roots, std::vector<Mat> fiber)
      : blocks_(std::move(blocks)), roots_(std::move(roots)), fiber_(std::move(fiber)) {
    size_ = 0;
    for (const auto& b : blocks_) size_ = std::max(size_, b.offset + b.size);
    for (const auto& r : roots_) {
      Mat m(size_, size_);
      m(r.row, r.col) = r.entry;
      basis_.push_back(std::move(m));
    }
    for (const auto& f : fiber_) {
      for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
          if (i != j && !ScalarTraits<T>::is_zero(f(i, j)))
            throw std::invalid_argument("fiber vectors must be diagonal");
      basis_.push_back(f);
    }
    const int nf = fiber_count();
    Mat gram(nf, nf);
    for (int a = 0; a < nf; ++a)
      for (int b = 0; b < nf; ++b) gram(a, b) = killing(fiber_[static_cast<size_t>(a)], fiber_[static_cast<size_t>(b)]);
    if (nf > 0) {
      auto inv = inverse(gram);
      if (!inv) throw std::invalid_argument("fiber vectors are degenerate for the Killing form");
      fiber_gram_inv_ = *inv;
    }

    const int m = dim();
    bracket_m_.assign(static_cast<size_t>(m * m), Vec{});
    bracket_l_.assign(static_cast<size_t>(m * m), Mat{});
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) {
        Mat c = commutator(basis_[static_cast<size_t>(p)], basis_[static_cast<size_t>(q)]);
        Vec cm = m_coords(c);
        bracket_l_[idx(p, q)] = c - element(cm);
        bracket_m_[idx(p, q)] = std::move(cm);
      }
  }

  int matrix_size() const { return size_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int fiber_count() const { return static_cast<int>(fiber_.size()); }
  const Mat& basis(int p) const { return basis_[static_cast<size_t>(p)]; }

  T killing(const Mat& x, const Mat& y) const {
    T total(0);
    for (const auto& b : blocks_) {
      T tr(0);
      for (int i = b.offset; i < b.offset + b.size; ++i)
        for (int j = b.offset; j < b.offset + b.size; ++j) {
          if (ScalarTraits<T>::is_zero(x(i, j))) continue;
          tr += x(i, j) * y(j, i);
        }
      total += ScalarTraits<T>::from_rational(b.trace_scale) * tr;
    }
    return total;
  }

  Mat element(const Vec& x) const {
    Mat out(size_, size_);
    for (int p = 0; p < dim(); ++p) {
      if (ScalarTraits<T>::is_zero(x[static_cast<size_t>(p)])) continue;
      out += basis_[static_cast<size_t>(p)] * x[static_cast<size_t>(p)];
    }
    return out;
  }

  /// Coordinates of the m-component of x.
  Vec m_coords(const Mat& x) const {
    Vec out(static_cast<size_t>(dim()), T(0));
    for (int p = 0; p < root_count(); ++p) {
      const auto& r = roots_[static_cast<size_t>(p)];
      out[static_cast<size_t>(p)] = x(r.row, r.col) / r.entry;
    }
    const int nf = fiber_count();
    if (nf == 0) return out;
    Mat diag(size_, size_);
    for (int i = 0; i < size_; ++i) diag(i, i) = x(i, i);
    Vec rhs(static_cast<size_t>(nf));
    for (int a = 0; a < nf; ++a) rhs[static_cast<size_t>(a)] = killing(fiber_[static_cast<size_t>(a)], diag);
    Vec c = fiber_gram_inv_ * rhs;
    for (int a = 0; a < nf; ++a) out[static_cast<size_t>(root_count() + a)] = c[static_cast<size_t>(a)];
    return out;
  }

  Mat l_part(const Mat& x) const { return x - element(m_coords(x)); }

  const Vec& bracket_m(int p, int q) const { return bracket_m_[idx(p, q)]; }
  const Mat& bracket_l(int p, int q) const { return bracket_l_[idx(p, q)]; }

  Vec bracket_m(const Vec& x, const Vec& y) const {
    Vec out(static_cast<size_t>(dim()), T(0));
    for (int p = 0; p < dim(); ++p) {
      if (ScalarTraits<T>::is_zero(x[static_cast<size_t>(p)])) continue;
      for (int q = 0; q < dim(); ++q) {
        if (ScalarTraits<T>::is_zero(y[static_cast<size_t>(q)])) continue;
        axpy(out, x[static_cast<size_t>(p)] * y[static_cast<size_t>(q)], bracket_m(p, q));
      }
    }
    return out;
  }

  Mat bracket_l(const Vec& x, const Vec& y) const {
    Mat out(size_, size_);
    for (int p = 0; p < dim(); ++p) {
      if (ScalarTraits<T>::is_zero(x[static_cast<size_t>(p)])) continue;
      for (int q = 0; q < dim(); ++q) {
        if (ScalarTraits<T>::is_zero(y[static_cast<size_t>(q)])) continue;
        out += bracket_l(p, q) * (x[static_cast<size_t>(p)] * y[static_cast<size_t>(q)]);
      }
    }
    return out;
  }

  /// [z, x]_m for an arbitrary element z and x ∈ m^c given by coordinates.
  Vec ad_m(const Mat& z, const Vec& x) const { return m_coords(commutator(z, element(x))); }

  /// ad(z) restricted to m^c and projected back to m^c, as a dim × dim matrix.
  Mat ad_matrix(const Mat& z) const {
    Mat out(dim(), dim());
    for (int q = 0; q < dim(); ++q) out.set_column(q, m_coords(commutator(z, basis_[static_cast<size_t>(q)])));
    return out;
  }

  Vec unit(int p) const {
    Vec v(static_cast<size_t>(dim()), T(0));
    v[static_cast<size_t>(p)] = T(1);
    return v;
  }

 private:
  size_t idx(int p, int q) const { return static_cast<size_t>(p * dim() + q); }

  std::vector<Block> blocks_;
  std::vector<RootVector> roots_;
  std::vector<Mat> fiber_;
  std::vector<Mat> basis_;
  Mat fiber_gram_inv_;
  std::vector<Vec> bracket_m_;
  std::vector<Mat> bracket_l_;
  int size_ = 0;
};

}  // namespace cel
