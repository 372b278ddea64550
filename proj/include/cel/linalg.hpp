/// @file linalg.hpp
/// @brief Dense matrices over an arbitrary field, with exact pivoting for
/// Rational/Gaussian and partial pivoting for floating scalars.
#pragma once

#include "cel/rational.hpp"

#include <cassert>
#include <cmath>
#include <complex>
#include <optional>
#include <type_traits>
#include <vector>

namespace cel {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x == 0; }
  static double magnitude(const Rational& x) { return x == 0 ? 0.0 : 1.0; }
  static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct ScalarTraits<Gaussian> {
  static constexpr bool exact = true;
  static bool is_zero(const Gaussian& x) { return x.is_zero(); }
  static double magnitude(const Gaussian& x) { return x.is_zero() ? 0.0 : 1.0; }
  static Gaussian from_rational(const Rational& r) { return Gaussian(r); }
  static Gaussian conj(const Gaussian& x) { return x.conj(); }
  static Gaussian imag_unit() { return Gaussian::i(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return x == 0.0; }
  static double magnitude(double x) { return std::abs(x); }
  static double from_rational(const Rational& r) { return to_double(r); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using C = std::complex<double>;
  static constexpr bool exact = false;
  static bool is_zero(const C& x) { return x == C{}; }
  static double magnitude(const C& x) { return std::abs(x); }
  static C from_rational(const Rational& r) { return {to_double(r), 0.0}; }
  static C conj(const C& x) { return std::conj(x); }
  static C imag_unit() { return {0.0, 1.0}; }
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

  std::vector<T> column(int c) const {
    std::vector<T> v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<size_t>(r)] = (*this)(r, c);
    return v;
  }
  void set_column(int c, const std::vector<T>& v) {
    assert(static_cast<int>(v.size()) == rows_);
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[static_cast<size_t>(r)];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ScalarTraits<T>::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    assert(a.cols_ == static_cast<int>(v.size()));
    std::vector<T> out(static_cast<size_t>(a.rows_), T(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ScalarTraits<T>::is_zero(aik)) continue;
        out[static_cast<size_t>(i)] += aik * v[static_cast<size_t>(k)];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <class T>
T trace(const Matrix<T>& a) {
  T t(0);
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

namespace detail {

template <class T>
int choose_pivot(const Matrix<T>& a, int col, int from) {
  int best = -1;
  double best_mag = 0.0;
  for (int r = from; r < a.rows(); ++r) {
    double mag = ScalarTraits<T>::magnitude(a(r, col));
    if (mag > best_mag) {
      best_mag = mag;
      best = r;
      if constexpr (ScalarTraits<T>::exact) break;
    }
  }
  return best;
}

}  // namespace detail

/// Gauss-Jordan inverse. Returns nullopt for a singular matrix (exact types)
/// or when a pivot vanishes to rounding (floating types).
template <class T>
std::optional<Matrix<T>> inverse(Matrix<T> a) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = detail::choose_pivot(a, col, col);
    if (piv < 0) return std::nullopt;
    if constexpr (!ScalarTraits<T>::exact) {
      if (ScalarTraits<T>::magnitude(a(piv, col)) < 1e-300) return std::nullopt;
    }
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    T p = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      T f = a(r, col);
      if (ScalarTraits<T>::is_zero(f)) continue;
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  auto inv = inverse(a);
  if (!inv) return std::nullopt;
  return (*inv) * b;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  assert(a.size() == b.size());
  T s(0);
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

template <class T>
std::vector<T>& axpy(std::vector<T>& y, const T& a, const std::vector<T>& x) {
  assert(x.size() == y.size());
  if (ScalarTraits<T>::is_zero(a)) return y;
  for (size_t k = 0; k < x.size(); ++k) y[k] += a * x[k];
  return y;
}

}  // namespace cel
