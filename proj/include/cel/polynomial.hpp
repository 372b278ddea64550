/// @file polynomial.hpp
/// @brief Univariate polynomials over Q with Sturm-sequence real root isolation.
#pragma once

#include "cel/rational.hpp"

#include <ostream>
#include <vector>

namespace cel {

class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients from the constant term upwards; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  long double eval(long double x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Throws std::domain_error for division by the zero polynomial.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'): same real roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

class SturmSequence {
 public:
  /// p should be squarefree for distinct-root counting.
  explicit SturmSequence(const Polynomial& p);
  int sign_changes(const Rational& x) const;
  /// Number of distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// Isolating interval. When `exact` is set, lo == hi is the root itself.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// Distinct real roots of p in the open interval (lo, hi), each in its own
/// interval of width at most `width`, sorted increasingly. p must be nonzero.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& width);

}  // namespace cel
