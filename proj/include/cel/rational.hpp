/// @file rational.hpp
/// @brief Exact scalar types: GMP-backed rationals and Gaussian rationals Q(i).
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace cel {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

double to_double(const Rational& r);

/// Parses "7", "-3/4", "0.125", "2.5e-3" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& r);

/// Shortest decimal that round-trips to the same binary64 value.
std::string format_double(double x);

/// Element re + i·im of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational real) : re(std::move(real)) {}           // NOLINT: implicit by design of the field
  Gaussian(int real) : re(real) {}                           // NOLINT
  Gaussian(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g);
};

}  // namespace cel
