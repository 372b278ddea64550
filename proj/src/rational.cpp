/// @file rational.cpp
#include "cel/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace cel {

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

Integer parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty())
    throw std::invalid_argument("malformed number: '" + std::string(original) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed number: '" + std::string(original) + "'");
  // a leading 0 would select octal in the Integer string constructor
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

Rational pow10(long e) {
  Rational r(1);
  Rational ten(10);
  for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= ten;
  return e < 0 ? Rational(1) / r : r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_text = text.substr(epos + 1);
    text = text.substr(0, epos);
    auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty())
      throw std::invalid_argument("malformed exponent: '" + std::string(original) + "'");
    if (exponent > 400 || exponent < -400)
      throw std::invalid_argument("exponent out of range: '" + std::string(original) + "'");
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    fraction_digits = static_cast<long>(text.size() - dot - 1);
  } else {
    digits = std::string(text);
  }
  Rational value(parse_integer(digits, original));
  value *= pow10(exponent - fraction_digits);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational d = o.norm2();
  if (d == 0) throw std::domain_error("division by zero in Q(i)");
  Rational r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
  os << to_string(g.re);
  if (g.im != 0) os << (g.im < 0 ? " - " : " + ") << to_string(abs(g.im)) << "i";
  return os;
}

}  // namespace cel
