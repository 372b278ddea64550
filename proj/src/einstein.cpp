/// @file einstein.cpp
#include "cel/einstein.hpp"

#include "cel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cel::einstein {

namespace {

Rational constant_c(int n1, int n2) { return Rational(2 * n1 + 2 * n2 + 2); }

double float_residual(const ClassCParams& p, const InvariantMetric& m) {
  auto s = classc::second_ricci(p, m);
  return std::max({std::abs(s.s_n1 - m.g1), std::abs(s.s_n2 - m.g2), std::abs(s.s_t - m.h0)});
}

/// Newton steps in long double, kept inside [lo, hi].
long double polish(const Polynomial& p, const RootInterval& iv) {
  const long double lo = static_cast<long double>(to_double(iv.lo));
  const long double hi = static_cast<long double>(to_double(iv.hi));
  const Polynomial dp = p.derivative();
  long double x = (lo + hi) / 2;
  for (int it = 0; it < 4; ++it) {
    const long double d = dp.eval(x);
    if (d == 0) break;
    const long double next = x - p.eval(x) / d;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

}  // namespace

Rational phi(int n1, int n2, const Rational& kappa, const Rational& x) {
  Rational u = (constant_c(n1, n2) - n1 * x) / n2;
  return (x * x / n1 + kappa / n2 * u * u) * (x - 2) - 2 * x * x / (n1 * n1);
}

double phi_eval(int n1, int n2, double kappa, double x) {
  const double u = (2.0 * n1 + 2.0 * n2 + 2.0 - n1 * x) / n2;
  return (x * x / n1 + kappa / n2 * u * u) * (x - 2.0) - 2.0 * x * x / (static_cast<double>(n1) * n1);
}

Polynomial phi_polynomial(int n1, int n2, const Rational& kappa) {
  const Polynomial x = Polynomial::x();
  const Polynomial u = Rational(1, n2) * (Polynomial::constant(constant_c(n1, n2)) - Rational(n1) * x);
  const Polynomial bracket = Rational(1, n1) * (x * x) + (kappa / n2) * (u * u);
  return bracket * (x - Polynomial::constant(2)) - Rational(2, n1 * n1) * (x * x);
}

Rational search_bound(int n1, int n2) { return constant_c(n1, n2) / n1; }

Rational exact_residual(const ClassCParams& p, const ExactMetric& m) {
  auto s = classc::second_ricci(p, m);
  return std::max({abs(s.s_n1 - m.g1), abs(s.s_n2 - m.g2), abs(s.s_t - m.h0)});
}

std::vector<EinsteinSolution> solve(const ClassCParams& p) {
  const ClassCParams params = ClassCParams::make(p.n1, p.n2, p.a, p.b);
  const int n1 = params.n1;
  const int n2 = params.n2;
  const Polynomial poly = phi_polynomial(n1, n2, params.kappa());
  const Rational width = Rational(1) / (Integer(1) << 52);
  auto intervals = isolate_roots(poly, Rational(0), search_bound(n1, n2), width);

  std::vector<EinsteinSolution> out;
  for (const auto& iv : intervals) {
    EinsteinSolution s;
    if (iv.exact) {
      const Rational& x = iv.lo;
      const Rational y = (constant_c(n1, n2) - n1 * x) / n2;
      if (x <= 2 || y <= 0) continue;
      const Rational z = 2 * x * x / (n1 * n1 * (x - 2));
      s.exact = ExactMetric{1 / x, 1 / y, 16 / z};
      s.x = to_double(x);
      s.y = to_double(y);
      s.z = to_double(z);
      s.metric = {to_double(s.exact->g1), to_double(s.exact->g2), to_double(s.exact->h0)};
    } else {
      const long double x = polish(poly, iv);
      const long double y = (2.0L * n1 + 2.0L * n2 + 2.0L - n1 * x) / n2;
      if (!(x > 2) || !(y > 0)) continue;
      const long double z = 2 * x * x / (static_cast<long double>(n1) * n1 * (x - 2));
      s.x = static_cast<double>(x);
      s.y = static_cast<double>(y);
      s.z = static_cast<double>(z);
      s.metric = {static_cast<double>(1 / x), static_cast<double>(1 / y), static_cast<double>(16 / z)};
    }
    s.residual = float_residual(params, s.metric);
    out.push_back(std::move(s));
  }
  if (out.empty())
    throw NumericFailure("internal error: no admissible Einstein root for n1=" + std::to_string(n1) +
                         ", n2=" + std::to_string(n2));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  return out;
}

EinsteinSolution symmetric_solution(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Rational g(n, 2 * n + 1);
  const Rational h0 = Rational(8 * n) * n * n / ((2 * n + 1) * (2 * n + 1));
  EinsteinSolution s;
  s.exact = ExactMetric{g, g, h0};
  s.metric = {to_double(g), to_double(g), to_double(h0)};
  s.x = to_double(1 / g);
  s.y = s.x;
  s.z = to_double(16 / h0);
  const auto params = ClassCParams::make(n, n, 0, 1);
  s.residual = to_double(exact_residual(params, *s.exact));
  return s;
}

Rational discriminant(int n1, int n2) {
  auto pw = [](int base, int e) {
    Integer r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };
  const Integer a = pw(n1, 1);
  const Integer b = pw(n2, 1);
  Integer plus = pw(n1, 6) + pw(n2, 6) + 2 * pw(n1, 6) * b + 2 * pw(n2, 6) * a + pw(n1, 6) * pw(n2, 2) +
                 pw(n1, 2) * pw(n2, 6) + pw(n1, 3) * pw(n2, 3);
  Integer minus = 8 * pw(n1, 4) * pw(n2, 4) + 3 * pw(n1, 3) * pw(n2, 5) + 3 * pw(n1, 5) * pw(n2, 3) +
                  2 * pw(n1, 3) * pw(n2, 4) + 2 * pw(n1, 4) * pw(n2, 3);
  return Rational(plus - minus);
}

UniquenessReport uniqueness_report(int n1, int n2) {
  const auto params = ClassCParams::make(n1, n2, 0, 1);
  UniquenessReport r;
  r.n1 = n1;
  r.n2 = n2;
  r.discriminant = discriminant(n1, n2);
  r.band_ok = {n1 * n1 <= 2 * n2 * n2, n2 * n2 <= 2 * n1 * n1};
  const Rational c1 = Rational(n1 * n1 * n1, n1 + 1);
  const Rational c2 = Rational(n2 * n2 * n2, n2 + 1);
  r.cubic_band_ok = {c1 <= Rational(2 * n2 * n2 * n2, 2 * n2 - 1), c2 <= Rational(2 * n1 * n1 * n1, 2 * n1 - 1)};
  auto sols = solve(params);
  r.root_count = static_cast<int>(sols.size());
  r.roots_in_interval = true;
  const double upper = 2.0 + 2.0 / n1;
  for (const auto& s : sols) {
    r.roots.push_back(s.x);
    r.roots_in_interval = r.roots_in_interval && s.x > 2.0 && s.x <= upper;
  }
  if (r.root_count != 1)
    throw NumericFailure("uniqueness fails: " + std::to_string(r.root_count) + " admissible roots for n1=" +
                         std::to_string(n1) + ", n2=" + std::to_string(n2));
  return r;
}

UniquenessReport uniqueness_report(const ClassCParams& p) {
  if (p.kappa() != 1)
    throw std::invalid_argument("uniqueness analysis requires (1+a^2)/b^2 = 1, got " + to_string(p.kappa()));
  return uniqueness_report(p.n1, p.n2);
}

}  // namespace cel::einstein
