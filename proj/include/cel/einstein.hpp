/// @file einstein.hpp
/// @brief Chern-Einstein metrics (S = h) in the adapted family of a class-𝒞 manifold.
///
/// With x = 1/g1, y = 1/g2, z = 16/h0 the Einstein system reduces to one cubic
/// φ(x) = 0 on (0, (2n1+2n2+2)/n1), together with n1·x + n2·y = 2n1+2n2+2 and
/// z(x − 2) = 2x²/n1².
#pragma once

#include "cel/classc.hpp"
#include "cel/polynomial.hpp"
#include "cel/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace cel::einstein {

using classc::ClassCParams;
using classc::ExactMetric;
using classc::InvariantMetric;

/// φ(x) = [x²/n1 + (κ/n2)((2n1+2n2+2 − n1x)/n2)²](x − 2) − 2x²/n1².
Rational phi(int n1, int n2, const Rational& kappa, const Rational& x);
double phi_eval(int n1, int n2, double kappa, double x);
Polynomial phi_polynomial(int n1, int n2, const Rational& kappa);

/// (2n1 + 2n2 + 2) / n1, the right end of the search interval.
Rational search_bound(int n1, int n2);

struct EinsteinSolution {
  InvariantMetric metric;
  double x = 0;
  double y = 0;
  double z = 0;
  double residual = 0;  // max |S(h) − h| over the three blocks
  double mu = 1.0;
  std::optional<ExactMetric> exact;  // present when the root is rational and was hit exactly
};

/// max |S(h) − h| in exact arithmetic.
Rational exact_residual(const ClassCParams& p, const ExactMetric& m);

/// All admissible solutions (x > 2, y > 0), sorted by x. Throws NumericFailure if none is found.
std::vector<EinsteinSolution> solve(const ClassCParams& p);

/// g1 = g2 = n/(2n+1), h0 = 8n³/(2n+1)² at κ = 1. Throws std::invalid_argument for n < 1.
EinsteinSolution symmetric_solution(int n);

/// The integer d from the uniqueness argument.
Rational discriminant(int n1, int n2);

struct UniquenessReport {
  int n1 = 1;
  int n2 = 1;
  Rational discriminant;
  /// n1 ≤ √2·n2 and n2 ≤ √2·n1.
  std::array<bool, 2> band_ok{};
  /// n1³/(n1+1) ≤ 2n2³/(2n2−1) and the symmetric counterpart.
  std::array<bool, 2> cubic_band_ok{};
  int root_count = 0;
  std::vector<double> roots;
  /// Every admissible root lies in (2, 2 + 2/n1].
  bool roots_in_interval = false;
};

/// κ = 1 only. Throws NumericFailure when the root count is not one.
UniquenessReport uniqueness_report(int n1, int n2);
/// Throws std::invalid_argument when κ ≠ 1.
UniquenessReport uniqueness_report(const ClassCParams& p);

}  // namespace cel::einstein
