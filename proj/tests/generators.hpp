// Seeded generators for property tests.
#pragma once

#include "cel/balanced.hpp"
#include "cel/classc.hpp"

#include <random>

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int integer(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline cel::Rational rational(Rng& rng, int lo, int hi, int max_den) {
  return cel::Rational(integer(rng, lo, hi), integer(rng, 1, max_den));
}

inline cel::Rational positive_rational(Rng& rng) { return cel::Rational(integer(rng, 1, 12), integer(rng, 1, 6)); }

inline cel::classc::InvariantMetric metric(Rng& rng) {
  return {uniform(rng, 0.1, 3.0), uniform(rng, 0.1, 3.0), uniform(rng, 0.1, 5.0)};
}

inline cel::classc::ExactMetric exact_metric(Rng& rng) {
  return {positive_rational(rng), positive_rational(rng), positive_rational(rng)};
}

/// (a, b) with b != 0; kappa = (1 + a^2)/b^2.
inline cel::classc::ClassCParams params(Rng& rng, int max_n) {
  int b = 0;
  while (b == 0) b = integer(rng, -3, 3);
  return cel::classc::ClassCParams::make(integer(rng, 1, max_n), integer(rng, 1, max_n), rational(rng, -3, 3, 2), b);
}

inline cel::rootsys::CartanVector cartan(Rng& rng, int rank, bool imaginary = false) {
  auto v = cel::rootsys::CartanVector::zero(rank, imaginary);
  for (auto& c : v.coords) c = rational(rng, -6, 6, 4);
  return v;
}

inline cel::balanced::AdaptedMetricWeights weights(Rng& rng, const cel::rootsys::FlagDecomposition& flag) {
  std::vector<cel::Rational> g;
  for (int j = 0; j < flag.module_count(); ++j) g.push_back(positive_rational(rng));
  return cel::balanced::AdaptedMetricWeights::make(flag, g);
}

}  // namespace gen
