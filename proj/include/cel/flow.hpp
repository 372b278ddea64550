/// @file flow.hpp
/// @brief Hermitian curvature flow on the adapted family (g1, g2, h0):
/// h' = h − S(h) (normalized) or h' = −S(h) (unnormalized), classical RK4.
#pragma once

#include "cel/classc.hpp"
#include "cel/errors.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cel::flow {

using classc::ClassCParams;
using classc::InvariantMetric;

enum class Variant { Normalized, Unnormalized };
enum class Outcome { Converged, Blowup, MaxTime };

std::string to_string(Variant v);
std::string to_string(Outcome o);
/// "normalized" / "unnormalized"; throws std::invalid_argument otherwise.
Variant parse_variant(const std::string& s);

/// Thrown when an RK stage or the step result leaves the positive cone.
class PositivityViolation : public NumericFailure {
 public:
  PositivityViolation(std::string component, double value);
  const std::string& component() const { return component_; }
  double value() const { return value_; }

 private:
  std::string component_;
  double value_;
};

/// Right-hand side of the flow at a metric.
std::array<double, 3> vector_field(const ClassCParams& p, const InvariantMetric& m, Variant v);

/// One RK4 step. dt = 0 returns the metric unchanged; dt < 0 is rejected.
InvariantMetric step(const ClassCParams& p, const InvariantMetric& m, Variant v, double dt);

/// max |h − S(h)| over the three blocks.
double fixed_point_residual(const ClassCParams& p, const InvariantMetric& m);

struct Sample {
  double t = 0;
  InvariantMetric metric;
  classc::RicciData ricci;
  double residual = 0;
};

struct FlowOptions {
  double dt = 1e-3;
  double t_max = 10.0;
  double tol = 1e-10;
  int sample_stride = 100;  // record every stride-th step (and the terminal state)
  /// Stop as soon as the residual drops below tol.
  bool stop_at_fixed_point = true;
  double lower_bound = 1e-8;
  double upper_bound = 1e8;
};

struct FlowTrajectory {
  ClassCParams params;
  Variant variant = Variant::Normalized;
  std::vector<Sample> samples;
  Outcome outcome = Outcome::MaxTime;
  std::optional<double> blowup_time;
  std::string blowup_reason;
  const Sample& terminal() const { return samples.back(); }
};

/// Throws std::invalid_argument for nonpositive dt, t_max, tol or initial metric.
FlowTrajectory integrate(const ClassCParams& p, const InvariantMetric& m0, Variant v, const FlowOptions& opts);

struct Linearization {
  std::array<std::array<double, 3>, 3> jacobian{};
  std::array<std::complex<double>, 3> eigenvalues{};
};

/// Central differences of the normalized field, relative step 1e−6.
Linearization linearization(const ClassCParams& p, const InvariantMetric& m);

/// Header t,g1,g2,h0,s_n1,s_n2,s_t,residual and one row per sample.
void write_csv(std::ostream& os, const FlowTrajectory& traj);

}  // namespace cel::flow
