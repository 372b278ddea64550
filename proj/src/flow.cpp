/// @file flow.cpp
#include "cel/flow.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace cel::flow {

std::string to_string(Variant v) { return v == Variant::Normalized ? "normalized" : "unnormalized"; }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Converged:
      return "converged";
    case Outcome::Blowup:
      return "blowup";
    case Outcome::MaxTime:
      return "max-time-reached";
  }
  return "unknown";
}

Variant parse_variant(const std::string& s) {
  if (s == "normalized") return Variant::Normalized;
  if (s == "unnormalized") return Variant::Unnormalized;
  throw std::invalid_argument("unknown flow variant '" + s + "' (expected normalized or unnormalized)");
}

PositivityViolation::PositivityViolation(std::string component, double value)
    : NumericFailure("metric left the positive cone: " + component + " = " + format_double(value)),
      component_(std::move(component)),
      value_(value) {}

namespace {

using State = std::array<double, 3>;

State to_state(const InvariantMetric& m) { return {m.g1, m.g2, m.h0}; }
InvariantMetric to_metric(const State& s) { return {s[0], s[1], s[2]}; }

void check_positive(const State& s) {
  static const char* names[] = {"g1", "g2", "h0"};
  for (size_t k = 0; k < 3; ++k)
    if (!(s[k] > 0)) throw PositivityViolation(names[k], s[k]);
}

State field(const ClassCParams& p, const State& s, Variant v) {
  check_positive(s);
  return vector_field(p, to_metric(s), v);
}

State add(const State& a, const State& b, double f) { return {a[0] + f * b[0], a[1] + f * b[1], a[2] + f * b[2]}; }

}  // namespace

std::array<double, 3> vector_field(const ClassCParams& p, const InvariantMetric& m, Variant v) {
  auto s = classc::second_ricci(p, m);
  if (v == Variant::Normalized) return {m.g1 - s.s_n1, m.g2 - s.s_n2, m.h0 - s.s_t};
  return {-s.s_n1, -s.s_n2, -s.s_t};
}

InvariantMetric step(const ClassCParams& p, const InvariantMetric& m, Variant v, double dt) {
  if (!(dt >= 0)) throw std::invalid_argument("dt must be nonnegative");
  const State y = to_state(m);
  check_positive(y);
  if (dt == 0) return m;
  const State k1 = field(p, y, v);
  const State k2 = field(p, add(y, k1, dt / 2), v);
  const State k3 = field(p, add(y, k2, dt / 2), v);
  const State k4 = field(p, add(y, k3, dt), v);
  State out;
  for (size_t k = 0; k < 3; ++k) out[k] = y[k] + dt / 6 * (k1[k] + 2 * k2[k] + 2 * k3[k] + k4[k]);
  check_positive(out);
  return to_metric(out);
}

double fixed_point_residual(const ClassCParams& p, const InvariantMetric& m) {
  auto f = vector_field(p, m, Variant::Normalized);
  return std::max({std::abs(f[0]), std::abs(f[1]), std::abs(f[2])});
}

FlowTrajectory integrate(const ClassCParams& p, const InvariantMetric& m0, Variant v, const FlowOptions& opts) {
  if (!(opts.dt > 0)) throw std::invalid_argument("dt must be positive");
  if (!(opts.t_max > 0)) throw std::invalid_argument("t_max must be positive");
  if (!(opts.tol > 0)) throw std::invalid_argument("tol must be positive");
  if (opts.sample_stride < 1) throw std::invalid_argument("sample stride must be >= 1");
  classc::require_positive(m0);

  FlowTrajectory traj;
  traj.params = p;
  traj.variant = v;
  auto record = [&](double t, const InvariantMetric& m) {
    traj.samples.push_back({t, m, classc::second_ricci(p, m), fixed_point_residual(p, m)});
  };
  auto out_of_bounds = [&](const InvariantMetric& m) {
    for (double c : {m.g1, m.g2, m.h0})
      if (!(c >= opts.lower_bound && c <= opts.upper_bound)) return true;
    return false;
  };

  InvariantMetric m = m0;
  record(0.0, m);
  if (opts.stop_at_fixed_point && traj.samples.back().residual < opts.tol) {
    traj.outcome = Outcome::Converged;
    return traj;
  }
  const long steps = static_cast<long>(std::ceil(opts.t_max / opts.dt - 1e-9));
  for (long k = 1; k <= steps; ++k) {
    const double t = std::min(k * opts.dt, opts.t_max);
    const double h = t - (k - 1) * opts.dt;
    InvariantMetric next;
    try {
      next = step(p, m, v, h);
    } catch (const PositivityViolation& e) {
      traj.outcome = Outcome::Blowup;
      traj.blowup_time = t;
      traj.blowup_reason = e.what();
      if (traj.samples.back().t != (k - 1) * opts.dt) record((k - 1) * opts.dt, m);
      return traj;
    }
    m = next;
    if (out_of_bounds(m)) {
      traj.outcome = Outcome::Blowup;
      traj.blowup_time = t;
      traj.blowup_reason = "coefficient outside [" + format_double(opts.lower_bound) + ", " +
                           format_double(opts.upper_bound) + "]";
      record(t, m);
      return traj;
    }
    const double res = fixed_point_residual(p, m);
    if (opts.stop_at_fixed_point && res < opts.tol) {
      record(t, m);
      traj.outcome = Outcome::Converged;
      return traj;
    }
    if (k % opts.sample_stride == 0 || k == steps) record(t, m);
  }
  traj.outcome = traj.samples.back().residual < opts.tol ? Outcome::Converged : Outcome::MaxTime;
  return traj;
}

Linearization linearization(const ClassCParams& p, const InvariantMetric& m) {
  classc::require_positive(m);
  Linearization lin;
  const State y = to_state(m);
  Eigen::Matrix3d jac;
  for (size_t c = 0; c < 3; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(y[c]));
    State up = y;
    State down = y;
    up[c] += h;
    down[c] -= h;
    const State fu = field(p, up, Variant::Normalized);
    const State fd = field(p, down, Variant::Normalized);
    for (size_t r = 0; r < 3; ++r) {
      lin.jacobian[r][c] = (fu[r] - fd[r]) / (2 * h);
      jac(static_cast<int>(r), static_cast<int>(c)) = lin.jacobian[r][c];
    }
  }
  Eigen::EigenSolver<Eigen::Matrix3d> es(jac, false);
  auto ev = es.eigenvalues();
  for (int k = 0; k < 3; ++k) lin.eigenvalues[static_cast<size_t>(k)] = ev(k);
  std::sort(lin.eigenvalues.begin(), lin.eigenvalues.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return lin;
}

void write_csv(std::ostream& os, const FlowTrajectory& traj) {
  os << "t,g1,g2,h0,s_n1,s_n2,s_t,residual\n";
  for (const auto& s : traj.samples) {
    os << format_double(s.t) << ',' << format_double(s.metric.g1) << ',' << format_double(s.metric.g2) << ','
       << format_double(s.metric.h0) << ',' << format_double(s.ricci.s_n1) << ',' << format_double(s.ricci.s_n2)
       << ',' << format_double(s.ricci.s_t) << ',' << format_double(s.residual) << '\n';
  }
}

}  // namespace cel::flow
