/// @file acceptance.cpp
#include "cel/acceptance.hpp"

#include "cel/balanced.hpp"
#include "cel/classc.hpp"
#include "cel/einstein.hpp"
#include "cel/flow.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace cel::acceptance {

namespace {

using classc::ClassCParams;
using classc::InvariantMetric;

/// Collects the first failure; safe to share between worker threads.
class Failures {
 public:
  void fail(const std::string& what) {
    std::lock_guard<std::mutex> lock(mu_);
    if (first_.empty()) first_ = what;
    ++count_;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  bool ok() const { return count_ == 0; }
  struct Outcome {
    bool ok;
    std::string detail;
  };
  Outcome summary(const std::string& success) const {
    if (count_ == 0) return {true, success};
    return {false, first_ + (count_ > 1 ? " (+" + std::to_string(count_ - 1) + " more)" : "")};
  }

 private:
  std::mutex mu_;
  std::string first_;
  int count_ = 0;
};

std::string pair_label(int n1, int n2) { return "(" + std::to_string(n1) + "," + std::to_string(n2) + ")"; }

struct KappaCase {
  Rational a;
  Rational b;
};

/// κ = 1/2, 1, 2.
const std::vector<KappaCase>& kappa_cases() {
  static const std::vector<KappaCase> cases = {{1, 2}, {0, 1}, {1, 1}};
  return cases;
}

InvariantMetric random_metric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> g(0.1, 3.0);
  std::uniform_real_distribution<double> h(0.1, 5.0);
  InvariantMetric m;
  m.g1 = g(rng);
  m.g2 = g(rng);
  m.h0 = h(rng);
  return m;
}

Failures::Outcome criterion1(int jobs, int& checks) {
  Failures f;
  std::atomic<int> count{0};
  parallel_for(50, jobs, [&](int i) {
    const int n = i + 1;
    const auto params = ClassCParams::make(n, n, 0, 1);
    const Rational g(n, 2 * n + 1);
    const Rational h0 = Rational(8 * n * n * n, (2 * n + 1) * (2 * n + 1));
    auto sols = einstein::solve(params);
    f.check(sols.size() == 1, "solve" + pair_label(n, n) + " returned " + std::to_string(sols.size()) + " solutions");
    if (!sols.empty()) {
      const auto& m = sols.front().metric;
      f.check(std::abs(m.g1 - to_double(g)) < 1e-12 && std::abs(m.g2 - to_double(g)) < 1e-12 &&
                  std::abs(m.h0 - to_double(h0)) < 1e-12,
              "solve" + pair_label(n, n) + " misses the symmetric metric");
    }
    auto sym = einstein::symmetric_solution(n);
    f.check(sym.exact && sym.exact->g1 == g && sym.exact->h0 == h0, "symmetric_solution(" + std::to_string(n) + ")");
    f.check(einstein::exact_residual(params, *sym.exact) == 0,
            "symmetric_solution(" + std::to_string(n) + ") is not an exact Einstein metric");
    f.check(einstein::phi(n, n, 1, 1 / g) == 0, "phi does not vanish at the symmetric root, n=" + std::to_string(n));
    count += 5;
  });
  checks = count;
  return f.summary("n = 1..50 exact and solver agree");
}

Failures::Outcome criterion2(int jobs, int& checks) {
  Failures f;
  std::atomic<int> count{0};
  parallel_for(30, jobs, [&](int i) {
    const int n1 = i + 1;
    for (int n2 = 1; n2 <= 30; ++n2) {
      const std::string at = pair_label(n1, n2);
      f.check(einstein::phi(n1, n2, 1, 2 + Rational(2, n1)) == Rational(8, n1 * n2), "phi(2+2/n1) anchor at " + at);
      const Rational s(n1 + n2 + 1);
      const Rational endpoint = 8 * n2 * s * s / Rational(n1 * n1 * n1 * n1);
      for (const auto& kc : kappa_cases()) {
        const Rational kappa = (1 + kc.a * kc.a) / (kc.b * kc.b);
        const std::string atk = at + " kappa=" + to_string(kappa);
        f.check(einstein::phi(n1, n2, kappa, einstein::search_bound(n1, n2)) == endpoint, "endpoint anchor at " + atk);
        f.check(einstein::phi(n1, n2, kappa, 0) < 0, "phi(0) < 0 fails at " + atk);
        f.check(einstein::phi(n1, n2, kappa, 2) < 0, "phi(2) < 0 fails at " + atk);
        count += 3;
      }
      ++count;
    }
  });
  checks = count;
  return f.summary("30x30 grid exact");
}

Failures::Outcome criterion3(int jobs, int& checks) {
  Failures f;
  std::atomic<int> count{0};
  parallel_for(30, jobs, [&](int i) {
    const int n1 = i + 1;
    for (int n2 = 1; n2 <= 30; ++n2) {
      const std::string at = pair_label(n1, n2);
      auto sols = einstein::solve(ClassCParams::make(n1, n2, 0, 1));
      f.check(sols.size() == 1, at + ": " + std::to_string(sols.size()) + " admissible roots");
      for (const auto& s : sols) {
        f.check(s.x > 2 && s.x <= 2 + 2.0 / n1, at + ": root outside (2, 2+2/n1]");
        f.check(s.residual < 1e-10, at + ": residual " + format_double(s.residual));
      }
      ++count;
    }
  });
  auto rep = einstein::uniqueness_report(2, 2);
  f.check(rep.discriminant == -2880, "d(2,2) = " + to_string(rep.discriminant));
  f.check(rep.root_count == 1, "uniqueness_report(2,2) root count");
  for (int n = 1; n <= 20; ++n) {
    Rational n6 = Rational(n) * n * n * n * n * n;
    f.check(einstein::discriminant(n, n) == 3 * n6 - 12 * n6 * n * n, "d(n,n) identity at n=" + std::to_string(n));
  }
  checks = count + 22;
  return f.summary("unique admissible root on the 30x30 grid, d(2,2) = -2880");
}

Failures::Outcome criterion4(int jobs, int& checks) {
  Failures f;
  const std::vector<std::pair<int, int>> pairs = {{1, 1}, {1, 2}, {2, 2}, {3, 2}};
  std::atomic<int> count{0};
  parallel_for(static_cast<int>(pairs.size()), jobs, [&](int i) {
    auto [n1, n2] = pairs[static_cast<size_t>(i)];
    std::mt19937_64 rng(20240 + static_cast<unsigned>(i));
    for (int k = 0; k < 20; ++k) {
      const InvariantMetric m = random_metric(rng);
      for (const auto& kc : kappa_cases()) {
        const auto p = ClassCParams::make(n1, n2, kc.a, kc.b);
        const auto closed = classc::second_ricci(p, m);
        const auto oracle = classc::oracle_second_ricci(p, m);
        const double err = std::max({std::abs(closed.s_n1 - oracle.s_n1), std::abs(closed.s_n2 - oracle.s_n2),
                                     std::abs(closed.s_t - oracle.s_t)});
        f.check(err < 1e-10, "second Ricci mismatch " + format_double(err) + " at " + pair_label(n1, n2) +
                                 " kappa=" + to_string(p.kappa()));
        const auto rho = classc::oracle_first_ricci(p, m);
        f.check(std::abs(rho.s_n1 - 0.5) < 1e-10 && std::abs(rho.s_n2 - 0.5) < 1e-10 && std::abs(rho.s_t) < 1e-10,
                "first Ricci trace differs from (1/2, 1/2, 0) at " + pair_label(n1, n2));
        count += 2;
      }
    }
  });
  checks = count;
  return f.summary("oracle matches closed forms below 1e-10");
}

Failures::Outcome criterion5(int, int& checks) {
  Failures f;
  int count = 0;
  std::mt19937_64 rng(777);
  const std::vector<std::pair<int, int>> pairs = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
  for (int k = 0; k < 100; ++k) {
    auto [n1, n2] = pairs[static_cast<size_t>(k) % pairs.size()];
    const auto& kc = kappa_cases()[static_cast<size_t>(k) % 3];
    const auto p = ClassCParams::make(n1, n2, kc.a, kc.b);
    const InvariantMetric m = random_metric(rng);
    const int alpha = k % n1;
    const int beta = (k / 2) % n1;
    auto rep = classc::skt_obstruction(p, m, classc::Direction::e(0, alpha), classc::Direction::e(0, beta));
    const Rational expected = -Rational(m.h0) / (4 * n1 * n1);
    f.check(rep.exact && *rep.exact == expected, "SKT exact value");
    f.check(rep.value.real() < 0 && rep.value != 0.0, "SKT value vanishes");
    f.check(rep.realized && std::abs(*rep.realized - rep.value) < 1e-12, "SKT realized value differs");
    count += 3;
  }
  for (auto [n1, n2] : pairs) {
    const auto p = ClassCParams::make(n1, n2, 1, 2);
    for (auto [x1, x2] : std::vector<std::pair<double, double>>{{1, 0}, {0, 1}, {0.5, -2}}) {
      auto rep = classc::ddbar_witness(p, x1, x2);
      f.check(std::abs(rep.value) > 0.1, "ddbar witness vanishes");
      f.check(rep.realized && std::abs(*rep.realized - rep.value) < 1e-12, "ddbar realized value differs");
      f.check(classc::ddbar_type_residual(p, x1, x2) < 1e-12, "ddbar form is not of type (1,1)");
      count += 3;
    }
  }
  for (int a = -2; a <= 2; ++a)
    for (int b : {-2, -1, 1, 2, 3}) {
      auto s = classc::validate_structure(ClassCParams::make(2, 1, a, b));
      f.check(s.squares_to_minus_identity, "J_t^2 != -1");
      f.check(s.nijenhuis_residual < 1e-12, "Nijenhuis residual " + format_double(s.nijenhuis_residual));
      count += 2;
    }
  checks = count;
  return f.summary("SKT and ddbar obstructions nonzero, J integrable on the 5x5 grid");
}

Failures::Outcome criterion6(int jobs, int& checks) {
  Failures f;
  const auto p = ClassCParams::make(2, 2, 0, 1);
  const auto einstein_metric = einstein::solve(p).front().metric;
  flow::FlowOptions eq;
  eq.dt = 1e-3;
  eq.t_max = 10;
  eq.sample_stride = 1;
  eq.stop_at_fixed_point = false;
  auto traj = flow::integrate(p, einstein_metric, flow::Variant::Normalized, eq);
  double drift = 0;
  for (const auto& s : traj.samples)
    drift = std::max({drift, std::abs(s.metric.g1 - einstein_metric.g1), std::abs(s.metric.g2 - einstein_metric.g2),
                      std::abs(s.metric.h0 - einstein_metric.h0)});
  f.check(traj.samples.back().t >= 10 - 1e-9, "equilibrium run stopped early");
  f.check(drift < 1e-8, "equilibrium drift " + format_double(drift));

  std::vector<InvariantMetric> starts;
  for (double g1 : {0.25, 0.5, 1.0, 2.0})
    for (double g2 : {0.25, 0.5, 1.0, 2.0})
      for (double h0 : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        InvariantMetric m{g1, g2, h0};
        auto s = classc::second_ricci(p, m);
        if (s.s_n1 > 0 && s.s_n2 > 0 && s.s_t > 0) starts.push_back(m);
      }
  std::atomic<int> nonconvergent{0};
  parallel_for(static_cast<int>(starts.size()), jobs, [&](int i) {
    flow::FlowOptions o;
    o.t_max = 100;
    auto t = flow::integrate(p, starts[static_cast<size_t>(i)], flow::Variant::Normalized, o);
    if (t.outcome != flow::Outcome::Converged) ++nonconvergent;
  });
  f.check(nonconvergent > 0, "every positive-Ricci start converged");
  checks = 2 + static_cast<int>(starts.size());
  return f.summary("equilibrium drift " + format_double(drift) + "; " + std::to_string(nonconvergent.load()) + "/" +
                   std::to_string(starts.size()) + " positive-Ricci starts do not converge");
}

std::vector<std::vector<int>> all_painted_sets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << rank); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < rank; ++k)
      if (mask & (1 << k)) s.push_back(k + 1);
    out.push_back(std::move(s));
  }
  return out;
}

Failures::Outcome criterion7(int, int& checks) {
  using namespace balanced;
  Failures f;
  int count = 0;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  auto random_weights = [&](const FlagDecomposition& fl) {
    std::vector<Rational> g;
    for (int j = 0; j < fl.module_count(); ++j) g.emplace_back(num(rng), den(rng));
    return AdaptedMetricWeights::make(fl, g);
  };

  for (int rank = 2; rank <= 4; ++rank) {
    auto rs = RootSystem::type_a(rank);
    for (const auto& painted : all_painted_sets(rank)) {
      auto fl = rootsys::flag_decompose(rs, painted);
      for (int j = 0; j < fl.module_count(); ++j)
        for (const auto& gamma : fl.r_h) {
          f.check(rs.pairing(gamma, rootsys::zeta(rs, fl, j)).is_zero(), "zeta centrality fails");
          ++count;
        }
      // M-manifold: l semisimple, nothing of z survives in l
      auto w = random_weights(fl);
      f.check(!is_balanced(rs, fl, w, 0, {}).balanced, "M-manifold reported balanced");
      f.check(!delta_h(rs, fl, w).is_zero(), "delta_h vanishes");
      count += 2;
    }
  }

  auto rs = RootSystem::type_a(3);
  auto fl = rootsys::flag_decompose(rs, {1, 2, 3});
  {
    std::vector<CartanVector> z;
    for (int j = 0; j < 3; ++j) z.push_back(rootsys::times_i(rootsys::zeta(rs, fl, j)));
    HomogeneousSpace space(rs, fl, random_weights(fl), z);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        auto d = levi_civita(space, space.fiber_index(a), space.fiber_index(b));
        f.check(std::all_of(d.begin(), d.end(), [](const Gaussian& x) { return x.is_zero(); }), "D_t t != 0");
        ++count;
      }
    const Gaussian scale(rs.trace_form_scale() / 2);
    for (int r = 0; r < space.root_count(); ++r) {
      auto d = levi_civita(space, space.positive_index(r), space.negative_index(r));
      auto expected = space.torus_part(rootsys::dual_element(rs, fl.r_n_pos[static_cast<size_t>(r)]));
      for (auto& x : expected) x *= scale;
      f.check(d == expected, "D_{E_a}E_{-a} != (1/2)(H_a)_t");
      ++count;
    }
  }

  int balanced_cases = 0;
  const std::vector<CartanVector> fixed_fiber = {rootsys::times_i(rootsys::zeta(rs, fl, 0)),
                                                 rootsys::times_i(rootsys::zeta(rs, fl, 1))};
  for (int k = 0; k < 50; ++k) {
    auto w = random_weights(fl);
    std::vector<CartanVector> fiber = fixed_fiber;
    if (k % 2 == 0) {
      CartanVector d = delta_h(rs, fl, w);
      d.imaginary = true;
      fiber = center_complement(rs, fl, {d});
    }
    auto l_center = center_complement(rs, fl, fiber);
    HomogeneousSpace space(rs, fl, w, fiber);
    const bool by_residual = balanced_residual(space).is_zero();
    const bool criterion = is_balanced(rs, fl, w, static_cast<int>(l_center.size()), l_center).balanced;
    f.check(by_residual == criterion, "residual criterion and center criterion disagree at sample " + std::to_string(k));
    if (criterion) ++balanced_cases;
    ++count;
  }
  f.check(balanced_cases > 0 && balanced_cases < 50, "equivalence sample is one-sided");

  auto bc = construct_balanced(rs, fl);
  f.check(bc.verdict.balanced && bc.residual_zero, "A3 construction is not balanced");
  f.check(bc.torus_dims.second % 2 == 0, "torus codimension is odd");
  f.check(bc.c == std::vector<Rational>{3, 4, 3}, "default c differs from (3,4,3)");
  count += 4;
  checks = count;
  return f.summary("exact on A2-A4; " + std::to_string(balanced_cases) + "/50 equivalence samples balanced");
}

struct CriterionDef {
  const char* name;
  double limit;
  Failures::Outcome (*run)(int, int&);
};

const CriterionDef kCriteriaTable[kCriteria] = {
    {"exact symmetric solutions", 5, criterion1},
    {"phi anchors", 5, criterion2},
    {"existence and uniqueness", 30, criterion3},
    {"oracle equivalence", 60, criterion4},
    {"obstructions", 30, criterion5},
    {"flow", 120, criterion6},
    {"balanced metrics", 30, criterion7},
};

}  // namespace

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

CriterionResult run_criterion(int id, int jobs) {
  if (id < 1 || id > kCriteria) throw std::invalid_argument("criterion id must be in 1.." + std::to_string(kCriteria));
  const CriterionDef& def = kCriteriaTable[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.time_limit = def.limit;
  const auto start = std::chrono::steady_clock::now();
  int checks = 0;
  Failures::Outcome out{false, ""};
  try {
    out = def.run(jobs, checks);
  } catch (const std::exception& e) {
    out.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = out.detail;
  r.passed = out.ok && r.seconds <= r.time_limit;
  if (out.ok && !r.passed) r.detail += "; time limit exceeded";
  return r;
}

std::vector<CriterionResult> run_all(int jobs) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, jobs));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.seconds << " s / " << static_cast<int>(r.time_limit) << " s): " << r.detail;
  return os.str();
}

}  // namespace cel::acceptance
