// celab: Chern-Einstein solver, Hermitian curvature flow, obstructions and
// balanced constructions on homogeneous spaces.
//
// Exit codes: 0 success, 1 usage, 2 numeric failure, 3 verification failure.

#include "cel/acceptance.hpp"
#include "cel/balanced.hpp"
#include "cel/classc.hpp"
#include "cel/einstein.hpp"
#include "cel/errors.hpp"
#include "cel/flow.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;
using namespace cel;

constexpr const char* kSchema = "chern-einstein-lab/1";

json exact(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"value", to_double(r)}};
}

json exact_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(exact(x));
  return out;
}

json cplx_json(const std::complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json metric_json(const classc::InvariantMetric& m) { return {{"g1", m.g1}, {"g2", m.g2}, {"h0", m.h0}}; }

json ricci_json(const classc::RicciData& r) { return {{"s_n1", r.s_n1}, {"s_n2", r.s_n2}, {"s_t", r.s_t}}; }

json params_json(const classc::ClassCParams& p) {
  return {{"n1", p.n1}, {"n2", p.n2}, {"a", exact(p.a)}, {"b", exact(p.b)}, {"kappa", exact(p.kappa())}};
}

json cartan_json(const rootsys::CartanVector& v) {
  return {{"imaginary", v.imaginary}, {"coords", exact_list(v.coords)}};
}

json root_json(const rootsys::Root& r) {
  json out = json::array();
  for (size_t k = 0; k < r.size(); ++k) out.push_back(r[k]);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& r : parse_rational_list(text)) {
    if (denominator(r) != 1) throw std::invalid_argument("expected integers, got " + to_string(r));
    out.push_back(static_cast<int>(numerator(r).convert_to<long>()));
  }
  return out;
}

void emit(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open " + path + " for writing");
  os << doc.dump(2) << "\n";
}

struct ClassCFlags {
  int n1 = 1;
  int n2 = 1;
  std::string a = "0";
  std::string b = "1";

  void add(CLI::App* cmd) {
    cmd->add_option("--n1", n1, "dimension of the first projective factor")->check(CLI::PositiveNumber);
    cmd->add_option("--n2", n2, "dimension of the second projective factor")->check(CLI::PositiveNumber);
    cmd->add_option("--a", a, "complex structure parameter a (rational)");
    cmd->add_option("--b", b, "complex structure parameter b != 0 (rational)");
  }
  classc::ClassCParams params() const {
    return classc::ClassCParams::make(n1, n2, parse_rational(a), parse_rational(b));
  }
};

struct MetricFlags {
  double g1 = 1;
  double g2 = 1;
  double h0 = 1;

  void add(CLI::App* cmd) {
    cmd->add_option("--g1", g1, "weight on the first factor");
    cmd->add_option("--g2", g2, "weight on the second factor");
    cmd->add_option("--h0", h0, "weight on the torus");
  }
  classc::InvariantMetric metric() const {
    classc::InvariantMetric m{g1, g2, h0};
    classc::require_positive(m);
    return m;
  }
};

int run_einstein(const ClassCFlags& f, const std::string& out) {
  const auto p = f.params();
  const auto sols = einstein::solve(p);
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "einstein";
  doc["params"] = params_json(p);
  json arr = json::array();
  json skt = json::array();
  for (const auto& s : sols) {
    json e = {{"g1", s.metric.g1}, {"g2", s.metric.g2}, {"h0", s.metric.h0}, {"x", s.x},
              {"y", s.y},          {"z", s.z},          {"residual", s.residual}, {"mu", s.mu}};
    if (s.exact) {
      e["exact"] = {{"g1", exact(s.exact->g1)}, {"g2", exact(s.exact->g2)}, {"h0", exact(s.exact->h0)}};
      skt.push_back(exact(classc::skt_obstruction_value(p.n1, s.exact->h0)));
    } else {
      skt.push_back({{"value", -s.metric.h0 / (4.0 * p.n1 * p.n1)}});
    }
    arr.push_back(e);
  }
  doc["solutions"] = arr;
  if (p.kappa() == 1) {
    const auto u = einstein::uniqueness_report(p);
    doc["uniqueness"] = {{"d", exact(u.discriminant)},
                         {"band_ok", u.band_ok},
                         {"cubic_band_ok", u.cubic_band_ok},
                         {"root_count", u.root_count},
                         {"roots", u.roots},
                         {"roots_in_interval", u.roots_in_interval}};
  }
  doc["first_ricci"] = ricci_json(classc::first_ricci(p));
  doc["skt_obstruction_value"] = skt;
  emit(doc, out);
  return 0;
}

struct FlowFlags {
  std::string variant = "normalized";
  double dt = 1e-3;
  double t_max = 10;
  double tol = 1e-10;
  int stride = 100;
  std::string csv;
};

int run_flow(const ClassCFlags& f, const MetricFlags& mf, const FlowFlags& ff, const std::string& out) {
  const auto p = f.params();
  const auto m0 = mf.metric();
  flow::FlowOptions opts;
  opts.dt = ff.dt;
  opts.t_max = ff.t_max;
  opts.tol = ff.tol;
  opts.sample_stride = ff.stride;
  const auto v = flow::parse_variant(ff.variant);
  if (!ff.csv.empty()) {
    // fail before integrating on an unwritable path
    std::ofstream probe(ff.csv);
    if (!probe) throw std::invalid_argument("cannot open " + ff.csv + " for writing");
  }
  const auto traj = flow::integrate(p, m0, v, opts);
  if (!ff.csv.empty()) {
    std::ofstream os(ff.csv);
    flow::write_csv(os, traj);
    if (!os) throw std::invalid_argument("failed writing " + ff.csv);
  }
  const auto& term = traj.terminal();
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "flow";
  doc["params"] = params_json(p);
  doc["variant"] = flow::to_string(v);
  doc["options"] = {{"dt", opts.dt}, {"t_max", opts.t_max}, {"tol", opts.tol}, {"sample_stride", opts.sample_stride}};
  doc["initial"] = metric_json(m0);
  doc["outcome"] = flow::to_string(traj.outcome);
  doc["terminal"] = {{"t", term.t},
                     {"metric", metric_json(term.metric)},
                     {"ricci", ricci_json(term.ricci)},
                     {"residual", term.residual}};
  doc["blowup_time"] = traj.blowup_time ? json(*traj.blowup_time) : json(nullptr);
  doc["blowup_reason"] = traj.blowup_reason;
  doc["samples"] = traj.samples.size();
  doc["csv"] = ff.csv.empty() ? json(nullptr) : json(ff.csv);
  emit(doc, out);
  return 0;
}

int run_obstructions(const ClassCFlags& f, const MetricFlags& mf, double xi1, double xi2, const std::string& out) {
  const auto p = f.params();
  const auto m = mf.metric();
  const auto skt = classc::skt_obstruction(p, m, classc::Direction::e(0, 0), classc::Direction::e(0, 0));
  const auto ddbar = classc::ddbar_witness(p, xi1, xi2);
  const auto st = classc::validate_structure(p);
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "obstructions";
  doc["params"] = params_json(p);
  doc["metric"] = metric_json(m);
  doc["skt"] = {{"witness", skt.witness},
                {"value", exact(*skt.exact)},
                {"realized", skt.realized ? cplx_json(*skt.realized) : json(nullptr)}};
  doc["ddbar"] = {{"witness", ddbar.witness},
                  {"xi", {xi1, xi2}},
                  {"value", cplx_json(ddbar.value)},
                  {"realized", ddbar.realized ? cplx_json(*ddbar.realized) : json(nullptr)},
                  {"type_residual", classc::ddbar_type_residual(p, xi1, xi2)}};
  json jt = json::array();
  for (int r = 0; r < 2; ++r) jt.push_back(exact_list({st.j_t(r, 0), st.j_t(r, 1)}));
  doc["structure"] = {{"j_t", jt},
                      {"squares_to_minus_identity", st.squares_to_minus_identity},
                      {"nijenhuis_residual", st.nijenhuis_residual}};
  emit(doc, out);
  return 0;
}

struct BalancedFlags {
  int rank = 3;
  std::string painted;
  std::string c;
  std::string weights;
  std::string center;
  bool check_only = false;
};

json flag_json(const rootsys::FlagDecomposition& fl) {
  json modules = json::array();
  for (const auto& mod : fl.modules) {
    json roots = json::array();
    for (const auto& r : mod) roots.push_back(root_json(r));
    modules.push_back(roots);
  }
  json n = json::array();
  for (const auto& row : fl.n_matrix) n.push_back(exact_list(row));
  return {{"painted", fl.painted}, {"center_dim", fl.center_dim}, {"modules", modules},
          {"t_roots", fl.t_roots}, {"n_matrix", n}};
}

json verdict_json(const balanced::BalancedVerdict& v) {
  return {{"balanced", v.balanced}, {"coords", exact_list(v.coords)}, {"remainder", cartan_json(v.remainder)}};
}

int run_balanced(const BalancedFlags& f, const std::string& out) {
  if (f.painted.empty()) throw std::invalid_argument("--painted is required");
  const auto rs = rootsys::RootSystem::type_a(f.rank);
  const auto fl = rootsys::flag_decompose(rs, parse_int_list(f.painted));
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "balanced";
  doc["rank"] = f.rank;
  doc["mode"] = f.check_only ? "check" : "construct";
  doc["flag"] = flag_json(fl);
  if (f.check_only) {
    const auto w = f.weights.empty() ? balanced::AdaptedMetricWeights::uniform(fl)
                                     : balanced::AdaptedMetricWeights::make(fl, parse_rational_list(f.weights));
    std::vector<rootsys::CartanVector> center;
    if (!f.center.empty())
      for (int j : parse_int_list(f.center)) {
        if (j < 1 || j > fl.center_dim) throw std::invalid_argument("--center indices must lie in 1..b2");
        center.push_back(rootsys::times_i(rootsys::zeta(rs, fl, j - 1)));
      }
    const auto verdict = balanced::is_balanced(rs, fl, w, static_cast<int>(center.size()), center);
    doc["weights"] = exact_list(w.g);
    doc["delta_h"] = cartan_json(balanced::delta_h(rs, fl, w));
    doc["center"] = json::array();
    for (const auto& v : center) doc["center"].push_back(cartan_json(v));
    doc["verdict"] = verdict_json(verdict);
  } else {
    std::optional<std::vector<Rational>> c;
    if (!f.c.empty()) c = parse_rational_list(f.c);
    const auto bc = balanced::construct_balanced(rs, fl, c);
    json lattice_coords = json::array();
    for (const auto& x : bc.lattice.coords) lattice_coords.push_back(x.str());
    json tt = json::array();
    for (const auto& v : bc.t_tilde) tt.push_back(cartan_json(v));
    json fib = json::array();
    for (const auto& v : bc.fiber) fib.push_back(cartan_json(v));
    doc["c"] = exact_list(bc.c);
    doc["n_column_sums"] = exact_list(bc.n_column_sums);
    doc["weights"] = exact_list(bc.weights.g);
    doc["delta_h"] = cartan_json(bc.delta_h);
    doc["lattice"] = {{"lambda", bc.lattice.lambda.str()}, {"coords", lattice_coords}};
    doc["t_tilde"] = tt;
    doc["fiber"] = fib;
    doc["torus_dims"] = {{"dim", bc.torus_dims.first}, {"codim", bc.torus_dims.second}};
    doc["verdict"] = verdict_json(bc.verdict);
    doc["residual_zero"] = bc.residual_zero;
  }
  emit(doc, out);
  return 0;
}

int run_verify(int jobs, int criterion) {
  std::vector<acceptance::CriterionResult> results;
  if (criterion > 0)
    results.push_back(acceptance::run_criterion(criterion, jobs));
  else
    for (int id = 1; id <= acceptance::kCriteria; ++id) {
      results.push_back(acceptance::run_criterion(id, jobs));
      std::cout << acceptance::format_line(results.back()) << std::endl;
    }
  bool ok = true;
  for (const auto& r : results) {
    if (criterion > 0) std::cout << acceptance::format_line(r) << "\n";
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern-Einstein metrics and related invariants on homogeneous spaces"};
  app.require_subcommand(1);
  std::string out;

  ClassCFlags cf;
  MetricFlags mf;
  FlowFlags ff;
  BalancedFlags bf;
  double xi1 = 1;
  double xi2 = 0;
  int jobs = 1;
  int criterion = 0;

  auto* einstein_cmd = app.add_subcommand("einstein", "solve the Chern-Einstein system on a class C pair");
  cf.add(einstein_cmd);
  einstein_cmd->add_option("-o,--output", out, "write JSON here instead of stdout");

  auto* flow_cmd = app.add_subcommand("flow", "integrate the Hermitian curvature flow");
  cf.add(flow_cmd);
  mf.add(flow_cmd);
  flow_cmd->add_option("--variant", ff.variant, "normalized | unnormalized");
  flow_cmd->add_option("--dt", ff.dt, "RK4 step");
  flow_cmd->add_option("--tmax", ff.t_max, "final time");
  flow_cmd->add_option("--tol", ff.tol, "fixed point tolerance");
  flow_cmd->add_option("--stride", ff.stride, "record every stride-th step")->check(CLI::PositiveNumber);
  flow_cmd->add_option("--out", ff.csv, "trajectory CSV path");
  flow_cmd->add_option("-o,--output", out, "write the JSON summary here instead of stdout");

  auto* obs_cmd = app.add_subcommand("obstructions", "SKT and ddbar obstructions, integrability of J");
  cf.add(obs_cmd);
  mf.add(obs_cmd);
  obs_cmd->add_option("--xi1", xi1, "Z1 coefficient of the ddbar witness");
  obs_cmd->add_option("--xi2", xi2, "Z2 coefficient of the ddbar witness");
  obs_cmd->add_option("-o,--output", out, "write JSON here instead of stdout");

  auto* bal_cmd = app.add_subcommand("balanced", "balanced metrics over a type A flag manifold");
  bal_cmd->add_option("--rank", bf.rank, "rank of A_l")->check(CLI::Range(1, 12));
  bal_cmd->add_option("--painted", bf.painted, "painted simple roots, e.g. 1,2,3")->required();
  bal_cmd->add_option("--c", bf.c, "construction constants c_1,...,c_t");
  bal_cmd->add_flag("--check-only", bf.check_only, "test given weights instead of constructing");
  bal_cmd->add_option("--weights", bf.weights, "module weights g_1,...,g_s (check mode)");
  bal_cmd->add_option("--center", bf.center, "indices j with i*zeta_j spanning the center of l (check mode)");
  bal_cmd->add_option("-o,--output", out, "write JSON here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--jobs", jobs, "worker threads for grid sweeps")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--criterion", criterion, "run a single check")->check(CLI::Range(1, acceptance::kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*einstein_cmd) return run_einstein(cf, out);
    if (*flow_cmd) return run_flow(cf, mf, ff, out);
    if (*obs_cmd) return run_obstructions(cf, mf, xi1, xi2, out);
    if (*bal_cmd) return run_balanced(bf, out);
    if (*verify_cmd) return run_verify(jobs, criterion);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
