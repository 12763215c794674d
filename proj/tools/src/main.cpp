// Command line front end: recurrence tables, stepline polynomial
// coefficients and zeros, limiting zero densities, parameter-regime
// classification, S-curve traces, growth asymptotics, verification
// suites and SVG plots.
//
// Exit codes: 0 success, 1 numerical failure (including failed verify
// checks), 2 usage / parameter validation error.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meixner/curves.hpp"
#include "meixner/equilibrium.hpp"
#include "meixner/numerics.hpp"
#include "meixner/params.hpp"
#include "meixner/polyeval.hpp"
#include "meixner/regimes.hpp"
#include "meixner/scurve.hpp"
#include "meixner/transition.hpp"
#include "meixner/zeros.hpp"

using nlohmann::ordered_json;
using namespace meixner;

namespace {

// ---------------------------------------------------------------- output

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string num6(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

void write_json(const std::string& path, const ordered_json& j) {
  write_output(path, j.dump(2) + "\n");
}

// ------------------------------------------------------------ run config

struct Opts {
  std::string kind = "classical";
  double beta = 1.0;
  double beta1 = 1.0;
  double beta2 = 1.5;
  double c = 0.5;
  double c1 = 0.5;
  double c2 = 0.25;
  int n = 10;
  int grid = 400;
  double tol = 1e-3;
  std::string out;
  std::string format;  // empty -> per-command default
  std::string config;
  std::string measure = "lambda";
  std::string suite;
  std::string target = "density";
  std::vector<double> tvals;
  std::vector<int> nvals;
};

// One subcommand plus the bookkeeping needed to overlay a JSON config
// file under the flags (flags given on the command line always win).
struct Cmd {
  CLI::App* app = nullptr;
  Opts o;
  std::vector<std::function<void(const ordered_json&)>> appliers;

  template <class T>
  CLI::Option* opt(const std::string& flag, T& ref, const std::string& help) {
    CLI::Option* h = app->add_option(flag, ref, help);
    std::string key = flag.substr(flag.find_first_not_of('-'));
    appliers.push_back([h, &ref, key](const ordered_json& j) {
      if (h->count() == 0 && j.contains(key)) j.at(key).get_to(ref);
    });
    return h;
  }

  void apply_config() {
    if (o.config.empty()) return;
    std::ifstream f(o.config);
    if (!f) throw std::invalid_argument("cannot read config file: " + o.config);
    ordered_json j;
    try {
      j = ordered_json::parse(f);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("bad config file: ") + e.what());
    }
    for (auto& ap : appliers) ap(j);
  }

  std::string format_or(const std::string& dflt) const {
    return o.format.empty() ? dflt : o.format;
  }
};

ParamsClassical pc(const Opts& o) { return {o.beta, o.c}; }
ParamsFirst pf(const Opts& o) { return {o.beta, o.c1, o.c2}; }
ParamsSecond ps(const Opts& o) { return {o.beta1, o.beta2, o.c}; }

void require_kind(const Opts& o, const std::string& allowed,
                  const std::string& cmd) {
  if (allowed.find(o.kind) == std::string::npos)
    throw std::invalid_argument(cmd + ": --kind " + o.kind + " not supported");
}

// Commands defined only for the first-kind family imply --kind first; an
// explicit conflicting flag is an error, a config-file value is ignored.
Opts imply_first_kind(const Cmd& cmd, const std::string& name) {
  Opts o = cmd.o;
  const CLI::Option* op = cmd.app->get_option_no_throw("--kind");
  if (op != nullptr && op->count() > 0 && o.kind != "first")
    throw std::invalid_argument(name + ": --kind " + o.kind + " not supported");
  o.kind = "first";
  return o;
}

[[noreturn]] void bad_format(const std::string& cmd, const std::string& fmt) {
  throw std::invalid_argument(cmd + ": unsupported format '" + fmt + "'");
}

// right edge of supp(lambda): the largest real branch point
double right_edge(const Opts& o) {
  if (o.kind == "second") return branch_points_second(ps(o)).e2;
  if (o.kind == "first") {
    auto bp = branch_points_first(pf(o));
    if (bp.empty()) throw std::runtime_error("no real branch points");
    return bp.back();
  }
  return classical_edges(pc(o)).e2;
}

ordered_json params_json(const Opts& o) {
  ordered_json j;
  j["kind"] = o.kind;
  if (o.kind == "classical") {
    j["beta"] = o.beta;
    j["c"] = o.c;
  } else if (o.kind == "first") {
    j["beta"] = o.beta;
    j["c1"] = o.c1;
    j["c2"] = o.c2;
  } else {
    j["beta1"] = o.beta1;
    j["beta2"] = o.beta2;
    j["c"] = o.c;
  }
  return j;
}

// ---------------------------------------------------------------- coeffs

void run_coeffs(const Cmd& cmd) {
  const Opts& o = cmd.o;
  if (o.n < 0) throw std::invalid_argument("coeffs: --n must be >= 0");
  struct Row {
    int n1, n2;
    RecCoeffs rc;
  };
  std::vector<Row> rows;
  if (o.kind == "classical") {
    ParamsClassical p = pc(o);
    for (int k = 0; k <= o.n; ++k) rows.push_back({k, 0, rec_coeffs_classical(k, p)});
  } else if (o.kind == "first") {
    ParamsFirst p = pf(o);
    for (int k = 0; k <= o.n; ++k) rows.push_back({k, k, rec_coeffs_first({k, k}, p)});
  } else {
    ParamsSecond p = ps(o);
    for (int k = 0; k <= o.n; ++k) rows.push_back({k, k, rec_coeffs_second({k, k}, p)});
  }
  std::string fmt = cmd.format_or("csv");
  if (fmt == "csv") {
    std::string s = "n1,n2,b,c,d\n";
    for (const Row& r : rows)
      s += std::to_string(r.n1) + "," + std::to_string(r.n2) + "," + num(r.rc.b) +
           "," + num(r.rc.c) + "," + num(r.rc.d) + "\n";
    write_output(o.out, s);
  } else if (fmt == "json") {
    ordered_json j;
    j["params"] = params_json(o);
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows)
      arr.push_back({{"n1", r.n1}, {"n2", r.n2}, {"b", r.rc.b}, {"c", r.rc.c}, {"d", r.rc.d}});
    j["rows"] = arr;
    write_json(o.out, j);
  } else {
    bad_format("coeffs", fmt);
  }
}

// ------------------------------------------------------------------- gen

void run_gen(const Cmd& cmd) {
  const Opts& o = cmd.o;
  if (o.n < 0) throw std::invalid_argument("gen: --n must be >= 0");
  int deg = (o.kind == "classical") ? o.n : 2 * o.n;
  if (deg > 64)
    throw std::invalid_argument(
        "gen: coefficient form is only kept up to degree 64");
  SteplineSequence seq = (o.kind == "classical") ? build_stepline(pc(o), deg)
                         : (o.kind == "first")   ? build_stepline(pf(o), deg)
                                                 : build_stepline(ps(o), deg);
  std::string fmt = cmd.format_or("csv");
  if (fmt == "csv") {
    std::string s = "k,n1,n2,j,coeff\n";
    for (int k = 0; k <= deg; ++k) {
      MultiIndex idx = (o.kind == "classical") ? MultiIndex{k, 0} : seq.index_of(k);
      const MonicPoly& p = seq.polys[k];
      for (int j = 0; j <= k; ++j)
        s += std::to_string(k) + "," + std::to_string(idx.n1) + "," +
             std::to_string(idx.n2) + "," + std::to_string(j) + "," +
             num(p.coeffs[j]) + "\n";
    }
    write_output(o.out, s);
  } else if (fmt == "json") {
    ordered_json j;
    j["params"] = params_json(o);
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= deg; ++k) {
      MultiIndex idx = (o.kind == "classical") ? MultiIndex{k, 0} : seq.index_of(k);
      arr.push_back({{"k", k},
                     {"n1", idx.n1},
                     {"n2", idx.n2},
                     {"coeffs", seq.polys[k].coeffs}});
    }
    j["polys"] = arr;
    write_json(o.out, j);
  } else {
    bad_format("gen", fmt);
  }
}

// ----------------------------------------------------------------- zeros

void run_zeros(const Cmd& cmd) {
  const Opts& o = cmd.o;
  if (o.n < 1) throw std::invalid_argument("zeros: --n must be >= 1");
  int deg = (o.kind == "classical") ? o.n : 2 * o.n;
  SteplineSequence seq = (o.kind == "classical") ? build_stepline(pc(o), deg)
                         : (o.kind == "first")   ? build_stepline(pf(o), deg)
                                                 : build_stepline(ps(o), deg);
  std::vector<double> zs = stepline_zeros(seq, deg);
  std::string fmt = cmd.format_or("csv");
  if (fmt == "csv") {
    std::string s = "index,zero\n";
    for (size_t i = 0; i < zs.size(); ++i)
      s += std::to_string(i) + "," + num(zs[i]) + "\n";
    write_output(o.out, s);
  } else if (fmt == "json") {
    ordered_json j;
    j["params"] = params_json(o);
    j["degree"] = deg;
    j["zeros"] = zs;
    write_json(o.out, j);
  } else {
    bad_format("zeros", fmt);
  }
}

// --------------------------------------------------------------- density

struct DensityData {
  DensityGrid grid;
  std::vector<double> e_points;
};

DensityData density_data(const Opts& o) {
  DensityData d;
  if (o.measure == "mu") {
    if (o.kind != "second")
      throw std::invalid_argument(
          "density: --measure mu is defined for --kind second only "
          "(the first-kind second measure lives on the arc; see gamma)");
    ParamsSecond p = ps(o);
    d.grid = mu_grid_second(p, o.grid);
    auto bp = branch_points_second(p);
    d.e_points = {bp.e_minus, 0.0};
  } else if (o.measure == "lambda") {
    if (o.kind == "classical") {
      ParamsClassical p = pc(o);
      d.grid = lambda_grid_classical(p, o.grid);
      auto ed = classical_edges(p);
      d.e_points = {ed.e1, ed.e2};
    } else if (o.kind == "first") {
      ParamsFirst p = pf(o);
      d.grid = lambda_grid_first(p, o.grid);
      d.e_points = branch_points_first(p);
    } else {
      ParamsSecond p = ps(o);
      d.grid = lambda_grid_second(p, o.grid);
      auto bp = branch_points_second(p);
      d.e_points = {bp.e1, bp.e2};
    }
  } else {
    throw std::invalid_argument("density: --measure must be lambda or mu");
  }
  return d;
}

void run_density(const Cmd& cmd) {
  const Opts& o = cmd.o;
  if (o.grid < 10) throw std::invalid_argument("density: --grid must be >= 10");
  DensityData d = density_data(o);
  std::string fmt = cmd.format_or("csv");
  if (fmt == "csv") {
    std::string s = "x,density\n";
    for (size_t i = 0; i < d.grid.xs.size(); ++i)
      s += num(d.grid.xs[i]) + "," + num(d.grid.values[i]) + "\n";
    write_output(o.out, s);
  } else if (fmt == "json") {
    ordered_json j;
    j["params"] = params_json(o);
    j["measure"] = o.measure;
    j["e_points"] = d.e_points;
    j["mass"] = d.grid.mass;
    j["saturation_end"] = d.grid.saturation_end;
    j["grid_lo"] = d.grid.lo;
    j["grid_hi"] = d.grid.hi;
    write_json(o.out, j);
  } else {
    bad_format("density", fmt);
  }
}

// -------------------------------------------------------------- classify

std::string regime_label(const RegimeReport& r) {
  if (r.boundary_crossing) return "boundary_N";
  if (r.boundary_degenerate) return "boundary_GN";
  switch (r.regime) {
    case Regime::kArcNegative:
      return "N";
    case Regime::kArcPositive:
      return "GN_not_N";
    default:
      return "A";
  }
}

void run_classify(const Cmd& cmd) {
  Opts o = imply_first_kind(cmd, "classify");
  RegimeReport r = classify(pf(o), o.tol);
  std::string fmt = cmd.format_or("json");
  if (fmt != "json") bad_format("classify", fmt);
  ordered_json j;
  j["params"] = params_json(o);
  j["label"] = regime_label(r);
  ordered_json bps = ordered_json::array();
  for (const cplx& z : r.branch_points) bps.push_back({z.real(), z.imag()});
  j["branch_points"] = bps;
  j["n_boundary_residual"] = r.residual;
  j["residual_raw"] = r.residual_raw;
  j["degeneracy_gap"] = r.degeneracy_gap;
  j["boundary_crossing"] = r.boundary_crossing;
  j["boundary_degenerate"] = r.boundary_degenerate;
  j["description"] = regime_name(r.regime);
  write_json(o.out, j);
}

// ----------------------------------------------------------------- gamma

// the traced arc from the branch point down to the real axis, mirrored
// through the axis so the endpoints are the conjugate branch pair
std::vector<cplx> gamma_polyline(const GammaTrace& gt) {
  const ArmTrace& arm = gt.arms.at(static_cast<size_t>(gt.gamma_arm));
  std::vector<cplx> half = arm.points;
  if (arm.has_crossing) half.emplace_back(arm.crossing_x, 0.0);
  std::vector<cplx> full = half;
  for (int i = static_cast<int>(half.size()) - 2; i >= 0; --i)
    full.push_back(std::conj(half[static_cast<size_t>(i)]));
  return full;
}

void run_gamma(const Cmd& cmd) {
  Opts o = imply_first_kind(cmd, "gamma");
  GammaTrace gt = trace_gamma(pf(o));
  std::string fmt = cmd.format_or("csv");
  if (fmt == "csv") {
    std::vector<cplx> pl = gamma_polyline(gt);
    std::string s = "x,y\n";
    for (const cplx& z : pl) s += num(z.real()) + "," + num(z.imag()) + "\n";
    write_output(o.out, s);
  } else if (fmt == "json") {
    ordered_json j;
    j["params"] = params_json(o);
    j["branch_point"] = {gt.branch_point.real(), gt.branch_point.imag()};
    const ArmTrace& g = gt.arms.at(static_cast<size_t>(gt.gamma_arm));
    j["crossing_x"] = g.crossing_x;
    j["hit_origin"] = g.hit_origin;
    j["mu_mass"] = gt.mu_mass;
    ordered_json arms = ordered_json::array();
    for (const ArmTrace& a : gt.arms)
      arms.push_back({{"theta", a.theta},
                      {"n_points", a.points.size()},
                      {"has_crossing", a.has_crossing},
                      {"crossing_x", a.crossing_x},
                      {"min_abs_z", a.min_abs_z},
                      {"hit_origin", a.hit_origin}});
    j["arms"] = arms;
    j["gamma_arm"] = gt.gamma_arm;
    write_json(o.out, j);
  } else {
    bad_format("gamma", fmt);
  }
}

// ----------------------------------------------------------- asymptotics

void run_asymptotics(const Cmd& cmd) {
  const Opts& o = cmd.o;
  require_kind(o, "first second", "asymptotics");
  std::vector<double> ts = o.tvals;
  if (ts.empty()) ts = {-1.0, right_edge(o) + 1.0};
  std::vector<int> ns = o.nvals;
  if (ns.empty()) ns = {50, 100, 200};
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("asymptotics: n values must be >= 1");

  struct Row {
    double t;
    int n;
    double lhs, mt, err;
  };
  std::vector<Row> rows;
  for (double t : ts) {
    double mt = (o.kind == "second") ? main_term_second(ps(o), t)
                                     : main_term_first(pf(o), t);
    for (int n : ns) {
      SteplineSequence seq = (o.kind == "second") ? build_stepline(ps(o), 2 * n)
                                                  : build_stepline(pf(o), 2 * n);
      std::vector<ScaledValue> vals = eval_scaled(seq, n * t);
      double lhs =
          (vals[static_cast<size_t>(2 * n)].log_abs - std::lgamma(2.0 * n + 1.0)) / n;
      rows.push_back({t, n, lhs, mt, std::abs(lhs - mt)});
    }
  }
  std::string fmt = cmd.format_or("csv");
  if (fmt == "csv") {
    std::string s = "t,n,lhs,main_term,error\n";
    for (const Row& r : rows)
      s += num(r.t) + "," + std::to_string(r.n) + "," + num(r.lhs) + "," +
           num(r.mt) + "," + num(r.err) + "\n";
    write_output(o.out, s);
  } else if (fmt == "json") {
    ordered_json j;
    j["params"] = params_json(o);
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows)
      arr.push_back({{"t", r.t},
                     {"n", r.n},
                     {"lhs", r.lhs},
                     {"main_term", r.mt},
                     {"error", r.err}});
    j["rows"] = arr;
    write_json(o.out, j);
  } else {
    bad_format("asymptotics", fmt);
  }
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool pass;
  double value;
  double tol;
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
  return v;
}

void suite_classical(std::vector<Check>& cs) {
  ParamsClassical p(1.0, 0.25);
  auto ed = classical_edges(p);
  double bp_dev = std::max(std::abs(ed.e1 - 1.0 / 3.0), std::abs(ed.e2 - 3.0));
  cs.push_back({"classical_branch_points", bp_dev <= 1e-12, bp_dev, 1e-12});

  double sat_dev = 0.0;
  for (double x : linspace(0.01, ed.e1 - 0.01, 50))
    sat_dev = std::max(sat_dev, std::abs(lambda_density_classical(p, x) - 1.0));
  cs.push_back({"classical_saturated_density", sat_dev <= 1e-8, sat_dev, 1e-8});

  DensityGrid g = lambda_grid_classical(p);
  double mass_dev = std::abs(g.mass - 1.0);
  cs.push_back({"classical_mass", mass_dev <= 1e-6, mass_dev, 1e-6});

  ClassicalEquilibriumReport eq = classical_equilibrium(p);
  cs.push_back({"classical_equilibrium_constant", eq.sup_dev <= 1e-3, eq.sup_dev, 1e-3});

  ClassicalEquilibriumReport eqh = classical_equilibrium(ParamsClassical(1.0, 0.5));
  double kdev = std::abs(eqh.kappa_expected - 1.0);
  cs.push_back({"classical_kappa_at_half", kdev <= 1e-12, kdev, 1e-12});
  cs.push_back({"classical_equilibrium_at_half", eqh.sup_dev <= 1e-3, eqh.sup_dev, 1e-3});
}

void suite_coeffs(std::vector<Check>& cs) {
  auto rel_dev = [](const MonicPoly& got, const MonicPoly& want) {
    double dev = 0.0;
    for (size_t j = 0; j < want.coeffs.size(); ++j)
      dev = std::max(dev, std::abs(got.coeffs[j] - want.coeffs[j]) /
                              std::max(1.0, std::abs(want.coeffs[j])));
    return dev;
  };
  {
    double dev = 0.0;
    for (ParamsFirst p : {ParamsFirst(1.0, 0.5, 1.0 / 3.0), ParamsFirst(0.7, 0.6, 0.2)}) {
      SteplineSequence seq = build_stepline(p, 12);
      for (int k = 1; k <= 12; ++k)
        dev = std::max(dev, rel_dev(seq.polys[static_cast<size_t>(k)],
                                    series_first_poly(seq.index_of(k), p)));
    }
    cs.push_back({"first_recurrence_vs_series", dev <= 1e-9, dev, 1e-9});
  }
  {
    double dev = 0.0;
    for (ParamsSecond p :
         {ParamsSecond(1.0, 1.5, 0.5), ParamsSecond(0.8, 1.7, 0.35)}) {
      SteplineSequence seq = build_stepline(p, 12);
      for (int k = 1; k <= 12; ++k)
        dev = std::max(dev, rel_dev(seq.polys[static_cast<size_t>(k)],
                                    series_second_poly(seq.index_of(k), p)));
    }
    cs.push_back({"second_recurrence_vs_series", dev <= 1e-9, dev, 1e-9});
  }
  {
    RecCoeffs rc = rec_coeffs_second({1, 1}, ParamsSecond(1.0, 1.5, 0.5));
    double dev = std::max({std::abs(rc.b - 6.0), std::abs(rc.c - 7.0), std::abs(rc.d - 1.0)});
    cs.push_back({"second_coeff_anchor_6_7_1", dev <= 1e-12, dev, 1e-12});
  }
}

void suite_masses(std::vector<Check>& cs) {
  {
    DensityGrid g = lambda_grid_first(ParamsFirst(1.0, 0.5, 0.25));
    double dev = std::abs(g.mass - 2.0);
    cs.push_back({"first_lambda_mass", dev <= 1e-6, dev, 1e-6});
    double vmax = *std::max_element(g.values.begin(), g.values.end());
    double vmin = *std::min_element(g.values.begin(), g.values.end());
    bool ok = vmax <= 1.0 + 1e-6 && vmin >= -1e-9;
    cs.push_back({"first_lambda_constraint", ok, vmax, 1.0 + 1e-6});
  }
  {
    ParamsSecond p(1.0, 1.5, 0.5);
    DensityGrid g = lambda_grid_second(p);
    double dev = std::abs(g.mass - 2.0);
    cs.push_back({"second_lambda_mass", dev <= 1e-6, dev, 1e-6});
    double vmax = *std::max_element(g.values.begin(), g.values.end());
    double vmin = *std::min_element(g.values.begin(), g.values.end());
    bool ok = vmax <= 1.0 + 1e-6 && vmin >= -1e-9;
    cs.push_back({"second_lambda_constraint", ok, vmax, 1.0 + 1e-6});
    DensityGrid m = mu_grid_second(p);
    double mdev = std::abs(m.mass - 1.0);
    cs.push_back({"second_mu_mass", mdev <= 1e-5, mdev, 1e-5});
  }
}

void suite_transition(std::vector<Check>& cs) {
  // closed-form charpoly of the second-kind step matrix over a (t, a) grid
  {
    double dev = 0.0;
    for (double c : linspace(0.15, 0.75, 10)) {
      ParamsSecond p(1.0, 1.5, c);
      double a = p.a();
      for (double t : linspace(-2.0, 12.0, 10)) {
        std::array<double, 4> got = charpoly_second(p, t);
        std::array<double, 4> want = {1.0, 1.0 + 1.5 * a - 0.5 * t,
                                      0.75 * a * (a + 1.0),
                                      0.125 * a * a * (a + 1.0)};
        for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(got[i] - want[i]));
      }
    }
    cs.push_back({"second_charpoly_closed_form", dev <= 1e-14, dev, 1e-14});
  }

  auto cubic_residual = [](const std::array<cplx, 4>& co, cplx phi) {
    cplx r = co[0] * phi * phi * phi + co[1] * phi * phi + co[2] * phi + co[3];
    double scale = std::abs(co[0] * phi * phi * phi) + std::abs(co[1] * phi * phi) +
                   std::abs(co[2] * phi) + std::abs(co[3]);
    return std::abs(r) / std::max(scale, 1e-300);
  };

  // second kind: invert t via the dominant eigenvalue, then walk L
  {
    ParamsSecond p(1.0, 1.5, 0.5);
    double e2 = branch_points_second(p).e2;
    std::vector<double> tpts = linspace(-4.5, -0.5, 10);
    for (double t : linspace(e2 + 0.5, e2 + 6.0, 10)) tpts.push_back(t);
    double inv_dev = 0.0, fd_dev = 0.0, cubic_dev = 0.0;
    for (double t : tpts) {
      cplx l0 = eigen_ordered(charpoly_second(p, t))[0];
      inv_dev = std::max(inv_dev,
                         std::abs(t_of_l_second(p, l0) - t) / (1.0 + std::abs(t)));
      double del = 1e-5 * (1.0 + std::abs(l0));
      cplx fp = f_second(p, l0 + del), fm = f_second(p, l0 - del);
      cplx tp = t_of_l_second(p, l0 + del), tm = t_of_l_second(p, l0 - del);
      cplx dfdt = (fp - fm) / (tp - tm);
      cplx phi = phi_of_l_second(p, l0);
      fd_dev = std::max(fd_dev, std::abs(dfdt - std::log(phi)));
      cubic_dev = std::max(cubic_dev, cubic_residual(cubic_second(p, t), phi));
    }
    cs.push_back({"second_uniformization_inverts_t", inv_dev <= 1e-8, inv_dev, 1e-8});
    cs.push_back({"second_dfdt_equals_log_phi", fd_dev <= 1e-6, fd_dev, 1e-6});
    cs.push_back({"second_phi_on_cubic", cubic_dev <= 1e-8, cubic_dev, 1e-8});
  }

  // first kind: same walk in the curve coordinate s
  {
    ParamsFirst p(1.0, 0.5, 1.0 / 3.0);
    double e2 = branch_points_first(p).back();
    std::vector<double> tpts = linspace(-4.5, -0.5, 10);
    for (double t : linspace(e2 + 0.5, e2 + 6.0, 10)) tpts.push_back(t);
    double inv_dev = 0.0, fd_dev = 0.0, cubic_dev = 0.0;
    for (double t : tpts) {
      cplx s0 = s_of_t_first(p, t);
      inv_dev = std::max(inv_dev,
                         std::abs(t_of_s_first(p, s0) - t) / (1.0 + std::abs(t)));
      double del = 1e-5 * (1.0 + std::abs(s0));
      cplx fp = f_first(p, s0 + del), fm = f_first(p, s0 - del);
      cplx tp = t_of_s_first(p, s0 + del), tm = t_of_s_first(p, s0 - del);
      cplx dfdt = (fp - fm) / (tp - tm);
      cplx phi = phi_of_s_first(p, s0);
      fd_dev = std::max(fd_dev, std::abs(dfdt - std::log(phi)));
      cubic_dev = std::max(cubic_dev, cubic_residual(cubic_first(p, t), phi));
    }
    cs.push_back({"first_uniformization_inverts_t", inv_dev <= 1e-8, inv_dev, 1e-8});
    cs.push_back({"first_dfdt_equals_log_phi", fd_dev <= 1e-6, fd_dev, 1e-6});
    cs.push_back({"first_phi_on_cubic", cubic_dev <= 1e-8, cubic_dev, 1e-8});
  }
}

void suite_regimes(std::vector<Check>& cs) {
  {
    RegimeReport r = classify(ParamsFirst(1.0, 0.5, 0.25));
    cs.push_back({"regime_half_quarter_is_N", regime_label(r) == "N", r.residual, 0.0});
  }
  {
    RegimeReport r = classify(ParamsFirst(1.0, 0.5, 0.146446));
    cs.push_back({"regime_critical_is_boundary_N", regime_label(r) == "boundary_N",
                  r.residual, 1e-3});
  }
  {
    bool sym = true;
    for (auto [x, y] : {std::pair<double, double>{0.2, 0.6}, {0.35, 0.4}, {0.7, 0.15}})
      sym = sym && regime_label(classify(ParamsFirst(1.0, x, y))) ==
                       regime_label(classify(ParamsFirst(1.0, y, x)));
    cs.push_back({"regime_swap_symmetry", sym, sym ? 1.0 : 0.0, 0.0});
  }
  {
    double worst = 0.0;
    for (double t : {-3.2, -4.0, -4.6}) {
      auto [x, y] = degenerate_boundary_point(t);
      RegimeReport r = classify(ParamsFirst(1.0, x, y));
      worst = std::max(worst, r.degeneracy_gap);
    }
    cs.push_back({"degenerate_boundary_collision", worst <= 1e-4, worst, 1e-4});
  }
}

void suite_gamma(std::vector<Check>& cs) {
  {
    GammaTrace gt = trace_gamma(ParamsFirst(1.0, 0.5, 0.25));
    std::vector<cplx> pl = gamma_polyline(gt);
    double end_dev = std::max(std::abs(pl.front() - gt.branch_point),
                              std::abs(pl.back() - std::conj(gt.branch_point)));
    cs.push_back({"gamma_endpoints_at_branch_pair", end_dev <= 1e-6, end_dev, 1e-6});

    const ArmTrace& g = gt.arms.at(static_cast<size_t>(gt.gamma_arm));
    double min_im = 1e300;
    for (const cplx& z : g.points)
      if (z.real() > 1e-9) min_im = std::min(min_im, z.imag());
    cs.push_back({"gamma_off_positive_axis", min_im > 0.0, min_im, 0.0});
    cs.push_back({"gamma_crossing_negative", g.crossing_x < 0.0, g.crossing_x, 0.0});
    double mdev = std::abs(gt.mu_mass - 1.0);
    cs.push_back({"gamma_mass_near_one", mdev <= 5e-3, mdev, 5e-3});
  }
  {
    GammaTrace gt = trace_gamma(ParamsFirst(1.0, 0.5, 0.14644660940672624));
    const ArmTrace& g = gt.arms.at(static_cast<size_t>(gt.gamma_arm));
    cs.push_back({"gamma_critical_reaches_origin", g.min_abs_z <= 1e-2, g.min_abs_z, 1e-2});
  }
}

void suite_asymptotics(std::vector<Check>& cs) {
  auto run = [&cs](const std::string& tag, double t,
                   const std::function<double(int)>& disc) {
    double d50 = disc(50), d200 = disc(200);
    cs.push_back({tag + "_small", d200 <= 0.05, d200, 0.05});
    cs.push_back({tag + "_decreasing", d200 <= d50, d200 - d50, 0.0});
  };
  {
    ParamsSecond p(1.0, 1.5, 0.5);
    double e2 = branch_points_second(p).e2;
    for (double t : {-1.0, e2 + 1.0}) {
      std::string tag = "second_discrepancy_t" + num6(t);
      run(tag, t, [&p, t](int n) { return discrepancy_second(p, n, t); });
    }
  }
  {
    ParamsFirst p(1.0, 0.5, 1.0 / 3.0);
    double e2 = branch_points_first(p).back();
    for (double t : {-1.0, e2 + 1.0}) {
      std::string tag = "first_discrepancy_t" + num6(t);
      run(tag, t, [&p, t](int n) { return discrepancy_first(p, n, t); });
    }
  }
}

int g_exit = 0;

void run_verify(const Cmd& cmd) {
  const Opts& o = cmd.o;
  static const std::vector<std::string> suites = {
      "classical", "coeffs", "masses", "transition", "regimes", "gamma",
      "asymptotics"};
  std::vector<std::string> todo;
  if (o.suite == "all") {
    todo = suites;
  } else if (std::find(suites.begin(), suites.end(), o.suite) != suites.end()) {
    todo = {o.suite};
  } else {
    throw std::invalid_argument("verify: unknown suite '" + o.suite +
                                "' (classical, coeffs, masses, transition, "
                                "regimes, gamma, asymptotics, all)");
  }
  std::vector<Check> cs;
  for (const std::string& s : todo) {
    if (s == "classical") suite_classical(cs);
    if (s == "coeffs") suite_coeffs(cs);
    if (s == "masses") suite_masses(cs);
    if (s == "transition") suite_transition(cs);
    if (s == "regimes") suite_regimes(cs);
    if (s == "gamma") suite_gamma(cs);
    if (s == "asymptotics") suite_asymptotics(cs);
  }
  bool all = true;
  for (const Check& c : cs) all = all && c.pass;
  std::string fmt = cmd.format_or("text");
  if (fmt == "json") {
    ordered_json arr = ordered_json::array();
    for (const Check& c : cs)
      arr.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"tol", c.tol}});
    ordered_json j;
    j["suite"] = o.suite;
    j["checks"] = arr;
    j["pass"] = all;
    write_json(o.out, j);
  } else if (fmt == "text" || fmt == "csv") {
    std::string s;
    for (const Check& c : cs) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%-4s %-42s value %-14.6g tol %.1e\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.tol);
      s += buf;
    }
    s += all ? "verify: all checks passed\n" : "verify: FAILURES above\n";
    write_output(o.out, s);
  } else {
    bad_format("verify", fmt);
  }
  if (!all) g_exit = 1;
}

// ------------------------------------------------------------------ plot

struct Frame {
  double x0, x1, y0, y1;
  static constexpr int W = 820, H = 520;
  static constexpr int ml = 64, mr = 20, mt = 44, mb = 50;
  double px(double x) const { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); }
  double py(double y) const {
    return H - mb - (y - y0) / (y1 - y0) * (H - mt - mb);
  }
};

void svg_axes(std::string& s, const Frame& f, const std::string& title) {
  s += "<rect width=\"" + std::to_string(f.W) + "\" height=\"" +
       std::to_string(f.H) + "\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"" + std::to_string(f.W / 2) +
       "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\" fill=\"#222\">" +
       title + "</text>\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"#333\"/>\n",
                f.ml, f.H - f.mb, f.W - f.mr, f.H - f.mb);
  s += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"#333\"/>\n",
                f.ml, f.mt, f.ml, f.H - f.mb);
  s += buf;
  for (int i = 0; i <= 4; ++i) {
    double x = f.x0 + (f.x1 - f.x0) * i / 4.0;
    double y = f.y0 + (f.y1 - f.y0) * i / 4.0;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" "
                  "stroke=\"#333\"/>\n",
                  f.px(x), f.H - f.mb, f.px(x), f.H - f.mb + 5);
    s += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.2f\" y=\"%d\" text-anchor=\"middle\" "
                  "font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">%s</text>\n",
                  f.px(x), f.H - f.mb + 18, num6(x).c_str());
    s += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%d\" y1=\"%.2f\" x2=\"%d\" y2=\"%.2f\" "
                  "stroke=\"#333\"/>\n",
                  f.ml - 5, f.py(y), f.ml, f.py(y));
    s += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%.2f\" text-anchor=\"end\" "
                  "font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">%s</text>\n",
                  f.ml - 8, f.py(y) + 4, num6(y).c_str());
    s += buf;
  }
}

void svg_polyline(std::string& s, const Frame& f, const std::vector<double>& xs,
                  const std::vector<double>& ys, const std::string& color) {
  s += "<polyline fill=\"none\" stroke=\"" + color +
       "\" stroke-width=\"1.6\" points=\"";
  char buf[64];
  for (size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", f.px(xs[i]), f.py(ys[i]));
    s += buf;
  }
  s += "\"/>\n";
}

void svg_branch_marker(std::string& s, const Frame& f, double e,
                       const std::string& name) {
  if (e < f.x0 || e > f.x1) return;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" "
                "stroke=\"#d62728\" stroke-dasharray=\"4,3\"/>\n",
                f.px(e), f.mt, f.px(e), f.H - f.mb);
  s += buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.2f\" y=\"%d\" text-anchor=\"middle\" "
                "font-family=\"sans-serif\" font-size=\"11\" "
                "fill=\"#d62728\">%s=%s</text>\n",
                f.px(e), f.mt - 6, name.c_str(), num6(e).c_str());
  s += buf;
}

std::string svg_open(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " +
         std::to_string(w) + " " + std::to_string(h) + "\">\n";
}

std::string param_title(const Opts& o) {
  std::string t = o.kind;
  if (o.kind == "classical")
    t += " (beta=" + num6(o.beta) + ", c=" + num6(o.c) + ")";
  else if (o.kind == "first")
    t += " kind (beta=" + num6(o.beta) + ", c1=" + num6(o.c1) + ", c2=" + num6(o.c2) + ")";
  else
    t += " kind (beta1=" + num6(o.beta1) + ", beta2=" + num6(o.beta2) +
         ", c=" + num6(o.c) + ")";
  return t;
}

void run_plot(const Cmd& cmd) {
  const Opts& o = cmd.o;
  std::string fmt = cmd.format_or("svg");
  if (fmt != "svg") bad_format("plot", fmt);
  std::string s = svg_open(Frame::W, Frame::H);
  if (o.target == "density") {
    DensityData d = density_data(o);
    double span = d.grid.hi - d.grid.lo;
    Frame f{d.grid.lo - 0.04 * span, d.grid.hi + 0.04 * span, 0.0, 1.12};
    svg_axes(s, f, o.measure + " density, " + param_title(o));
    svg_polyline(s, f, d.grid.xs, d.grid.values, "#1f77b4");
    for (size_t i = 0; i < d.e_points.size(); ++i)
      svg_branch_marker(s, f, d.e_points[i], "e" + std::to_string(i + 1));
  } else if (o.target == "gamma") {
    Opts og = imply_first_kind(cmd, "plot --target gamma");
    GammaTrace gt = trace_gamma(pf(og));
    std::vector<cplx> pl = gamma_polyline(gt);
    double xlo = 0.0, xhi = 0.0, yhi = 0.0;
    for (const cplx& z : pl) {
      xlo = std::min(xlo, z.real());
      xhi = std::max(xhi, z.real());
      yhi = std::max(yhi, std::abs(z.imag()));
    }
    double pad = 0.15 * std::max(xhi - xlo, 2.0 * yhi) + 0.1;
    Frame f{xlo - pad, xhi + pad, -yhi - pad, yhi + pad};
    svg_axes(s, f, "arc of the second measure, " + param_title(og));
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                  "stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n",
                  f.px(f.x0), f.py(0.0), f.px(f.x1), f.py(0.0));
    s += buf;
    std::vector<double> xs, ys;
    for (const cplx& z : pl) {
      xs.push_back(z.real());
      ys.push_back(z.imag());
    }
    svg_polyline(s, f, xs, ys, "#1f77b4");
    for (cplx e : {gt.branch_point, std::conj(gt.branch_point)}) {
      std::snprintf(buf, sizeof(buf),
                    "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3.5\" fill=\"#d62728\"/>\n",
                    f.px(e.real()), f.py(e.imag()));
      s += buf;
    }
    const ArmTrace& g = gt.arms.at(static_cast<size_t>(gt.gamma_arm));
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3.5\" fill=\"#2ca02c\"/>\n",
                  f.px(g.crossing_x), f.py(0.0));
    s += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
                  "font-size=\"11\" fill=\"#d62728\">e=%s+%si</text>\n",
                  f.px(gt.branch_point.real()) + 6, f.py(gt.branch_point.imag()) - 6,
                  num6(gt.branch_point.real()).c_str(),
                  num6(gt.branch_point.imag()).c_str());
    s += buf;
  } else {
    throw std::invalid_argument("plot: --target must be density or gamma");
  }
  s += "</svg>\n";
  write_output(o.out, s);
}

// ------------------------------------------------------------------ main

Cmd* make_cmd(CLI::App& app, std::vector<std::unique_ptr<Cmd>>& store,
              const std::string& name, const std::string& help) {
  auto holder = std::make_unique<Cmd>();
  Cmd* c = holder.get();
  c->app = app.add_subcommand(name, help);
  Opts& o = c->o;
  c->opt("--kind", o.kind, "family: classical | first | second")
      ->check(CLI::IsMember({"classical", "first", "second"}));
  c->opt("--beta", o.beta, "shape parameter (classical and first kind)");
  c->opt("--beta1", o.beta1, "first shape parameter (second kind)");
  c->opt("--beta2", o.beta2, "second shape parameter (second kind)");
  c->opt("--c", o.c, "weight parameter in (0,1) (classical and second kind)");
  c->opt("--c1", o.c1, "first weight parameter (first kind)");
  c->opt("--c2", o.c2, "second weight parameter (first kind)");
  c->opt("--n", o.n, "diagonal multi-index (multiple kinds) or degree (classical)");
  c->opt("--grid", o.grid, "cells for sampled density grids");
  c->opt("--tol", o.tol, "boundary tolerance for classification");
  c->opt("--out", o.out, "output path (default: stdout)");
  c->opt("--format", o.format, "csv | json | svg (command-dependent default)")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  c->app->add_option("--config", o.config,
                     "JSON file whose keys mirror the flags; explicit flags win");
  store.push_back(std::move(holder));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "multiple Meixner orthogonal polynomials: recurrences, zeros, limiting "
      "densities, regime classification, S-curves and growth asymptotics"};
  app.require_subcommand(1);
  std::vector<std::unique_ptr<Cmd>> store;

  Cmd* coeffs = make_cmd(app, store, "coeffs",
                         "nearest-neighbour recurrence coefficients along the diagonal");
  Cmd* gen = make_cmd(app, store, "gen", "stepline polynomial coefficient table");
  Cmd* zeros = make_cmd(app, store, "zeros", "zeros of the stepline polynomial");
  Cmd* density =
      make_cmd(app, store, "density", "limiting zero density and its summary");
  density->opt("--measure", density->o.measure, "lambda | mu (mu: second kind)")
      ->check(CLI::IsMember({"lambda", "mu"}));
  Cmd* classify_cmd =
      make_cmd(app, store, "classify", "first-kind parameter regime classification");
  Cmd* gamma = make_cmd(app, store, "gamma",
                        "trace the arc supporting the first-kind second measure");
  Cmd* asym = make_cmd(app, store, "asymptotics",
                       "nth-root growth versus the transition-matrix main term");
  asym->opt("--t", asym->o.tvals,
            "scaled abscissae, comma separated (default: -1 and e2+1)")
      ->delimiter(',');
  asym->opt("--nvals", asym->o.nvals,
            "diagonal indices, comma separated (default: 50,100,200)")
      ->delimiter(',');
  Cmd* verify = make_cmd(app, store, "verify", "run a named verification suite");
  verify
      ->opt("--suite", verify->o.suite,
            "classical | coeffs | masses | transition | regimes | gamma | "
            "asymptotics | all")
      ->required();
  Cmd* plot = make_cmd(app, store, "plot", "self-contained SVG of a curve");
  plot->opt("--target", plot->o.target, "density | gamma")
      ->check(CLI::IsMember({"density", "gamma"}));
  plot->opt("--measure", plot->o.measure, "lambda | mu (density target)")
      ->check(CLI::IsMember({"lambda", "mu"}));

  auto wire = [](Cmd* c, void (*fn)(const Cmd&)) {
    c->app->callback([c, fn] {
      c->apply_config();
      fn(*c);
    });
  };
  wire(coeffs, run_coeffs);
  wire(gen, run_gen);
  wire(zeros, run_zeros);
  wire(density, run_density);
  wire(classify_cmd, run_classify);
  wire(gamma, run_gamma);
  wire(asym, run_asymptotics);
  wire(verify, run_verify);
  wire(plot, run_plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return g_exit;
}
