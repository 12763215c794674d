#include "meixner/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace meixner {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// antiderivatives of log|u| and u log|u| (continuous through u = 0)
double fln(double u) { return u == 0.0 ? 0.0 : u * std::log(std::abs(u)) - u; }
double gln(double u) {
  return u == 0.0 ? 0.0 : 0.5 * u * u * std::log(std::abs(u)) - 0.25 * u * u;
}

// integral over [a, b] of log|t - x| dx, exact
double seg_log_int(double a, double b, double t) { return fln(t - a) - fln(t - b); }

// the same with complex zeta (principal branch, safe off the real axis)
double seg_log_int_c(double a, double b, cplx zeta) {
  auto a0 = [&](double x) { return -(zeta - x) * (std::log(zeta - x) - 1.0); };
  return (a0(b) - a0(a)).real();
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double spread(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end()) -
         *std::min_element(v.begin(), v.end());
}

}  // namespace

double log_potential(const DensityGrid& g, cplx zeta) {
  double acc = 0.0;
  const bool real_path = zeta.imag() == 0.0;
  const double t = zeta.real();
  for (size_t i = 0; i + 1 < g.xs.size(); ++i) {
    const double x0 = g.xs[i], x1 = g.xs[i + 1];
    const double v0 = g.values[i], v1 = g.values[i + 1];
    if (v0 == 0.0 && v1 == 0.0) continue;
    const double beta = (v1 - v0) / (x1 - x0);
    if (real_path) {
      const double i0 = fln(t - x0) - fln(t - x1);
      const double u0 = x0 - t, u1 = x1 - t;
      const double i1 = gln(u1) - gln(u0) + (t - x0) * (fln(u1) - fln(u0));
      acc += v0 * i0 + beta * i1;
    } else {
      auto a0 = [&](double x) { return -(zeta - x) * (std::log(zeta - x) - 1.0); };
      auto pq = [&](cplx u) { return 0.5 * u * u * std::log(u) - 0.25 * u * u; };
      const cplx i0 = a0(x1) - a0(x0);
      const cplx ix = zeta * i0 + pq(zeta - x1) - pq(zeta - x0);
      acc += (v0 * i0 + beta * (ix - x0 * i0)).real();
    }
  }
  return -acc;
}

cplx cauchy_transform(const DensityGrid& g, cplx z) {
  if (std::abs(z.imag()) < 1e-6 && z.real() > g.xs.front() - 1e-6 &&
      z.real() < g.xs.back() + 1e-6)
    throw std::invalid_argument("cauchy_transform: z too close to the support");
  cplx acc(0.0, 0.0);
  for (size_t i = 0; i + 1 < g.xs.size(); ++i) {
    const double x0 = g.xs[i], x1 = g.xs[i + 1];
    const double v0 = g.values[i], v1 = g.values[i + 1];
    if (v0 == 0.0 && v1 == 0.0) continue;
    const double h = x1 - x0;
    const double beta = (v1 - v0) / h;
    const cplx w = std::log((z - x0) / (z - x1));
    acc += (v0 + beta * (z - x0)) * w - beta * h;
  }
  return acc;
}

ClassicalEquilibriumReport classical_equilibrium(const ParamsClassical& p,
                                                 int npts) {
  const auto e = classical_edges(p);
  auto lamp = [&](double t) { return lambda_density_classical(p, t); };

  auto potential = [&](double x) {
    double v = seg_log_int(0.0, e.e1, x);  // saturated zone, density one
    const double lx = lamp(x);
    v += gl_integrate(
        [&](double t) { return (lamp(t) - lx) * std::log(std::abs(x - t)); },
        e.e1, x, 120);
    v += gl_integrate(
        [&](double t) { return (lamp(t) - lx) * std::log(std::abs(x - t)); }, x,
        e.e2, 120);
    v += lx * seg_log_int(e.e1, e.e2, x);
    return -v;
  };

  ClassicalEquilibriumReport rep;
  rep.kappa_expected = 1.0 + std::log((1.0 - p.c) / p.c);
  for (int i = 1; i <= npts; ++i) {
    const double x = e.e1 + (e.e2 - e.e1) * i / (npts + 1);
    const double w = potential(x) + 0.5 * (1.0 + x) * std::log(1.0 / p.c);
    rep.xs.push_back(x);
    rep.values.push_back(w);
  }
  rep.kappa_mean = mean(rep.values);
  for (double w : rep.values)
    rep.sup_dev = std::max(rep.sup_dev, std::abs(w - rep.kappa_expected));
  return rep;
}

TwoZoneReport equilibrium_first(const ParamsFirst& p, const GammaTrace& gt) {
  std::vector<double> pos;
  for (double r : branch_points_first(p))
    if (r > 0.0) pos.push_back(r);
  if (pos.size() < 2)
    throw std::runtime_error("equilibrium_first: missing real branch points");
  const double e1 = pos[0], e2 = pos[1];
  auto lamp = [&](double t) { return lambda_density_first(p, t); };

  auto p_lam = [&](double x) {
    double v = seg_log_int(0.0, e1, x);
    if (x > e1 && x < e2) {
      const double lx = lamp(x);
      v += gl_integrate(
          [&](double t) { return (lamp(t) - lx) * std::log(std::abs(x - t)); },
          e1, x, 120);
      v += gl_integrate(
          [&](double t) { return (lamp(t) - lx) * std::log(std::abs(x - t)); },
          x, e2, 120);
      v += lx * seg_log_int(e1, e2, x);
    } else {
      v += gl_integrate(
          [&](double t) { return lamp(t) * std::log(std::abs(x - t)); }, e1, e2,
          120);
    }
    return -v;
  };
  auto p_lam_c = [&](cplx zeta) {
    double v = seg_log_int_c(0.0, e1, zeta);
    v += gl_integrate(
        [&](double t) { return lamp(t) * std::log(std::abs(zeta - t)); }, e1,
        e2, 120);
    return -v;
  };

  const auto& arm = gt.arms[gt.gamma_arm];
  const auto& pts = arm.points;
  const auto& dl = arm.dln_abs;
  // potential of the arc measure (arc plus mirror image, trapezoid nodes);
  // when x0 sits on node singular_k the touching segments use the exact
  // integral of the log against a locally constant density
  auto p_mu = [&](cplx x0, int singular_k) {
    double acc = 0.0;
    for (int copy = 0; copy < 2; ++copy) {
      for (size_t i = 1; i < pts.size(); ++i) {
        const cplx za = copy ? std::conj(pts[i - 1]) : pts[i - 1];
        const cplx zb = copy ? std::conj(pts[i]) : pts[i];
        const double len = std::abs(zb - za);
        if (len == 0.0) continue;
        if (copy == 0 && singular_k >= 0 &&
            (i == static_cast<size_t>(singular_k) ||
             i == static_cast<size_t>(singular_k) + 1)) {
          const double fs = dl[singular_k] / (2.0 * kPi);
          acc += fs * (len * std::log(len) - len);
          continue;
        }
        const double fa = dl[i - 1] / (2.0 * kPi);
        const double fb = dl[i] / (2.0 * kPi);
        acc += 0.5 *
               (fa * std::log(std::abs(x0 - za)) +
                fb * std::log(std::abs(x0 - zb))) *
               len;
      }
    }
    return -acc;
  };

  TwoZoneReport rep;
  const double lc1 = std::log(p.c1), lfield2 = std::log(p.c2 / p.c1);

  for (int i = 1; i <= 5; ++i) {
    const double x = e1 + (e2 - e1) * i / 6.0;
    rep.w1.ts.push_back(x);
    rep.w1.values.push_back(2.0 * p_lam(x) - p_mu({x, 0.0}, -1) - lc1 * x);
  }
  rep.w1.kappa = mean(rep.w1.values);
  rep.w1.free_spread = spread(rep.w1.values);
  double sat = -INFINITY, out = INFINITY;
  for (double f : {0.25, 0.6}) {
    const double x = f * e1;
    sat = std::max(sat, 2.0 * p_lam(x) - p_mu({x, 0.0}, -1) - lc1 * x);
  }
  for (double f : {1.1, 1.3}) {
    const double x = f * e2;
    out = std::min(out, 2.0 * p_lam(x) - p_mu({x, 0.0}, -1) - lc1 * x);
  }
  rep.w1.sat_margin = sat - rep.w1.kappa;
  rep.w1.outside_margin = out - rep.w1.kappa;

  const int last = static_cast<int>(pts.size()) - 1;
  for (double f : {0.15, 0.35, 0.5, 0.65, 0.85}) {
    int k = static_cast<int>(std::lround(f * last));
    k = std::clamp(k, 1, last - 1);
    const cplx zeta = pts[k];
    rep.w2.ts.push_back(f);
    rep.w2.values.push_back(2.0 * p_mu(zeta, k) - p_lam_c(zeta) -
                            lfield2 * zeta.real());
  }
  rep.w2.kappa = mean(rep.w2.values);
  rep.w2.free_spread = spread(rep.w2.values);
  rep.w2.sat_margin = kNan;
  rep.w2.outside_margin = kNan;

  rep.lambda_mass = lambda_grid_first(p).mass;
  rep.mu_mass = gt.mu_mass;
  return rep;
}

TwoZoneReport equilibrium_second(const ParamsSecond& p) {
  const auto bp = branch_points_second(p);
  const double em = bp.e_minus, e1 = bp.e1, e2 = bp.e2;
  auto lamp = [&](double t) { return lambda_density_second(p, t); };
  auto mup = [&](double x) { return mu_density_second(p, x); };

  auto p_lam = [&](double x) {
    double v = seg_log_int(0.0, e1, x);
    if (x > e1 && x < e2) {
      const double lx = lamp(x);
      v += gl_integrate(
          [&](double t) { return (lamp(t) - lx) * std::log(std::abs(x - t)); },
          e1, x, 120);
      v += gl_integrate(
          [&](double t) { return (lamp(t) - lx) * std::log(std::abs(x - t)); },
          x, e2, 120);
      v += lx * seg_log_int(e1, e2, x);
    } else {
      v += gl_integrate(
          [&](double t) { return lamp(t) * std::log(std::abs(x - t)); }, e1, e2,
          120);
    }
    return -v;
  };

  // inverse-power tail fit for the far free zone, matched at x_c and 4 x_c
  const double vc = 0.02;
  const double xc = em / (vc * vc);
  const double m1 = mup(xc), m2 = mup(4.0 * xc);
  const double s1 = std::pow(-xc, -1.5), s2 = std::pow(-xc, -2.5);
  const double t1 = std::pow(-4.0 * xc, -1.5), t2 = std::pow(-4.0 * xc, -2.5);
  const double det = s1 * t2 - s2 * t1;
  const double cf = (m1 * t2 - m2 * s2) / det;
  const double cf2 = (s1 * m2 - t1 * m1) / det;

  // potential of the second measure: saturated [em, 0] exactly, a sqrt
  // substitution near em (with subtraction when t lands inside), an
  // x = em / v^2 substitution for the mid tail, and the fitted far tail
  auto p_mu = [&](double t) {
    double v = seg_log_int(em, 0.0, t);
    const double bu = std::sqrt(-em);
    auto fu = [&](double u) { return mup(em - u * u) * 2.0 * u; };
    if (t < em) {
      const double ut = std::sqrt(em - t);
      const double mt = fu(ut);
      v += gl_integrate([&](double u) { return fu(u) * std::log(u + ut); }, 0.0,
                        bu, 160);
      v += gl_integrate(
          [&](double u) { return (fu(u) - mt) * std::log(std::abs(u - ut)); },
          0.0, ut, 160);
      v += gl_integrate(
          [&](double u) { return (fu(u) - mt) * std::log(std::abs(u - ut)); },
          ut, bu, 160);
      v += mt * (fln(bu - ut) - fln(-ut));
    } else {
      v += gl_integrate(
          [&](double u) { return fu(u) * std::log(std::abs(t - em + u * u)); },
          0.0, bu, 160);
    }
    v += gl_integrate(
        [&](double w) {
          const double x = em / (w * w);
          return mup(x) * (-2.0 * em) / (w * w * w) * std::log(std::abs(t - x));
        },
        vc, 1.0 / std::sqrt(2.0), 200);
    const double r = -xc;
    v += cf * ((2.0 * std::log(r) + 4.0) / std::sqrt(r) +
               t * (2.0 / 3.0) * std::pow(r, -1.5));
    v += cf2 * ((2.0 / 3.0 * std::log(r) + 4.0 / 9.0) * std::pow(r, -1.5));
    return -v;
  };

  TwoZoneReport rep;
  const double lc = std::log(p.c);

  for (int i = 1; i <= 5; ++i) {
    const double x = e1 + (e2 - e1) * i / 6.0;
    rep.w1.ts.push_back(x);
    rep.w1.values.push_back(2.0 * p_lam(x) - p_mu(x) - lc * x);
  }
  rep.w1.kappa = mean(rep.w1.values);
  rep.w1.free_spread = spread(rep.w1.values);
  double sat = -INFINITY, out = INFINITY;
  for (double f : {0.25, 0.6}) {
    const double x = f * e1;
    sat = std::max(sat, 2.0 * p_lam(x) - p_mu(x) - lc * x);
  }
  for (double f : {1.1, 1.3}) {
    const double x = f * e2;
    out = std::min(out, 2.0 * p_lam(x) - p_mu(x) - lc * x);
  }
  rep.w1.sat_margin = sat - rep.w1.kappa;
  rep.w1.outside_margin = out - rep.w1.kappa;

  for (double f : {1.05, 1.15, 1.3, 1.5, 1.7, 1.9}) {
    const double t = em * f;
    rep.w2.ts.push_back(t);
    rep.w2.values.push_back(2.0 * p_mu(t) - p_lam(t));
  }
  rep.w2.kappa = mean(rep.w2.values);
  rep.w2.free_spread = spread(rep.w2.values);
  double sat2 = -INFINITY;
  for (double f : {0.15, 0.4, 0.65, 0.85})
    sat2 = std::max(sat2, 2.0 * p_mu(em * f) - p_lam(em * f));
  rep.w2.sat_margin = sat2 - rep.w2.kappa;
  rep.w2.outside_margin = kNan;

  rep.lambda_mass = lambda_grid_second(p).mass;
  rep.mu_mass = mu_grid_second(p).mass;
  return rep;
}

}  // namespace meixner
