#include "meixner/curves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace meixner {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-9;  // offset above the real axis for boundary values

using Sheets = std::array<cplx, 3>;

Sheets pair_to(const Sheets& prev, const Sheets& rs) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  double best = INFINITY;
  int bi = 0;
  for (int pi = 0; pi < 6; ++pi) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d += std::abs(rs[perms[pi][i]] - prev[i]);
    if (d < best) {
      best = d;
      bi = pi;
    }
  }
  return {rs[perms[bi][0]], rs[perms[bi][1]], rs[perms[bi][2]]};
}

// a step is unsafe when some pair's difference vector turns or stretches by
// more than ~45% in one step; pairs within root-solver noise of a double
// root are exempt (their labels are interchangeable anyway)
bool need_split(const Sheets& cur, const Sheets& nxt) {
  double scale = 1.0;
  for (int i = 0; i < 3; ++i)
    scale = std::max({scale, std::abs(cur[i]), std::abs(nxt[i])});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const cplx dc = cur[i] - cur[j], dn = nxt[i] - nxt[j];
      const double s = std::abs(dc) + std::abs(dn);
      if (s <= 2e-6 * (1.0 + scale)) continue;
      if (std::abs(dn - dc) > 0.45 * s) return true;
    }
  return false;
}

template <class Solver, class Init>
Sheets continue_down(const Solver& solve, const Init& init, cplx z) {
  if (z.imag() < 0.0) {
    Sheets s = continue_down(solve, init, std::conj(z));
    return {std::conj(s[0]), std::conj(s[1]), std::conj(s[2])};
  }
  constexpr double t_top = 1e6;
  constexpr int nsteps = 60;
  const double t_end = std::max(z.imag(), 1e-12);
  std::array<cplx, nsteps> path;
  for (int j = 0; j < nsteps; ++j)
    path[j] = {z.real(), t_top * std::pow(t_end / t_top, j / double(nsteps - 1))};
  path.back() = z;

  Sheets cur = init(solve(path[0]), path[0]);
  int budget = 20000;
  struct Seg {
    cplx a, b;
    int depth;
  };
  std::vector<Seg> stack;
  for (int j = 0; j + 1 < nsteps; ++j) {
    stack.push_back({path[j], path[j + 1], 0});
    while (!stack.empty()) {
      const Seg s = stack.back();
      stack.pop_back();
      const Sheets nxt = pair_to(cur, solve(s.b));
      if (--budget > 0 && s.depth < 48 && need_split(cur, nxt)) {
        const cplx mid = 0.5 * (s.a + s.b);
        stack.push_back({mid, s.b, s.depth + 1});
        stack.push_back({s.a, mid, s.depth + 1});
      } else {
        cur = nxt;
      }
    }
  }
  return cur;
}

Sheets solve_first(const ParamsFirst& p, cplx z) {
  const auto c = cubic_first(p, z);
  return cubic_roots(c[0], c[1], c[2], c[3]);
}

Sheets solve_second(const ParamsSecond& p, cplx z) {
  const auto c = cubic_second(p, z);
  return cubic_roots(c[0], c[1], c[2], c[3]);
}

}  // namespace

ClassicalEdges classical_edges(const ParamsClassical& p) {
  const double s = std::sqrt(p.c);
  return {(1.0 - s) * (1.0 - s) / (1.0 - p.c), (1.0 + s) * (1.0 + s) / (1.0 - p.c)};
}

cplx classical_E0(const ParamsClassical& p, cplx z) {
  const double sigma = 1.0 / p.c;
  const cplx b = (sigma - 1.0) / z - (sigma + 1.0);
  const cplx s = std::sqrt(b * b - 4.0 * sigma);
  const cplx r1 = 0.5 * (-b + s), r2 = 0.5 * (-b - s);
  // compute the larger root directly, the smaller from the product
  const cplx big = std::abs(r1) >= std::abs(r2) ? r1 : r2;
  return cplx(sigma) / big;
}

std::array<cplx, 4> cubic_first(const ParamsFirst& p, cplx z) {
  const double a1 = p.a1(), a2 = p.a2();
  return {a1 * a2 * z,
          -3.0 * a1 * a2 * z + (a1 + a2) * (1.0 - z),
          z - 2.0 - (a1 + a2) + 2.0 * z * (a1 + a2) + 3.0 * a1 * a2 * z,
          -z * (a1 + 1.0) * (a2 + 1.0)};
}

std::array<cplx, 4> cubic_second(const ParamsSecond& p, cplx z) {
  const double s = p.sigma();
  return {z * z,
          -(2.0 * s * z * z + z * z - 2.0 * z * s + 2.0 * z - s + 1.0),
          z * s * (z * s + 2.0 * z - 2.0 * s + 2.0),
          -s * s * z * z};
}

std::array<double, 5> disc_coeffs_first(const ParamsFirst& p) {
  const double a1 = p.a1(), a2 = p.a2();
  const double d = a1 - a2, s = a1 + a2;
  const double z4 = d * d;
  const double z3 = -6.0 * d * d * (s + 1.0);
  const double z2 = std::pow(a1, 4) + 28.0 * a1 * a1 * a1 * a2 + 16.0 * a1 * a1 * a1 -
                    54.0 * a1 * a1 * a2 * a2 - 12.0 * a1 * a1 * a2 + 13.0 * a1 * a1 +
                    28.0 * a1 * a2 * a2 * a2 - 12.0 * a1 * a2 * a2 - 22.0 * a1 * a2 +
                    std::pow(a2, 4) + 16.0 * a2 * a2 * a2 + 13.0 * a2 * a2;
  const double z1 = -2.0 * (s + 1.0) *
                    (2.0 * a1 * a1 * a1 * a2 + a1 * a1 * a1 + 4.0 * a1 * a1 * a2 * a2 +
                     7.0 * a1 * a1 * a2 + 6.0 * a1 * a1 + 2.0 * a1 * a2 * a2 * a2 +
                     7.0 * a1 * a2 * a2 - 4.0 * a1 * a2 + a2 * a2 * a2 + 6.0 * a2 * a2);
  const double z0 = s * s * (s + 2.0) * (s + 2.0);
  return {z4, z3, z2, z1, z0};
}

std::array<double, 4> disc_factor_second(const ParamsSecond& p) {
  const double s = p.sigma();
  return {4.0 * (s - 1.0), -3.0 * (5.0 * s + 4.0), 12.0 * (s - 1.0), 4.0 * (s - 1.0)};
}

std::vector<double> branch_points_first(const ParamsFirst& p) {
  const auto co = disc_coeffs_first(p);
  const auto roots = poly_roots({co[0], co[1], co[2], co[3], co[4]});
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  std::vector<double> out;
  for (const auto& r : roots)
    if (std::abs(r.imag()) <= 1e-9 * scale) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

BranchPointsSecond branch_points_second(const ParamsSecond& p) {
  const auto co = disc_factor_second(p);
  const auto r = cubic_roots(co[0], co[1], co[2], co[3]);
  std::array<double, 3> re{r[0].real(), r[1].real(), r[2].real()};
  std::sort(re.begin(), re.end());
  if (!(re[0] < 0.0 && 0.0 < re[1] && re[1] < re[2]))
    throw std::runtime_error("branch_points_second: unexpected root ordering");
  return {re[0], re[1], re[2]};
}

std::array<cplx, 3> phi_first(const ParamsFirst& p, cplx z) {
  const double s1 = 1.0 / p.c1, s2 = 1.0 / p.c2;
  auto init = [&](const Sheets& rs, cplx z0) {
    const Sheets targets{1.0 + 2.0 / z0, s1 * (1.0 - 1.0 / z0), s2 * (1.0 - 1.0 / z0)};
    return pair_to(targets, rs);
  };
  return continue_down([&](cplx w) { return solve_first(p, w); }, init, z);
}

std::array<cplx, 3> phi_second(const ParamsSecond& p, cplx z) {
  auto init = [&](const Sheets& rs, cplx z0) {
    const cplx t0 = 1.0 + 2.0 / z0;
    int i0 = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(rs[i] - t0) < std::abs(rs[i0] - t0)) i0 = i;
    Sheets out{rs[i0], {}, {}};
    int k = 1;
    for (int i = 0; i < 3; ++i)
      if (i != i0) out[k++] = rs[i];
    return out;
  };
  return continue_down([&](cplx w) { return solve_second(p, w); }, init, z);
}

double lambda_density_classical(const ParamsClassical& p, double x) {
  auto d = [&](double e) {
    return std::abs(std::arg(classical_E0(p, {x, e}))) / kPi;
  };
  return 2.0 * d(kEps) - d(2.0 * kEps);  // Richardson in the offset
}

double lambda_density_first(const ParamsFirst& p, double x) {
  return std::abs(std::arg(phi_first(p, {x, kEps})[0])) / kPi;
}

double lambda_density_second(const ParamsSecond& p, double x) {
  return std::abs(std::arg(phi_second(p, {x, kEps})[0])) / kPi;
}

double mu_density_second(const ParamsSecond& p, double x) {
  const auto br = phi_second(p, {x, kEps});
  return std::max(std::abs(std::arg(br[1])), std::abs(std::arg(br[2]))) / kPi;
}

namespace {

// mass of a measure saturated on [0, breaks[0]] and free on the remaining
// inter-break panels; the sin^2 substitution absorbs square-root edges
double constrained_mass(const std::function<double(double)>& dens,
                        const std::vector<double>& breaks) {
  double m = breaks.front();
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    m += gl_integrate(
        [&](double th) {
          const double s = std::sin(th), c = std::cos(th);
          return dens(a + (b - a) * s * s) * (b - a) * 2.0 * s * c;
        },
        0.0, kPi / 2.0, 160);
  }
  return m;
}

DensityGrid fill_lambda_grid(const std::function<double(double)>& dens,
                             const std::vector<double>& breaks, int ncells) {
  if (ncells < 8) throw std::invalid_argument("ncells too small");
  DensityGrid g;
  g.lo = 0.0;
  g.hi = breaks.back();
  g.saturation_end = breaks.front();
  g.xs.resize(ncells + 1);
  g.values.resize(ncells + 1);
  for (int i = 0; i <= ncells; ++i) g.xs[i] = g.hi * i / ncells;
  g.values[0] = 1.0;
  g.values[ncells] = 0.0;
  for (int i = 1; i < ncells; ++i) g.values[i] = dens(g.xs[i]);
  g.cum.assign(ncells + 1, 0.0);
  for (int i = 1; i <= ncells; ++i)
    g.cum[i] = g.cum[i - 1] +
               0.5 * (g.values[i - 1] + g.values[i]) * (g.xs[i] - g.xs[i - 1]);
  g.mass = constrained_mass(dens, breaks);
  return g;
}

}  // namespace

DensityGrid lambda_grid_classical(const ParamsClassical& p, int ncells) {
  const auto e = classical_edges(p);
  return fill_lambda_grid([&](double x) { return lambda_density_classical(p, x); },
                          {e.e1, e.e2}, ncells);
}

DensityGrid lambda_grid_first(const ParamsFirst& p, int ncells) {
  std::vector<double> breaks;
  for (double r : branch_points_first(p))
    if (r > 0.0) breaks.push_back(r);
  if (breaks.empty())
    throw std::runtime_error("lambda_grid_first: no positive branch points");
  return fill_lambda_grid([&](double x) { return lambda_density_first(p, x); },
                          breaks, ncells);
}

DensityGrid lambda_grid_second(const ParamsSecond& p, int ncells) {
  const auto bp = branch_points_second(p);
  return fill_lambda_grid([&](double x) { return lambda_density_second(p, x); },
                          {bp.e1, bp.e2}, ncells);
}

DensityGrid mu_grid_second(const ParamsSecond& p, int ncells) {
  if (ncells < 8) throw std::invalid_argument("ncells too small");
  const auto bp = branch_points_second(p);
  const double em = bp.e_minus;
  auto dens = [&](double x) { return mu_density_second(p, x); };

  DensityGrid g;
  g.lo = 25.0 * em;
  g.hi = 0.0;
  g.saturation_end = em;
  g.xs.resize(ncells + 1);
  g.values.resize(ncells + 1);
  for (int i = 0; i <= ncells; ++i)
    g.xs[i] = g.lo * (1.0 - double(i) / ncells);
  g.values[ncells] = 1.0;  // saturated up to 0
  for (int i = 0; i < ncells; ++i) g.values[i] = dens(g.xs[i]);
  g.cum.assign(ncells + 1, 0.0);
  for (int i = 1; i <= ncells; ++i)
    g.cum[i] = g.cum[i - 1] +
               0.5 * (g.values[i - 1] + g.values[i]) * (g.xs[i] - g.xs[i - 1]);

  // mass = saturated zone + near tail (sqrt edge), mid tail (x = em/v^2),
  // and a two-term inverse-power fit beyond x_c
  const double near = gl_integrate(
      [&](double u) { return dens(em - u * u) * 2.0 * u; }, 0.0, std::sqrt(-em), 160);
  const double vc = 0.02;
  const double mid = gl_integrate(
      [&](double v) { return dens(em / (v * v)) * (-2.0 * em) / (v * v * v); }, vc,
      1.0 / std::sqrt(2.0), 200);
  const double xc = em / (vc * vc);
  const double m1 = dens(xc), m2 = dens(4.0 * xc);
  const double s1 = std::pow(-xc, -1.5), s2 = std::pow(-xc, -2.5);
  const double t1 = std::pow(-4.0 * xc, -1.5), t2 = std::pow(-4.0 * xc, -2.5);
  const double det = s1 * t2 - s2 * t1;
  const double cc = (m1 * t2 - m2 * s2) / det;
  const double cc2 = (s1 * m2 - t1 * m1) / det;
  const double far = 2.0 * cc * std::pow(-xc, -0.5) +
                     (2.0 / 3.0) * cc2 * std::pow(-xc, -1.5);
  g.mass = -em + near + mid + far;
  return g;
}

double grid_cdf(const DensityGrid& g, double x) {
  if (g.xs.empty()) return 0.0;
  if (x <= g.xs.front()) return 0.0;
  if (x >= g.xs.back()) return g.cum.back();
  const auto it = std::upper_bound(g.xs.begin(), g.xs.end(), x);
  const size_t i = static_cast<size_t>(it - g.xs.begin()) - 1;
  const double x0 = g.xs[i], x1 = g.xs[i + 1];
  const double v0 = g.values[i], v1 = g.values[i + 1];
  const double v = v0 + (v1 - v0) * (x - x0) / (x1 - x0);
  return g.cum[i] + 0.5 * (v0 + v) * (x - x0);
}

}  // namespace meixner
