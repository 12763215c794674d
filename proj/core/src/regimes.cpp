#include "meixner/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meixner {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kArcNegative:
      return "arc-negative";
    case Regime::kArcPositive:
      return "arc-positive";
    case Regime::kNoArc:
      return "no-arc";
  }
  return "unknown";
}

std::array<double, 2> crossing_residual(const ParamsFirst& p) {
  const double s1 = 1.0 / p.c1, s2 = 1.0 / p.c2;
  const double u = s1 + s2 - 2.0, v = s1 - s2;
  const double raw = u * u - 2.0 * v * v;
  const double norm = u * u + 2.0 * v * v;
  return {raw, raw / norm};
}

std::array<double, 2> degenerate_boundary_point(double t) {
  const double lo = -3.0 - std::sqrt(3.0);
  if (!(t > lo && t < -3.0))
    throw std::domain_error("degenerate_boundary_point: t outside (-3-sqrt(3), -3)");
  const double s = -(t * t + 8.0 * t + 18.0) * (t + 2.0) * (t + 2.0) / (2.0 * t);
  const double q = -std::pow(t + 3.0, 3) * std::pow(t + 2.0, 3) / (t * t * t);
  const double d = std::sqrt(std::max(0.0, s * s - 4.0 * q));
  return {0.5 * (s + d), 0.5 * (s - d)};  // (c1, c2), c1 >= c2
}

RegimeReport classify(const ParamsFirst& p, double tol) {
  RegimeReport rep;
  const auto res = crossing_residual(p);
  rep.residual_raw = res[0];
  rep.residual = res[1];

  const auto co = disc_coeffs_first(p);
  auto roots = poly_roots({co[0], co[1], co[2], co[3], co[4]});
  std::sort(roots.begin(), roots.end(),
            [](cplx a, cplx b) { return a.real() < b.real(); });
  rep.branch_points = roots;

  double scale = 1.0, max_im = 0.0, gap = INFINITY;
  for (const auto& r : roots) {
    scale = std::max(scale, std::abs(r));
    max_im = std::max(max_im, std::abs(r.imag()));
  }
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      gap = std::min(gap, std::abs(roots[i] - roots[j]));
  rep.degeneracy_gap = gap / (1.0 + scale);

  const bool has_pair = max_im > 1e-6 * scale;
  if (!has_pair)
    rep.regime = Regime::kNoArc;
  else
    rep.regime = res[0] > 0.0 ? Regime::kArcNegative : Regime::kArcPositive;
  rep.boundary_crossing = std::abs(res[1]) <= tol;
  rep.boundary_degenerate = rep.degeneracy_gap <= tol;
  return rep;
}

}  // namespace meixner
