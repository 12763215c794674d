#pragma once

#include <array>
#include <vector>

#include "meixner/numerics.hpp"
#include "meixner/params.hpp"

namespace meixner {

// ---- classical family: quadratic spectral curve ----

struct ClassicalEdges {
  double e1 = 0.0;  // end of the saturated zone
  double e2 = 0.0;  // right edge of the support
};
ClassicalEdges classical_edges(const ParamsClassical& p);

// principal sheet: the root of E^2 + ((1/z)(1/c - 1) - (1/c + 1))E + 1/c
// with smaller modulus (tends to 1 at infinity)
cplx classical_E0(const ParamsClassical& p, cplx z);

// ---- multiple families: cubic spectral curves ----

// coefficients {A,B,C,D} of A f^3 + B f^2 + C f + D = 0 at the given z
std::array<cplx, 4> cubic_first(const ParamsFirst& p, cplx z);
std::array<cplx, 4> cubic_second(const ParamsSecond& p, cplx z);

// z-discriminant of the cubic. First kind: full quartic in z (descending).
// Second kind: disc(z) = s^3 (s-1)^2 z^2 * factor(z) with s = 1/c; the
// cubic factor is returned (descending).
std::array<double, 5> disc_coeffs_first(const ParamsFirst& p);
std::array<double, 4> disc_factor_second(const ParamsSecond& p);

// real branch points, ascending
std::vector<double> branch_points_first(const ParamsFirst& p);
struct BranchPointsSecond {
  double e_minus = 0.0;  // negative: left end of the saturated zone of mu
  double e1 = 0.0;       // end of the saturated zone of lambda
  double e2 = 0.0;       // right edge of supp lambda
};
BranchPointsSecond branch_points_second(const ParamsSecond& p);

// the three sheets at z, obtained by analytic continuation down from
// Re(z) + i*1e6 where sheets are identified by their infinity behavior:
//   first kind:  {1 + 2/z, (1/c1)(1 - 1/z), (1/c2)(1 - 1/z)}
//   second kind: {1 + 2/z, two branches of the double (1/c)(1 - 1/z)}
// (the internal order of the second-kind double pair is not meaningful)
std::array<cplx, 3> phi_first(const ParamsFirst& p, cplx z);
std::array<cplx, 3> phi_second(const ParamsSecond& p, cplx z);

// limiting zero-density values at a point x (boundary value from above)
double lambda_density_classical(const ParamsClassical& p, double x);
double lambda_density_first(const ParamsFirst& p, double x);
double lambda_density_second(const ParamsSecond& p, double x);
double mu_density_second(const ParamsSecond& p, double x);

// sampled density with quadrature mass and a trapezoid CDF
struct DensityGrid {
  double lo = 0.0, hi = 0.0;
  std::vector<double> xs;      // ascending, uniform, endpoints included
  std::vector<double> values;  // density at xs
  std::vector<double> cum;     // trapezoid cumulative along xs
  double mass = 0.0;           // quadrature mass of the full measure
  double saturation_end = 0.0; // boundary of the density == 1 zone
};

DensityGrid lambda_grid_classical(const ParamsClassical& p, int ncells = 400);
DensityGrid lambda_grid_first(const ParamsFirst& p, int ncells = 400);
DensityGrid lambda_grid_second(const ParamsSecond& p, int ncells = 400);
// grid covers [25*e_minus, 0]; mass includes the tail beyond the grid
DensityGrid mu_grid_second(const ParamsSecond& p, int ncells = 400);

// CDF of the sampled measure at x (0 left of the grid, total at the right)
double grid_cdf(const DensityGrid& g, double x);

}  // namespace meixner
