#pragma once

#include <vector>

#include "meixner/curves.hpp"
#include "meixner/scurve.hpp"

namespace meixner {

// Logarithmic potential -integral v(x) log|zeta - x| dx of the piecewise
// linear density held by the grid, evaluated exactly cell by cell.
double log_potential(const DensityGrid& g, cplx zeta);

// Cauchy transform integral v(x) / (z - x) dx of the same density, exact per
// cell.  Throws std::invalid_argument when z is within 1e-6 of the support.
cplx cauchy_transform(const DensityGrid& g, cplx z);

// Constancy check of the classical single-measure variational quantity
// W(x) = P(x) + (1+x)/2 * log(1/c) across the free zone (e1, e2), where it
// must equal 1 + log((1-c)/c).
struct ClassicalEquilibriumReport {
  double kappa_expected = 0.0;
  double kappa_mean = 0.0;
  double sup_dev = 0.0;  // max |W - kappa_expected| over the samples
  std::vector<double> xs;
  std::vector<double> values;
};
ClassicalEquilibriumReport classical_equilibrium(const ParamsClassical& p,
                                                 int npts = 9);

// Variational structure of one measure of a two-measure pair: the quantity
// is constant (= kappa) on the equality zone, dips below kappa where the
// measure is saturated, and exceeds kappa beyond the support.
struct ZoneCheck {
  double kappa = 0.0;
  double free_spread = 0.0;    // max - min over the equality-zone samples
  double sat_margin = 0.0;     // max over saturated samples minus kappa (< 0)
  double outside_margin = 0.0; // min beyond-support samples minus kappa (> 0)
  std::vector<double> ts;      // equality-zone abscissae (or arc fractions)
  std::vector<double> values;  // the variational quantity there
};

struct TwoZoneReport {
  ZoneCheck w1;  // quantity tied to the first measure, on the positive axis
  ZoneCheck w2;  // quantity tied to the second measure, on its support
  double lambda_mass = 0.0;
  double mu_mass = 0.0;
};

// First-kind pair: the second measure lives on the traced arc gt.
TwoZoneReport equilibrium_first(const ParamsFirst& p, const GammaTrace& gt);

// Second-kind pair: the second measure lives on the negative axis.
TwoZoneReport equilibrium_second(const ParamsSecond& p);

}  // namespace meixner
