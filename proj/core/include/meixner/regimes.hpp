#pragma once

#include <array>
#include <string>
#include <vector>

#include "meixner/curves.hpp"

namespace meixner {

// First-kind parameter regimes, named for where the arc supporting the
// second measure meets the real axis:
//  - kArcNegative: complex branch-point pair, arc crosses the negative axis
//  - kArcPositive: complex pair, arc crosses the positive axis
//  - kNoArc: all four branch points real, no arc off the axis
enum class Regime { kArcNegative, kArcPositive, kNoArc };

std::string regime_name(Regime r);

struct RegimeReport {
  Regime regime = Regime::kNoArc;
  bool boundary_crossing = false;   // near the zero-crossing transition
  bool boundary_degenerate = false; // near the double-root (no-arc) transition
  double residual_raw = 0.0;        // sign separates the two arc regimes
  double residual = 0.0;            // residual_raw on a parameter-free scale
  double degeneracy_gap = 0.0;      // min branch-point pair distance, scaled
  std::vector<cplx> branch_points;  // all four, sorted by real part
};

// Signed quantity separating the two arc regimes; zero on the boundary.
// Returns {raw, normalized}.
std::array<double, 2> crossing_residual(const ParamsFirst& p);

// Point (c1, c2) on the curve where two branch points merge (the boundary
// of the no-arc regime), parametrized by t in (-3 - sqrt(3), -3).
std::array<double, 2> degenerate_boundary_point(double t);

RegimeReport classify(const ParamsFirst& p, double tol = 1e-3);

}  // namespace meixner
