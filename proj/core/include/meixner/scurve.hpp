#pragma once

#include <vector>

#include "meixner/curves.hpp"

namespace meixner {

// One steepest-descent arm of Re w traced away from the complex branch point.
struct ArmTrace {
  double theta = 0.0;             // departure angle at the branch point
  std::vector<cplx> points;       // points[0] is the branch point itself
  std::vector<double> dln_abs;    // |log phi_i - log phi_j| at each point
  double min_abs_z = 0.0;         // closest approach to the origin
  bool hit_origin = false;        // terminated by shrinking into the origin
  bool has_crossing = false;      // reached the real axis (or the origin)
  double crossing_x = 0.0;        // real-axis crossing abscissa
};

// The arc gamma supporting the second measure of the first-kind pair:
// the level line Re w = 0 from the complex branch point down to the real
// axis, picked among the traced arms as the one with the smallest crossing.
struct GammaTrace {
  cplx branch_point;              // upper-half-plane discriminant root
  std::vector<ArmTrace> arms;
  int gamma_arm = -1;             // index into arms
  double mu_mass = 0.0;           // measure carried by gamma plus its mirror
};

// Traces the level lines of Re w for the first-kind parameters p, where
// w(z) integrates the difference of the two colliding sheet logarithms.
// Throws std::invalid_argument when the discriminant has no complex root
// (four real branch points: the arc degenerates and gamma is undefined).
GammaTrace trace_gamma(const ParamsFirst& p);

}  // namespace meixner
