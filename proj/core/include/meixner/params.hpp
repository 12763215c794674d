// Parameter sets for the Meixner polynomial families and their nearest
// neighbour recurrence coefficients.
//
// Conventions used throughout the library:
//   a = c/(1-c) for a weight parameter c in (0,1);  sigma = 1/c.
// "first kind": one shape parameter beta, two weight parameters c1 != c2.
// "second kind": two shape parameters beta1, beta2 (non-integer difference),
// one weight parameter c.  "classical": single weight (beta, c).
#pragma once

#include <stdexcept>

namespace meixner {

struct MultiIndex {
  int n1 = 0;
  int n2 = 0;
};

// x P_k = P_{k+1} + b P_k + c P_{k-1} + d P_{k-2}
struct RecCoeffs {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

// a = c/(1-c); throws std::invalid_argument outside (0,1)
double a_of(double c);

struct ParamsClassical {
  double beta;
  double c;
  ParamsClassical(double beta_, double c_);
  double a() const { return c / (1.0 - c); }
};

struct ParamsFirst {
  double beta;
  double c1;
  double c2;
  ParamsFirst(double beta_, double c1_, double c2_);
  double a1() const { return c1 / (1.0 - c1); }
  double a2() const { return c2 / (1.0 - c2); }
};

struct ParamsSecond {
  double beta1;
  double beta2;
  double c;
  ParamsSecond(double beta1_, double beta2_, double c_);
  double a() const { return c / (1.0 - c); }
  double sigma() const { return 1.0 / c; }
};

RecCoeffs rec_coeffs_classical(int n, const ParamsClassical& p);

RecCoeffs rec_coeffs_first(MultiIndex idx, const ParamsFirst& p);
// same formulas with the roles of (a1, c1) and (a2, c2) exchanged
RecCoeffs rec_coeffs_first_swapped(MultiIndex idx, const ParamsFirst& p);

RecCoeffs rec_coeffs_second(MultiIndex idx, const ParamsSecond& p);
// same formulas with beta1 and beta2 exchanged
RecCoeffs rec_coeffs_second_swapped(MultiIndex idx, const ParamsSecond& p);

}  // namespace meixner
