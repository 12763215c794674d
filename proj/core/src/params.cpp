#include "meixner/params.hpp"

#include <cmath>

namespace meixner {

double a_of(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("weight parameter c must lie in (0,1)");
  return c / (1.0 - c);
}

ParamsClassical::ParamsClassical(double beta_, double c_) : beta(beta_), c(c_) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  (void)a_of(c);
}

ParamsFirst::ParamsFirst(double beta_, double c1_, double c2_)
    : beta(beta_), c1(c1_), c2(c2_) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  (void)a_of(c1);
  (void)a_of(c2);
  // the AT property needs distinct weight parameters; near-degenerate pairs
  // are rejected rather than silently producing an ill-conditioned system
  if (std::abs(c1 - c2) < 1e-8)
    throw std::invalid_argument("first kind requires c1 != c2 (|c1-c2| >= 1e-8)");
}

ParamsSecond::ParamsSecond(double beta1_, double beta2_, double c_)
    : beta1(beta1_), beta2(beta2_), c(c_) {
  if (!(beta1 > 0.0) || !(beta2 > 0.0))
    throw std::invalid_argument("beta1, beta2 must be positive");
  (void)a_of(c);
  const double diff = beta1 - beta2;
  if (std::abs(diff - std::round(diff)) <= 1e-12)
    throw std::invalid_argument(
        "second kind requires beta1 - beta2 not an integer");
}

RecCoeffs rec_coeffs_classical(int n, const ParamsClassical& p) {
  const double a = p.a();
  RecCoeffs r;
  r.b = n * (2.0 * a + 1.0) + a * p.beta;
  r.c = n * (n + p.beta - 1.0) * a * (a + 1.0);
  r.d = 0.0;
  return r;
}

namespace {

RecCoeffs first_impl(MultiIndex idx, double beta, double a1, double a2) {
  const double n1 = idx.n1, n2 = idx.n2;
  RecCoeffs r;
  r.b = n1 * (2.0 * a1 + 1.0) + n2 * (a1 + a2 + 1.0) + a1 * beta;
  r.c = (n1 * (a1 * a1 + a1) + n2 * (a2 * a2 + a2)) * (n1 + n2 + beta - 1.0);
  r.d = (beta + n1 + n2 - 1.0) * (beta + n1 + n2 - 2.0) * (a1 + 1.0) *
        (a1 - a2) * a1 * n1;
  return r;
}

RecCoeffs second_impl(MultiIndex idx, double beta1, double beta2, double a) {
  const double n1 = idx.n1, n2 = idx.n2;
  RecCoeffs r;
  r.b = n1 * (2.0 * a + 1.0) + n2 * (a + 1.0) + a * beta1;
  r.c = a * (a + 1.0) *
        (n1 * n2 + n1 * (n1 + beta1 - 1.0) + n2 * (n2 + beta2 - 1.0));
  r.d = a * a * (a + 1.0) * n1 * (n1 + beta1 - 1.0) * (n1 + beta1 - beta2);
  return r;
}

}  // namespace

RecCoeffs rec_coeffs_first(MultiIndex idx, const ParamsFirst& p) {
  return first_impl(idx, p.beta, p.a1(), p.a2());
}

RecCoeffs rec_coeffs_first_swapped(MultiIndex idx, const ParamsFirst& p) {
  return first_impl(idx, p.beta, p.a2(), p.a1());
}

RecCoeffs rec_coeffs_second(MultiIndex idx, const ParamsSecond& p) {
  return second_impl(idx, p.beta1, p.beta2, p.a());
}

RecCoeffs rec_coeffs_second_swapped(MultiIndex idx, const ParamsSecond& p) {
  return second_impl(idx, p.beta2, p.beta1, p.a());
}

}  // namespace meixner
