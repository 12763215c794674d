// Small numerical kernels shared across the library: polynomial root
// finding, Gauss-Legendre rules, and adaptive quadrature helpers.
#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace meixner {

using cplx = std::complex<double>;

// Roots of a polynomial given by coefficients in descending degree order
// (coeffs[0] is the leading coefficient, must be nonzero).  Durand-Kerner
// iteration with Newton polish; adequate for the low degrees (<= 6) used here.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs_desc);

// Convenience wrapper for cubics c3 z^3 + c2 z^2 + c1 z + c0.
std::array<cplx, 3> cubic_roots(cplx c3, cplx c2, cplx c1, cplx c0);

// Evaluate a polynomial (descending coefficients) at z.
cplx poly_eval(const std::vector<cplx>& coeffs_desc, cplx z);

// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GlRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GlRule& gl_rule(int n);

// integral of f over [a, b] with an n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n);

}  // namespace meixner
