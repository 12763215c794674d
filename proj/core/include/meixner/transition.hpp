#pragma once

#include <array>

#include "meixner/numerics.hpp"
#include "meixner/params.hpp"

namespace meixner {

using Matrix3 = std::array<std::array<double, 3>, 3>;

Matrix3 matmul(const Matrix3& a, const Matrix3& b);

// Companion matrices advancing three consecutive scaled stepline values at
// the scaled abscissa t; the second kind uses a single matrix per step, the
// first kind alternates two (one per index direction) whose product governs
// a full diagonal step.
Matrix3 step_matrix_second(const ParamsSecond& p, double t);
std::array<Matrix3, 2> step_matrices_first(const ParamsFirst& p, double t);

// characteristic polynomial coefficients {1, C2, C1, C0} of the step matrix
// (second kind) or of the two-step product (first kind)
std::array<double, 4> charpoly_second(const ParamsSecond& p, double t);
std::array<double, 4> charpoly_first(const ParamsFirst& p, double t);

// eigenvalues sorted by decreasing modulus (ties by Re, then Im, descending)
std::array<cplx, 3> eigen_ordered(const std::array<double, 4>& cp);

// --- rational uniformizations of the eigenvalue curves ---

// second kind, parametrized by the eigenvalue coordinate L:
//   with b = 1/sqrt(1-c), A = 2L+b+b^2, B = 2L-b+b^2, C = 2L-1+b^2
cplx t_of_l_second(const ParamsSecond& p, cplx l);
cplx phi_of_l_second(const ParamsSecond& p, cplx l);
// F(L) = 2 log L + t(L) log(AB/C^2); Re F equals the growth main term
cplx f_second(const ParamsSecond& p, cplx l);

// first kind, parametrized by the curve coordinate s
cplx l_of_s_first(const ParamsFirst& p, cplx s);
cplx t_of_s_first(const ParamsFirst& p, cplx s);
cplx phi_of_s_first(const ParamsFirst& p, cplx s);
cplx f_first(const ParamsFirst& p, cplx s);
// inverts t(s): the root of the cleared cubic with the largest |L(s)|
cplx s_of_t_first(const ParamsFirst& p, double t);

// growth main term: quadrature of log|L1| along the index ray
double main_term_second(const ParamsSecond& p, double t);
double main_term_first(const ParamsFirst& p, double t);

// | (1/n)(log|P_2n(n t)| - log((2n)!)) - main term |, the nth-root gap
double discrepancy_second(const ParamsSecond& p, int n, double t);
double discrepancy_first(const ParamsFirst& p, int n, double t);

}  // namespace meixner
