#include "meixner/transition.hpp"

#include <algorithm>
#include <cmath>

#include "meixner/polyeval.hpp"

namespace meixner {

namespace {

Matrix3 companion(double r0, double r1, double r2) {
  return Matrix3{{{r0, r1, r2}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
}

double trace(const Matrix3& m) { return m[0][0] + m[1][1] + m[2][2]; }

double det(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<double, 4> charpoly(const Matrix3& m) {
  const double tr = trace(m);
  const double tr2 = trace(matmul(m, m));
  return {1.0, -tr, 0.5 * (tr * tr - tr2), -det(m)};
}

}  // namespace

Matrix3 matmul(const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Matrix3 step_matrix_second(const ParamsSecond& p, double t) {
  const double a = p.a();
  return companion(0.5 * t - 1.5 * a - 1.0, -0.75 * a * (a + 1.0),
                   -0.125 * a * a * (a + 1.0));
}

std::array<Matrix3, 2> step_matrices_first(const ParamsFirst& p, double t) {
  const double a1 = p.a1(), a2 = p.a2();
  const double mid = -0.5 * a1 * (a1 + 1.0) - 0.5 * a2 * (a2 + 1.0);
  const Matrix3 m1 = companion(0.5 * t - 1.5 * a1 - 0.5 * a2 - 1.0, mid,
                               -0.5 * a1 * (a1 + 1.0) * (a1 - a2));
  const Matrix3 m2 = companion(0.5 * t - 1.5 * a2 - 0.5 * a1 - 1.0, mid,
                               -0.5 * a2 * (a2 + 1.0) * (a2 - a1));
  return {m1, m2};
}

std::array<double, 4> charpoly_second(const ParamsSecond& p, double t) {
  return charpoly(step_matrix_second(p, t));
}

std::array<double, 4> charpoly_first(const ParamsFirst& p, double t) {
  const auto m = step_matrices_first(p, t);
  return charpoly(matmul(m[1], m[0]));
}

std::array<cplx, 3> eigen_ordered(const std::array<double, 4>& cp) {
  const auto r = cubic_roots(cp[0], cp[1], cp[2], cp[3]);
  std::array<cplx, 3> out{r[0], r[1], r[2]};
  std::sort(out.begin(), out.end(), [](cplx x, cplx y) {
    if (std::abs(std::abs(x) - std::abs(y)) > 1e-12 * (std::abs(x) + std::abs(y)))
      return std::abs(x) > std::abs(y);
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return out;
}

cplx t_of_l_second(const ParamsSecond& p, cplx l) {
  const double b = 1.0 / std::sqrt(1.0 - p.c);
  const cplx a = 2.0 * l + b + b * b;
  const cplx bb = 2.0 * l - b + b * b;
  const cplx cc = 2.0 * l - 1.0 + b * b;
  return 0.25 * a * bb * cc / (l * l);
}

cplx phi_of_l_second(const ParamsSecond& p, cplx l) {
  const double b = 1.0 / std::sqrt(1.0 - p.c);
  const cplx a = 2.0 * l + b + b * b;
  const cplx bb = 2.0 * l - b + b * b;
  const cplx cc = 2.0 * l - 1.0 + b * b;
  return a * bb / (cc * cc);
}

cplx f_second(const ParamsSecond& p, cplx l) {
  return 2.0 * std::log(l) + t_of_l_second(p, l) * std::log(phi_of_l_second(p, l));
}

namespace {

struct FirstCurve {
  double d, q1, q2, g1, g2, k;
  explicit FirstCurve(const ParamsFirst& p) {
    const double a1 = p.a1(), a2 = p.a2();
    d = a1 * (a1 + 1.0) + a2 * (a2 + 1.0);
    q1 = a1 * (1.0 + a1) * (1.0 + a1) + a2 * (1.0 + a2) * (1.0 + a2);
    q2 = a1 * a1 * (1.0 + a1) + a2 * a2 * (1.0 + a2);
    g1 = a2 * (a2 + 1.0) * (a1 - a2);
    g2 = a1 * (a1 + 1.0) * (a1 - a2);
    k = (a1 + a2 + 1.0) * (a1 - a2) * (a1 - a2);
  }
};

}  // namespace

cplx l_of_s_first(const ParamsFirst& p, cplx s) {
  const FirstCurve fc(p);
  return (s - fc.g1) * (s + fc.g2) / (fc.d * fc.d);
}

cplx t_of_s_first(const ParamsFirst& p, cplx s) {
  const FirstCurve fc(p);
  return (s + fc.q2) * (s + fc.q1) * (2.0 * s + fc.k) /
         (fc.d * (s + fc.g2) * (s - fc.g1));
}

cplx phi_of_s_first(const ParamsFirst& p, cplx s) {
  const FirstCurve fc(p);
  return (s + fc.q1) / (s + fc.q2);
}

cplx f_first(const ParamsFirst& p, cplx s) {
  return std::log(l_of_s_first(p, s)) +
         t_of_s_first(p, s) * std::log(phi_of_s_first(p, s));
}

cplx s_of_t_first(const ParamsFirst& p, double t) {
  const FirstCurve fc(p);
  // 2(s+q2)(s+q1)(s+k/2) - t d (s+g2)(s-g1) = 0
  const double c3 = 2.0;
  const double c2 = 2.0 * (fc.q1 + fc.q2 + 0.5 * fc.k) - t * fc.d;
  const double c1 = 2.0 * (fc.q1 * fc.q2 + 0.5 * fc.k * (fc.q1 + fc.q2)) -
                    t * fc.d * (fc.g2 - fc.g1);
  const double c0 = fc.q1 * fc.q2 * fc.k + t * fc.d * fc.g1 * fc.g2;
  const auto rs = cubic_roots(c3, c2, c1, c0);
  cplx best = rs[0];
  for (const auto& r : rs)
    if (std::abs(l_of_s_first(p, r)) > std::abs(l_of_s_first(p, best))) best = r;
  return best;
}

namespace {

double top_log_abs(const std::array<double, 4>& cp) {
  const auto ev = eigen_ordered(cp);
  return std::log(std::abs(ev[0]));
}

double main_term_quad(const std::function<double(double)>& log_l1, double t) {
  return gl_integrate([&](double u) { return log_l1(t / (u * u)) * 2.0 * u; },
                      1e-9, 1.0, 400);
}

}  // namespace

double main_term_second(const ParamsSecond& p, double t) {
  return 2.0 * main_term_quad(
                   [&](double tt) { return top_log_abs(charpoly_second(p, tt)); },
                   t);
}

double main_term_first(const ParamsFirst& p, double t) {
  return main_term_quad(
      [&](double tt) { return top_log_abs(charpoly_first(p, tt)); }, t);
}

namespace {

template <class Params>
double discrepancy_impl(const Params& p, int n, double t, double mt) {
  const auto seq = build_stepline(p, 2 * n);
  const auto vals = eval_scaled(seq, n * t);
  const double lhs = (vals[2 * n].log_abs - std::lgamma(2.0 * n + 1.0)) / n;
  return std::abs(lhs - mt);
}

}  // namespace

double discrepancy_second(const ParamsSecond& p, int n, double t) {
  return discrepancy_impl(p, n, t, main_term_second(p, t));
}

double discrepancy_first(const ParamsFirst& p, int n, double t) {
  return discrepancy_impl(p, n, t, main_term_first(p, t));
}

}  // namespace meixner
