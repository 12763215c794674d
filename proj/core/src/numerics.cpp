#include "meixner/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace meixner {

cplx poly_eval(const std::vector<cplx>& c, cplx z) {
  cplx v = 0.0;
  for (const cplx& ck : c) v = v * z + ck;
  return v;
}

static cplx poly_deriv_eval(const std::vector<cplx>& c, cplx z) {
  const int n = static_cast<int>(c.size()) - 1;
  cplx v = 0.0;
  for (int i = 0; i < n; ++i) v = v * z + c[i] * static_cast<double>(n - i);
  return v;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {};
  if (std::abs(coeffs[0]) == 0.0)
    throw std::invalid_argument("poly_roots: zero leading coefficient");
  if (deg == 1) return {-coeffs[1] / coeffs[0]};

  // normalize to monic
  std::vector<cplx> c(coeffs);
  for (cplx& ck : c) ck /= coeffs[0];

  // Cauchy bound for the root radius
  double r = 0.0;
  for (int i = 1; i <= deg; ++i) r = std::max(r, std::abs(c[i]));
  r = 1.0 + r;

  // Durand-Kerner from staggered points on a circle
  std::vector<cplx> z(deg);
  for (int i = 0; i < deg; ++i) {
    double th = 2.0 * M_PI * (i + 0.25) / deg + 0.7;
    z[i] = 0.7 * r * cplx(std::cos(th), std::sin(th));
  }
  for (int it = 0; it < 400; ++it) {
    double moved = 0.0;
    for (int i = 0; i < deg; ++i) {
      cplx num = poly_eval(c, z[i]);
      cplx den = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) == 0.0) continue;
      cplx dz = num / den;
      z[i] -= dz;
      moved = std::max(moved, std::abs(dz));
    }
    if (moved < 1e-15 * (1.0 + r)) break;
  }
  // Newton polish (helps simple roots reach full precision; harmless at
  // multiple roots where accuracy is limited to ~sqrt(eps) anyway)
  for (int i = 0; i < deg; ++i) {
    for (int it = 0; it < 3; ++it) {
      cplx f = poly_eval(c, z[i]);
      cplx df = poly_deriv_eval(c, z[i]);
      if (std::abs(df) < 1e-300) break;
      cplx step = f / df;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(z[i]))) break;
      z[i] -= step;
    }
  }
  return z;
}

std::array<cplx, 3> cubic_roots(cplx c3, cplx c2, cplx c1, cplx c0) {
  // closed-form (Cardano) with a Newton polish; faster than iteration and
  // called in hot loops (branch continuation evaluates many cubics)
  if (std::abs(c3) == 0.0)
    throw std::invalid_argument("cubic_roots: zero leading coefficient");
  const cplx b = c2 / c3, c = c1 / c3, d = c0 / c3;
  const cplx p = c - b * b / 3.0;
  const cplx q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const cplx disc = q * q / 4.0 + p * p * p / 27.0;
  const cplx sq = std::sqrt(disc);
  cplx u3 = -q / 2.0 + sq;
  if (std::abs(u3) < std::abs(-q / 2.0 - sq)) u3 = -q / 2.0 - sq;
  cplx u = std::pow(u3, 1.0 / 3.0);
  if (std::abs(u) < 1e-300) u = 0.0;
  const cplx w(-0.5, 0.8660254037844386467637231707529362);
  std::array<cplx, 3> roots;
  const std::vector<cplx> mono{1.0, b, c, d};
  for (int k = 0; k < 3; ++k) {
    cplx uk = u * (k == 0 ? cplx(1.0) : (k == 1 ? w : w * w));
    cplx t = (std::abs(uk) < 1e-300) ? cplx(0.0) : uk - p / (3.0 * uk);
    cplx zk = t - b / 3.0;
    for (int it = 0; it < 2; ++it) {
      cplx f = poly_eval(mono, zk);
      cplx df = poly_deriv_eval(mono, zk);
      if (std::abs(df) < 1e-14 * (1.0 + std::abs(zk))) break;
      zk -= f / df;
    }
    roots[k] = zk;
  }
  return roots;
}

namespace {

// Gauss-Legendre rule by Newton iteration on the Legendre polynomial.
GlRule make_gl(int n) {
  GlRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GlRule& gl_rule(int n) {
  static std::map<int, GlRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
  return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n) {
  const GlRule& r = gl_rule(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

}  // namespace meixner
