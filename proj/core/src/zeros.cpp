#include "meixner/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meixner/numerics.hpp"

namespace meixner {

namespace {

int sign_at(const SteplineSequence& seq, int k, double x) {
  return eval_scaled(seq, x)[k].sign;
}

double bisect(const SteplineSequence& seq, int k, double lo, double hi,
              int slo, double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const int sm = sign_at(seq, k, mid);
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double zero_bound(const SteplineSequence& seq, int k) {
  if (k < 1 || k > seq.max_degree)
    throw std::invalid_argument("zero_bound: degree out of range");
  double max_b = 0.0;
  for (int i = 0; i < k; ++i) max_b = std::max(max_b, std::abs(seq.steps[i].b));
  double best = INFINITY;
  for (double tau = 0.5; tau <= 16.0 * (1.0 + max_b) * k; tau *= 1.3) {
    double m = 0.0;
    for (int i = 0; i < k; ++i) {
      double row = std::abs(seq.steps[i].b) + tau;
      if (i + 1 < k) row += std::abs(seq.steps[i + 1].c) / tau;
      if (i + 2 < k) row += std::abs(seq.steps[i + 2].d) / (tau * tau);
      m = std::max(m, row);
    }
    best = std::min(best, m);
  }
  return best;
}

std::vector<double> stepline_zeros(const SteplineSequence& seq, int k) {
  if (k < 0 || k > seq.max_degree)
    throw std::invalid_argument("stepline_zeros: degree out of range");
  if (k == 0) return {};
  const double xmax = 1.1 * zero_bound(seq, k);
  const double tol = 1e-11 * xmax;

  for (int attempt = 0; attempt < 3; ++attempt) {
    const int npts = (20 * k + 40) << (2 * attempt);
    std::vector<double> zeros;
    zeros.reserve(k);
    // start strictly left of the support: in the saturated zone the lowest
    // zero is pinned to the lattice point 0 within e^{-cn}, far below the
    // rounding noise of the recurrence at x = 0, so only a bracket opened
    // from negative x (where the evaluation is cancellation-free) sees it
    double xprev = -0.1;
    int sprev = sign_at(seq, k, xprev);
    for (int i = 1; i <= npts; ++i) {
      const double u = static_cast<double>(i) / npts;
      const double x = xmax * u * u;
      const int s = sign_at(seq, k, x);
      if (s != 0 && sprev != 0 && s != sprev)
        zeros.push_back(bisect(seq, k, xprev, x, sprev, tol));
      else if (s == 0)
        zeros.push_back(x);
      if (s != 0) {
        sprev = s;
        xprev = x;
      }
    }
    if (static_cast<int>(zeros.size()) == k) {
      // a pinned lowest zero may bisect to the noise plateau's edge just
      // left of 0; report it as the lattice point instead
      if (zeros.front() < 0.0) zeros.front() = 0.0;
      return zeros;
    }
  }
  throw std::runtime_error("stepline_zeros: failed to isolate all zeros");
}

std::vector<double> poly_real_zeros(const MonicPoly& p) {
  std::vector<cplx> coeffs(p.coeffs.size());
  const int deg = p.degree();
  for (int i = 0; i <= deg; ++i) coeffs[i] = p.coeffs[deg - i];  // descending
  auto roots = poly_roots(coeffs);
  double scale = 0.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  std::vector<double> out;
  for (const auto& r : roots)
    if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, scale)) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

double zero_scale(const SteplineSequence& seq, int k) {
  if (seq.kind == Kind::classical) return static_cast<double>(k);
  return static_cast<double>((k + 1) / 2);
}

bool interlace(const std::vector<double>& lo_deg, const std::vector<double>& hi_deg) {
  if (hi_deg.size() != lo_deg.size() + 1) return false;
  for (size_t i = 0; i < lo_deg.size(); ++i)
    if (!(hi_deg[i] < lo_deg[i] && lo_deg[i] < hi_deg[i + 1])) return false;
  return true;
}

double ks_distance(const std::vector<double>& sorted_samples, double total_mass,
                   const std::function<double(double)>& cdf) {
  const size_t m = sorted_samples.size();
  if (m == 0) return 0.0;
  const double step = total_mass / static_cast<double>(m);
  double d = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const double f = cdf(sorted_samples[i]);
    d = std::max(d, std::abs(f - step * static_cast<double>(i)));
    d = std::max(d, std::abs(f - step * static_cast<double>(i + 1)));
  }
  return d;
}

}  // namespace meixner
