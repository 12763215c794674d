#include "meixner/scurve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace meixner {

namespace {

constexpr double kPi = std::numbers::pi;

// Two tracked sheets of the cubic plus their unwrapped arguments.  Only the
// colliding pair matters for w; the third root is re-identified each step.
struct PairState {
  cplx pj, pk;
  double aj = 0.0, ak = 0.0;
};

class LevelTracer {
 public:
  explicit LevelTracer(const ParamsFirst& p)
      : p_(p), s1_(1.0 / p.c1), s2_(1.0 / p.c2) {}

  std::array<cplx, 3> roots(cplx z) const {
    const auto c = cubic_first(p_, z);
    return cubic_roots(c[0], c[1], c[2], c[3]);
  }

  // log of the rational factor tying w to the sheet value
  double rat(cplx ph) const {
    return std::log(std::abs(ph - s1_)) + std::log(std::abs(ph - s2_)) -
           2.0 * std::log(std::abs(ph - 1.0));
  }

  // Re w at z, continuing the tracked pair from st; st is advanced in place
  // and the complex sheet-log difference is reported through dln.
  double w_re(cplx z, PairState& st, cplx& dln) const {
    const auto rs = roots(z);
    double best = INFINITY;
    int bi = 0, bj = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const double d = std::abs(rs[i] - st.pj) + std::abs(rs[j] - st.pk);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    const cplx pj = rs[bi], pk = rs[bj];
    const double aj = st.aj + std::arg(pj / st.pj);
    const double ak = st.ak + std::arg(pk / st.pk);
    st = {pj, pk, aj, ak};
    dln = cplx(std::log(std::abs(pj)) - std::log(std::abs(pk)), aj - ak);
    return (z * dln).real() + rat(pj) - rat(pk);
  }

  // the tracked pair at a fresh point: the two mutually closest roots
  PairState initial_state(cplx z) const {
    const auto rs = roots(z);
    int bi = 0, bj = 1;
    double best = INFINITY;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (std::abs(rs[i] - rs[j]) < best) {
          best = std::abs(rs[i] - rs[j]);
          bi = i;
          bj = j;
        }
    return {rs[bi], rs[bj], std::arg(rs[bi]), std::arg(rs[bj])};
  }

  // angles around the branch point where Re w changes sign on a small circle
  std::vector<double> arm_directions(cplx e, double h) const {
    constexpr int kScan = 1440;
    PairState st = initial_state(e + h);
    cplx dln;
    std::vector<double> ths(kScan + 1), vals(kScan + 1);
    for (int k = 0; k <= kScan; ++k) {
      ths[k] = 2.0 * kPi * k / kScan;
      vals[k] = w_re(e + h * std::polar(1.0, ths[k]), st, dln);
    }
    std::vector<double> dirs;
    for (int k = 1; k <= kScan; ++k) {
      const double v0 = vals[k - 1], v1 = vals[k];
      if ((v0 < 0.0) == (v1 < 0.0)) continue;
      const double t = v0 / (v0 - v1);
      dirs.push_back(ths[k - 1] + t * (ths[k] - ths[k - 1]));
    }
    return dirs;
  }

  // predictor-corrector walk along Re w = 0 starting in direction theta
  ArmTrace trace_arm(cplx e, double theta, double h) const {
    constexpr double kGd = 1e-7;  // finite-difference step for grad Re w
    constexpr int kMaxSteps = 300000;

    ArmTrace arm;
    arm.theta = theta;
    cplx z = e + h * std::polar(1.0, theta);
    PairState st = initial_state(z);
    arm.points = {e, z};
    arm.dln_abs = {0.0, 0.0};
    arm.min_abs_z = std::min(std::abs(e), std::abs(z));
    cplx prev_dir = std::polar(1.0, theta);
    const double escape = 60.0 * std::max(1.0, std::abs(e));

    cplx dln;
    for (int n = 0; n < kMaxSteps; ++n) {
      PairState at_z = st;
      const double w0 = w_re(z, at_z, dln);
      PairState tmp = at_z;
      const double wx = w_re(z + kGd, tmp, dln);
      tmp = at_z;
      const double wy = w_re(z + cplx(0.0, kGd), tmp, dln);
      const cplx g((wx - w0) / kGd, (wy - w0) / kGd);
      if (std::abs(g) == 0.0) break;
      cplx tvec = cplx(0.0, 1.0) * g / std::abs(g);
      if ((std::conj(prev_dir) * tvec).real() < 0.0) tvec = -tvec;
      const double he = std::min(h, std::max(0.3 * std::abs(z), 1e-5));
      cplx zn = z + he * tvec;
      for (int it = 0; it < 3; ++it) {
        tmp = at_z;
        const double w0n = w_re(zn, tmp, dln);
        tmp = at_z;
        const double wxn = w_re(zn + kGd, tmp, dln);
        tmp = at_z;
        const double wyn = w_re(zn + cplx(0.0, kGd), tmp, dln);
        const cplx g2((wxn - w0n) / kGd, (wyn - w0n) / kGd);
        const double g2n = std::norm(g2);
        if (g2n == 0.0) break;
        zn -= w0n * g2 / g2n;
      }
      st = at_z;
      w_re(zn, st, dln);
      prev_dir = (zn - z) / std::abs(zn - z);
      const cplx zp = z;
      z = zn;
      arm.points.push_back(z);
      arm.dln_abs.push_back(std::abs(dln));
      arm.min_abs_z = std::min(arm.min_abs_z, std::abs(z));

      if (std::abs(z) < 1e-4) {
        arm.hit_origin = true;
        arm.has_crossing = true;
        arm.crossing_x = 0.0;
        break;
      }
      if (z.imag() <= 0.0) {
        const double t = zp.imag() / (zp.imag() - z.imag());
        arm.has_crossing = true;
        arm.crossing_x = (zp + t * (z - zp)).real();
        break;
      }
      if (std::abs(z) > escape) break;
    }
    return arm;
  }

 private:
  ParamsFirst p_;
  double s1_, s2_;
};

double arm_mass(const ArmTrace& arm) {
  double m = 0.0;
  for (size_t i = 1; i < arm.points.size(); ++i)
    m += 0.5 * (arm.dln_abs[i] + arm.dln_abs[i - 1]) *
         std::abs(arm.points[i] - arm.points[i - 1]);
  return 2.0 * m / (2.0 * kPi);  // arc plus its mirror image
}

}  // namespace

GammaTrace trace_gamma(const ParamsFirst& p) {
  const auto co = disc_coeffs_first(p);
  const auto roots = poly_roots({co[0], co[1], co[2], co[3], co[4]});
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  cplx e(0.0, 0.0);
  for (const auto& r : roots)
    if (r.imag() > 1e-9 * scale && r.imag() > e.imag()) e = r;
  if (e.imag() == 0.0)
    throw std::invalid_argument(
        "trace_gamma: all branch points real, the arc is undefined here");

  LevelTracer tr(p);
  double h = std::max(1e-3, 2e-3 * std::abs(e));
  std::vector<double> dirs;
  for (int attempt = 0; attempt < 4; ++attempt) {
    dirs = tr.arm_directions(e, h);
    if (dirs.size() == 3) break;
    h *= 0.5;
  }
  if (dirs.empty())
    throw std::runtime_error("trace_gamma: no sign changes around branch point");

  GammaTrace out;
  out.branch_point = e;
  for (double th : dirs) out.arms.push_back(tr.trace_arm(e, th, h));
  for (size_t i = 0; i < out.arms.size(); ++i) {
    const auto& a = out.arms[i];
    if (!a.has_crossing) continue;
    if (out.gamma_arm < 0 || a.crossing_x < out.arms[out.gamma_arm].crossing_x)
      out.gamma_arm = static_cast<int>(i);
  }
  if (out.gamma_arm < 0)
    throw std::runtime_error("trace_gamma: no arm reached the real axis");
  out.mu_mass = arm_mass(out.arms[out.gamma_arm]);
  return out;
}

}  // namespace meixner
