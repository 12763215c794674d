#include "meixner/polyeval.hpp"

#include <algorithm>
#include <stdexcept>

namespace meixner {

namespace {

RecCoeffs step_coeffs(const SteplineSequence& seq, int k) {
  if (seq.kind == Kind::classical)
    return rec_coeffs_classical(k, std::get<ParamsClassical>(seq.params));
  const int n = k / 2;
  if (seq.kind == Kind::first) {
    const auto& p = std::get<ParamsFirst>(seq.params);
    // even step advances n1 at (n,n); odd step advances n2, which is the
    // leading coordinate of the parameter-swapped system at index (n, n+1)
    return (k % 2 == 0) ? rec_coeffs_first({n, n}, p)
                        : rec_coeffs_first_swapped({n, n + 1}, p);
  }
  const auto& p = std::get<ParamsSecond>(seq.params);
  return (k % 2 == 0) ? rec_coeffs_second({n, n}, p)
                      : rec_coeffs_second_swapped({n, n + 1}, p);
}

SteplineSequence build_impl(Kind kind, AnyParams params, int N) {
  if (N < 0) throw std::invalid_argument("degree bound must be >= 0");
  SteplineSequence seq;
  seq.kind = kind;
  seq.params = std::move(params);
  seq.max_degree = N;
  seq.steps.resize(N);
  for (int k = 0; k < N; ++k) seq.steps[k] = step_coeffs(seq, k);

  const int ncoef = std::min(N, 64);
  seq.polys.resize(ncoef + 1);
  seq.polys[0].coeffs = {1.0};
  for (int k = 0; k < ncoef; ++k) {
    const RecCoeffs& rc = seq.steps[k];
    std::vector<double> next(k + 2, 0.0);
    const auto& pk = seq.polys[k].coeffs;
    for (int i = 0; i <= k; ++i) {
      next[i + 1] += pk[i];        // x * P_k
      next[i] -= rc.b * pk[i];     // -b * P_k
    }
    if (k >= 1) {
      const auto& pk1 = seq.polys[k - 1].coeffs;
      for (int i = 0; i <= k - 1; ++i) next[i] -= rc.c * pk1[i];
    }
    if (k >= 2) {
      const auto& pk2 = seq.polys[k - 2].coeffs;
      for (int i = 0; i <= k - 2; ++i) next[i] -= rc.d * pk2[i];
    }
    seq.polys[k + 1].coeffs = std::move(next);
  }
  return seq;
}

// signed log-magnitude arithmetic
struct SLog {
  int sign = 0;
  double lg = -INFINITY;
};

SLog slog_of(double v) {
  if (v == 0.0) return {0, -INFINITY};
  return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
}

SLog mul(SLog x, SLog y) {
  if (x.sign == 0 || y.sign == 0) return {0, -INFINITY};
  return {x.sign * y.sign, x.lg + y.lg};
}

SLog add3(SLog t1, SLog t2, SLog t3) {
  double m = std::max({t1.lg, t2.lg, t3.lg});
  if (m == -INFINITY) return {0, -INFINITY};
  double acc = 0.0;
  if (t1.sign != 0) acc += t1.sign * std::exp(t1.lg - m);
  if (t2.sign != 0) acc += t2.sign * std::exp(t2.lg - m);
  if (t3.sign != 0) acc += t3.sign * std::exp(t3.lg - m);
  if (acc == 0.0) return {0, -INFINITY};
  return {acc > 0.0 ? 1 : -1, m + std::log(std::abs(acc))};
}

}  // namespace

SteplineSequence build_stepline(const ParamsClassical& p, int N) {
  return build_impl(Kind::classical, p, N);
}
SteplineSequence build_stepline(const ParamsFirst& p, int N) {
  return build_impl(Kind::first, p, N);
}
SteplineSequence build_stepline(const ParamsSecond& p, int N) {
  return build_impl(Kind::second, p, N);
}

std::vector<ScaledValue> eval_scaled(const SteplineSequence& seq, double x) {
  const int N = seq.max_degree;
  std::vector<ScaledValue> out(N + 1);
  SLog pm2{0, -INFINITY}, pm1{0, -INFINITY}, pk{1, 0.0};
  out[0] = {1, 0.0};
  for (int k = 0; k < N; ++k) {
    const RecCoeffs& rc = seq.steps[k];
    SLog t1 = mul(slog_of(x - rc.b), pk);
    SLog t2 = mul(slog_of(-rc.c), pm1);
    SLog t3 = mul(slog_of(-rc.d), pm2);
    SLog nxt = add3(t1, t2, t3);
    pm2 = pm1;
    pm1 = pk;
    pk = nxt;
    out[k + 1] = {pk.sign, pk.lg};
  }
  return out;
}

double pochhammer_falling(double k, int j) {
  double v = 1.0;
  for (int i = 0; i < j; ++i) v *= (-k + i);
  return v;
}

WeightSpec weight_spec(const ParamsClassical& p) { return {p.beta, p.c}; }
WeightSpec weight_spec(const ParamsFirst& p, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
  return {p.beta, which == 1 ? p.c1 : p.c2};
}
WeightSpec weight_spec(const ParamsSecond& p, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
  return {which == 1 ? p.beta1 : p.beta2, p.c};
}

double weight_log(const WeightSpec& w, int j) {
  return std::lgamma(w.beta + j) - std::lgamma(w.beta) + j * std::log(w.c) -
         std::lgamma(j + 1.0);
}

double weight_at(const WeightSpec& w, int j) { return std::exp(weight_log(w, j)); }

namespace {

// shared series plumbing: the polynomial is sum_j A_j * (-x)_j; each family
// supplies the coefficients A_j of the terminating double sum
std::vector<double> series_terms_first(MultiIndex idx, const ParamsFirst& p) {
  const int n1 = idx.n1, n2 = idx.n2, J = n1 + n2;
  const double c1 = p.c1, c2 = p.c2, beta = p.beta;
  // prefactor (c1/(c1-1))^n1 (c2/(c2-1))^n2 (beta)_{n1+n2}
  double pref = std::pow(c1 / (c1 - 1.0), n1) * std::pow(c2 / (c2 - 1.0), n2);
  for (int i = 0; i < J; ++i) pref *= (beta + i);
  const double g1 = (c1 - 1.0) / c1, g2 = (c2 - 1.0) / c2;
  std::vector<double> A(J + 1, 0.0);
  for (int j = 0; j <= J; ++j) {
    double pochb = 1.0;  // (beta)_j
    for (int i = 0; i < j; ++i) pochb *= (beta + i);
    double s = 0.0;
    for (int k = std::max(0, j - n2); k <= std::min(j, n1); ++k) {
      double term = pochhammer_falling(n1, k) * pochhammer_falling(n2, j - k);
      term *= std::pow(g1, k) * std::pow(g2, j - k);
      for (int i = 2; i <= k; ++i) term /= i;
      for (int i = 2; i <= j - k; ++i) term /= i;
      s += term;
    }
    A[j] = pref * s / pochb;
  }
  return A;
}

std::vector<double> series_terms_second(MultiIndex idx, const ParamsSecond& p) {
  const int n1 = idx.n1, n2 = idx.n2, J = n1 + n2;
  const double c = p.c, b1 = p.beta1, b2 = p.beta2;
  double pref = std::pow(c / (c - 1.0), J);
  for (int i = 0; i < n2; ++i) pref *= (b2 + i);
  for (int i = 0; i < n1; ++i) pref *= (b1 + i);
  const double g = (c - 1.0) / c;
  std::vector<double> A(J + 1, 0.0);
  for (int j = 0; j <= J; ++j) {
    double pochb1 = 1.0;  // (beta1)_j
    for (int i = 0; i < j; ++i) pochb1 *= (b1 + i);
    double s = 0.0;
    for (int k = std::max(0, j - n2); k <= std::min(j, n1); ++k) {
      const int m = j - k;
      double term = pochhammer_falling(n1, k) * pochhammer_falling(n2, m);
      for (int i = 0; i < m; ++i) term *= (b1 + n1 + i);  // (beta1+n1)_m
      for (int i = 0; i < m; ++i) term /= (b2 + i);       // / (beta2)_m
      for (int i = 2; i <= k; ++i) term /= i;
      for (int i = 2; i <= m; ++i) term /= i;
      s += term;
    }
    A[j] = pref * std::pow(g, j) * s / pochb1;
  }
  return A;
}

void check_oracle_scale(MultiIndex idx) {
  if (idx.n1 < 0 || idx.n2 < 0 || idx.n1 + idx.n2 > 12)
    throw std::invalid_argument("series oracle limited to n1 + n2 <= 12");
}

double series_value(const std::vector<double>& A, double x) {
  double v = A[0], fall = 1.0;
  for (size_t j = 1; j < A.size(); ++j) {
    fall *= (static_cast<double>(j) - 1.0 - x);  // (-x)_j / (-x)_{j-1}
    v += A[j] * fall;
  }
  return v;
}

MonicPoly series_poly(const std::vector<double>& A) {
  const int J = static_cast<int>(A.size()) - 1;
  std::vector<double> out(J + 1, 0.0);
  std::vector<double> q{1.0};  // coefficients of (-x)_j, ascending
  out[0] += A[0];
  for (int j = 1; j <= J; ++j) {
    // (-x)_j = (j-1-x) * (-x)_{j-1}
    std::vector<double> nq(j + 1, 0.0);
    for (int i = 0; i < j; ++i) {
      nq[i] += (j - 1.0) * q[i];
      nq[i + 1] -= q[i];
    }
    q = std::move(nq);
    for (int i = 0; i <= j; ++i) out[i] += A[j] * q[i];
  }
  MonicPoly poly;
  poly.coeffs = std::move(out);
  return poly;
}

}  // namespace

double series_first(MultiIndex idx, const ParamsFirst& p, double x) {
  check_oracle_scale(idx);
  return series_value(series_terms_first(idx, p), x);
}

double series_second(MultiIndex idx, const ParamsSecond& p, double x) {
  check_oracle_scale(idx);
  return series_value(series_terms_second(idx, p), x);
}

MonicPoly series_first_poly(MultiIndex idx, const ParamsFirst& p) {
  check_oracle_scale(idx);
  return series_poly(series_terms_first(idx, p));
}

MonicPoly series_second_poly(MultiIndex idx, const ParamsSecond& p) {
  check_oracle_scale(idx);
  return series_poly(series_terms_second(idx, p));
}

double orthogonality_residual(const MonicPoly& poly, const WeightSpec& w,
                              int j, int K) {
  const int deg = poly.degree();
  double num = 0.0, den = 0.0;
  const bool adaptive = (K <= 0);
  int limit = adaptive ? 50 : K;
  int k = 0;
  while (true) {
    for (; k <= limit; ++k) {
      const double term =
          poly(static_cast<double>(k)) * pochhammer_falling(k, j) * weight_at(w, k);
      num += term;
      den += std::abs(term);
    }
    // tail estimate: weight at the cut times polynomial growth bound
    const double tail = weight_at(w, limit) *
                        std::pow(std::max(1.0, static_cast<double>(limit)),
                                 static_cast<double>(deg + j));
    if (tail < 1e-18 * std::max(den, 1e-300)) break;
    if (!adaptive) {
      if (tail > 1e-15 * std::max(den, 1e-300))
        throw std::runtime_error(
            "orthogonality_residual: truncation K too small for tolerance");
      break;
    }
    limit *= 2;
    if (limit > 2000000)
      throw std::runtime_error("orthogonality_residual: truncation runaway");
  }
  if (den == 0.0) return 0.0;
  return std::abs(num) / den;
}

}  // namespace meixner
