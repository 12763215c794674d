// Stepline polynomial sequences from the four-term recurrence, overflow-safe
// evaluation, explicit double-sum series oracles, and discrete-orthogonality
// residuals.
#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "meixner/params.hpp"

namespace meixner {

enum class Kind { classical, first, second };

// polynomial with coefficients in ascending degree order; last entry = 1
struct MonicPoly {
  std::vector<double> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double x) const {
    double v = 0.0;
    for (int i = degree(); i >= 0; --i) v = v * x + coeffs[i];
    return v;
  }
};

// signed log-magnitude value; sign == 0 encodes an exact zero
struct ScaledValue {
  int sign = 0;
  double log_abs = -INFINITY;
  double to_double() const { return sign * std::exp(log_abs); }
};

using AnyParams = std::variant<ParamsClassical, ParamsFirst, ParamsSecond>;

// Sequence along the nearly diagonal index path:
//   P_k corresponds to multi-index ((k+1)/2, k/2)
// (even k -> (k/2, k/2), odd k -> ((k+1)/2, (k-1)/2)).
struct SteplineSequence {
  Kind kind = Kind::classical;
  AnyParams params{ParamsClassical(1.0, 0.5)};
  int max_degree = 0;
  // steps[k] produces P_{k+1} = (x - b) P_k - c P_{k-1} - d P_{k-2}
  std::vector<RecCoeffs> steps;
  // coefficient form, kept only up to degree min(max_degree, 64)
  std::vector<MonicPoly> polys;

  MultiIndex index_of(int k) const { return {(k + 1) / 2, k / 2}; }
};

SteplineSequence build_stepline(const ParamsClassical& p, int N);
SteplineSequence build_stepline(const ParamsFirst& p, int N);
SteplineSequence build_stepline(const ParamsSecond& p, int N);

// values P_0(x) .. P_N(x) by running the recurrence in log space
std::vector<ScaledValue> eval_scaled(const SteplineSequence& seq, double x);

// (-k)_j (rising Pochhammer of -k); zero when j > k for integer k >= 0
double pochhammer_falling(double k, int j);

// lattice weight w(j) = (beta)_j c^j / j!
struct WeightSpec {
  double beta = 1.0;
  double c = 0.5;
};
WeightSpec weight_spec(const ParamsClassical& p);
WeightSpec weight_spec(const ParamsFirst& p, int which);   // which in {1,2}
WeightSpec weight_spec(const ParamsSecond& p, int which);  // which in {1,2}
double weight_log(const WeightSpec& w, int j);
double weight_at(const WeightSpec& w, int j);

// explicit double-sum values of the monic polynomials (oracle scale
// n1 + n2 <= 12; throws std::invalid_argument beyond)
double series_first(MultiIndex idx, const ParamsFirst& p, double x);
double series_second(MultiIndex idx, const ParamsSecond& p, double x);

// same sums expanded to coefficient form
MonicPoly series_first_poly(MultiIndex idx, const ParamsFirst& p);
MonicPoly series_second_poly(MultiIndex idx, const ParamsSecond& p);

// |sum_k P(k) (-k)_j w(k)| / sum_k |P(k) (-k)_j| w(k), truncated at K.
// K = 0 selects the truncation adaptively; an explicit K that leaves a
// relative tail above 1e-15 raises std::runtime_error.
double orthogonality_residual(const MonicPoly& poly, const WeightSpec& w,
                              int j, int K);

}  // namespace meixner
