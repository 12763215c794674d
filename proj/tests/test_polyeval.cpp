#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "meixner/params.hpp"
#include "meixner/polyeval.hpp"

using namespace meixner;

namespace {

double max_rel_coeff_dev(const MonicPoly& got, const MonicPoly& want) {
  REQUIRE(got.degree() == want.degree());
  double dev = 0.0;
  for (size_t j = 0; j < want.coeffs.size(); ++j)
    dev = std::max(dev, std::abs(got.coeffs[j] - want.coeffs[j]) /
                            std::max(1.0, std::abs(want.coeffs[j])));
  return dev;
}

}  // namespace

TEST_CASE("stepline walks the nearly diagonal path") {
  SteplineSequence seq = build_stepline(ParamsFirst(1.0, 0.5, 0.25), 7);
  CHECK(seq.index_of(0).n1 == 0);
  CHECK(seq.index_of(0).n2 == 0);
  CHECK(seq.index_of(5).n1 == 3);
  CHECK(seq.index_of(5).n2 == 2);
  CHECK(seq.index_of(6).n1 == 3);
  CHECK(seq.index_of(6).n2 == 3);
  CHECK(seq.polys.size() == 8);
  for (int k = 0; k <= 7; ++k) CHECK(seq.polys[k].degree() == k);
}

TEST_CASE("first kind: recurrence coefficients reproduce the double sum") {
  for (ParamsFirst p : {ParamsFirst(1.0, 0.5, 1.0 / 3.0), ParamsFirst(0.7, 0.6, 0.2),
                        ParamsFirst(1.3, 0.3, 0.55)}) {
    SteplineSequence seq = build_stepline(p, 10);
    for (int k = 1; k <= 10; ++k) {
      MonicPoly want = series_first_poly(seq.index_of(k), p);
      CHECK(max_rel_coeff_dev(seq.polys[k], want) <= 1e-10);
    }
  }
}

TEST_CASE("second kind: recurrence coefficients reproduce the double sum") {
  for (ParamsSecond p : {ParamsSecond(1.0, 1.5, 0.5), ParamsSecond(0.8, 1.7, 0.35),
                         ParamsSecond(1.2, 2.9, 0.6)}) {
    SteplineSequence seq = build_stepline(p, 10);
    for (int k = 1; k <= 10; ++k) {
      MonicPoly want = series_second_poly(seq.index_of(k), p);
      CHECK(max_rel_coeff_dev(seq.polys[k], want) <= 1e-10);
    }
  }
}

TEST_CASE("series point values agree with the coefficient form") {
  ParamsFirst p(1.0, 0.5, 1.0 / 3.0);
  ParamsSecond q(1.0, 1.5, 0.5);
  for (double x : {-1.5, 0.0, 2.7, 11.0}) {
    CHECK(series_first({3, 2}, p, x) ==
          doctest::Approx(series_first_poly({3, 2}, p)(x)).epsilon(1e-10));
    CHECK(series_second({2, 2}, q, x) ==
          doctest::Approx(series_second_poly({2, 2}, q)(x)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(series_first({7, 6}, p, 1.0), std::invalid_argument);
}

TEST_CASE("scaled evaluation matches direct evaluation at moderate degree") {
  SteplineSequence seq = build_stepline(ParamsSecond(1.0, 1.5, 0.5), 12);
  for (double x : {-3.0, 0.5, 7.0, 40.0}) {
    std::vector<ScaledValue> vals = eval_scaled(seq, x);
    for (int k = 0; k <= 12; ++k) {
      double direct = seq.polys[k](x);
      CHECK(vals[k].to_double() ==
            doctest::Approx(direct).epsilon(1e-9).scale(std::abs(direct) + 1.0));
    }
  }
}

TEST_CASE("scaled evaluation survives degrees far beyond coefficient range") {
  SteplineSequence seq = build_stepline(ParamsSecond(1.0, 1.5, 0.5), 400);
  std::vector<ScaledValue> vals = eval_scaled(seq, -200.0);
  CHECK(vals.size() == 401);
  CHECK(std::isfinite(vals[400].log_abs));
  CHECK(vals[400].sign != 0);
}

TEST_CASE("pochhammer_falling is (-k)_j") {
  CHECK(pochhammer_falling(5.0, 0) == doctest::Approx(1.0));
  CHECK(pochhammer_falling(5.0, 2) == doctest::Approx((-5.0) * (-4.0)));
  CHECK(pochhammer_falling(5.0, 6) == doctest::Approx(0.0));
  CHECK(pochhammer_falling(2.5, 2) == doctest::Approx((-2.5) * (-1.5)));
}

TEST_CASE("lattice weights") {
  WeightSpec w{1.5, 0.4};
  CHECK(weight_at(w, 0) == doctest::Approx(1.0));
  // w(j+1)/w(j) = c (beta + j) / (j + 1)
  for (int j : {0, 1, 3, 10})
    CHECK(weight_at(w, j + 1) / weight_at(w, j) ==
          doctest::Approx(0.4 * (1.5 + j) / (j + 1.0)).epsilon(1e-12));
  CHECK(weight_log(w, 7) == doctest::Approx(std::log(weight_at(w, 7))).epsilon(1e-12));
}

TEST_CASE("orthogonality residuals vanish for all defining pairs") {
  // classical
  {
    ParamsClassical p(1.0, 0.5);
    SteplineSequence seq = build_stepline(p, 6);
    WeightSpec w = weight_spec(p);
    for (int n = 1; n <= 6; ++n)
      for (int j = 0; j < n; ++j)
        CHECK(orthogonality_residual(seq.polys[n], w, j, 400) <= 1e-8);
  }
  // first kind: orthogonal to (-k)_j w_i for j < n_i
  {
    ParamsFirst p(1.0, 0.5, 1.0 / 3.0);
    SteplineSequence seq = build_stepline(p, 6);
    for (int k = 1; k <= 6; ++k) {
      MultiIndex idx = seq.index_of(k);
      for (int j = 0; j < idx.n1; ++j)
        CHECK(orthogonality_residual(seq.polys[k], weight_spec(p, 1), j, 400) <= 1e-8);
      for (int j = 0; j < idx.n2; ++j)
        CHECK(orthogonality_residual(seq.polys[k], weight_spec(p, 2), j, 400) <= 1e-8);
    }
  }
  // second kind
  {
    ParamsSecond p(1.0, 1.5, 0.5);
    SteplineSequence seq = build_stepline(p, 6);
    for (int k = 1; k <= 6; ++k) {
      MultiIndex idx = seq.index_of(k);
      for (int j = 0; j < idx.n1; ++j)
        CHECK(orthogonality_residual(seq.polys[k], weight_spec(p, 1), j, 400) <= 1e-8);
      for (int j = 0; j < idx.n2; ++j)
        CHECK(orthogonality_residual(seq.polys[k], weight_spec(p, 2), j, 400) <= 1e-8);
    }
  }
}

TEST_CASE("a non-orthogonal pair leaves a visible residual") {
  ParamsClassical p(1.0, 0.5);
  SteplineSequence seq = build_stepline(p, 4);
  WeightSpec w = weight_spec(p);
  // j = n is not a defining pair; the residual must be order one
  CHECK(orthogonality_residual(seq.polys[3], w, 3, 400) > 1e-3);
}
