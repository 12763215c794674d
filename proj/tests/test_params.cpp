#include <doctest.h>

#include <stdexcept>

#include "meixner/params.hpp"

using namespace meixner;

TEST_CASE("a_of maps c to c/(1-c) and validates the range") {
  CHECK(a_of(0.5) == doctest::Approx(1.0));
  CHECK(a_of(0.25) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(a_of(1.5), std::invalid_argument);
  CHECK_THROWS_AS(a_of(0.0), std::invalid_argument);
  CHECK_THROWS_AS(a_of(1.0), std::invalid_argument);
  CHECK_THROWS_AS(a_of(-0.2), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ParamsClassical(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ParamsClassical(1.0, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(ParamsFirst(1.0, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ParamsFirst(-1.0, 0.5, 0.25), std::invalid_argument);
  // integer difference of the shape parameters breaks the AT property
  CHECK_THROWS_AS(ParamsSecond(1.0, 2.0, 0.5), std::invalid_argument);
  CHECK_NOTHROW(ParamsSecond(1.0, 1.5, 0.5));
}

TEST_CASE("classical recurrence coefficients") {
  ParamsClassical p(1.0, 0.5);  // a = 1
  for (int n : {0, 1, 2, 5}) {
    RecCoeffs r = rec_coeffs_classical(n, p);
    CHECK(r.b == doctest::Approx(3.0 * n + 1.0));
    CHECK(r.c == doctest::Approx(2.0 * n * n));
    CHECK(r.d == 0.0);
  }
}

TEST_CASE("second kind anchor: (1,1) at beta=(1,1.5), c=0.5 gives b,c,d = 6,7,1") {
  ParamsSecond p(1.0, 1.5, 0.5);
  RecCoeffs r = rec_coeffs_second({1, 1}, p);
  CHECK(r.b == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(r.c == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(r.d == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("first kind anchor: (0,0) gives b,c,d = a1*beta,0,0") {
  ParamsFirst p(1.0, 0.5, 1.0 / 3.0);
  RecCoeffs r = rec_coeffs_first({0, 0}, p);
  CHECK(r.b == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.c == 0.0);
  CHECK(r.d == 0.0);
}

TEST_CASE("swapped variants exchange the parameter roles") {
  ParamsFirst p(0.8, 0.6, 0.2);
  ParamsFirst q(0.8, 0.2, 0.6);
  for (MultiIndex idx : {MultiIndex{2, 3}, MultiIndex{4, 1}, MultiIndex{3, 3}}) {
    RecCoeffs s = rec_coeffs_first_swapped(idx, p);
    RecCoeffs r = rec_coeffs_first(idx, q);
    CHECK(s.b == doctest::Approx(r.b).epsilon(1e-13));
    CHECK(s.c == doctest::Approx(r.c).epsilon(1e-13));
    CHECK(s.d == doctest::Approx(r.d).epsilon(1e-13));
  }

  ParamsSecond a(1.0, 1.7, 0.4);
  ParamsSecond b(1.7, 1.0, 0.4);
  for (MultiIndex idx : {MultiIndex{2, 3}, MultiIndex{4, 1}}) {
    RecCoeffs s = rec_coeffs_second_swapped(idx, a);
    RecCoeffs r = rec_coeffs_second(idx, b);
    CHECK(s.b == doctest::Approx(r.b).epsilon(1e-13));
    CHECK(s.c == doctest::Approx(r.c).epsilon(1e-13));
    CHECK(s.d == doctest::Approx(r.d).epsilon(1e-13));
  }
}

TEST_CASE("first kind reduces to classical when one index stays zero") {
  // with n2 = 0 the (n1, 0) coefficients match the classical ones at (beta, c1)
  ParamsFirst p(1.3, 0.45, 0.2);
  ParamsClassical q(1.3, 0.45);
  for (int n : {0, 1, 2, 4}) {
    RecCoeffs r = rec_coeffs_first({n, 0}, p);
    RecCoeffs s = rec_coeffs_classical(n, q);
    CHECK(r.b == doctest::Approx(s.b).epsilon(1e-13));
    CHECK(r.c == doctest::Approx(s.c).epsilon(1e-13));
  }
}
