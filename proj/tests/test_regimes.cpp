#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "meixner/regimes.hpp"

using namespace meixner;

namespace {

std::string label_of(const RegimeReport& r) {
  if (r.boundary_crossing) return "boundary_N";
  if (r.boundary_degenerate) return "boundary_GN";
  switch (r.regime) {
    case Regime::kArcNegative:
      return "N";
    case Regime::kArcPositive:
      return "GN_not_N";
    default:
      return "A";
  }
}

}  // namespace

TEST_CASE("crossing residual at (0.5, 0.25): raw 8, normalized 1/3") {
  std::array<double, 2> r = crossing_residual(ParamsFirst(1.0, 0.5, 0.25));
  CHECK(r[0] == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("(0.5, 0.25) classifies as the negative-arc regime") {
  RegimeReport r = classify(ParamsFirst(1.0, 0.5, 0.25));
  CHECK(r.regime == Regime::kArcNegative);
  CHECK(label_of(r) == "N");
  CHECK_FALSE(r.boundary_crossing);
  CHECK_FALSE(r.boundary_degenerate);
  CHECK(r.residual == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(r.degeneracy_gap == doctest::Approx(0.2589).epsilon(1e-3));
  REQUIRE(r.branch_points.size() == 4);
}

TEST_CASE("(0.5, 0.146446) sits on the crossing boundary") {
  RegimeReport r = classify(ParamsFirst(1.0, 0.5, 0.146446));
  CHECK(r.boundary_crossing);
  CHECK(label_of(r) == "boundary_N");
  CHECK(std::abs(r.residual) <= 1e-3);
}

TEST_CASE("the exact critical weight zeroes the residual") {
  // c2* solves (sigma1 + sigma2 - 2)^2 = 2 (sigma1 - sigma2)^2 at c1 = 1/2
  double c2s = 0.14644660940672624;
  std::array<double, 2> r = crossing_residual(ParamsFirst(1.0, 0.5, c2s));
  CHECK(std::abs(r[0]) <= 1e-10);
  CHECK(std::abs(r[1]) <= 1e-10);
}

TEST_CASE("classification is symmetric under swapping the weights") {
  for (auto [x, y] : {std::pair<double, double>{0.2, 0.6},
                      {0.35, 0.4},
                      {0.7, 0.15},
                      {0.9, 0.05},
                      {0.55, 0.5}}) {
    RegimeReport a = classify(ParamsFirst(1.0, x, y));
    RegimeReport b = classify(ParamsFirst(1.0, y, x));
    CHECK(label_of(a) == label_of(b));
  }
}

TEST_CASE("all three regimes are realized on a coarse sweep") {
  bool saw_n = false, saw_gn = false, saw_a = false;
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      double x = 0.04 + 0.92 * i / 11.0;
      double y = 0.04 + 0.92 * j / 11.0;
      if (std::abs(x - y) < 1e-6) continue;
      RegimeReport r = classify(ParamsFirst(1.0, x, y));
      if (r.boundary_crossing || r.boundary_degenerate) continue;
      if (r.regime == Regime::kArcNegative) saw_n = true;
      if (r.regime == Regime::kArcPositive) saw_gn = true;
      if (r.regime == Regime::kNoArc) saw_a = true;
    }
  }
  CHECK(saw_n);
  CHECK(saw_gn);
  CHECK(saw_a);
}

TEST_CASE("no-arc reports four real branch points") {
  bool found = false;
  for (int i = 0; i < 12 && !found; ++i) {
    for (int j = 0; j < 12 && !found; ++j) {
      double x = 0.04 + 0.92 * i / 11.0;
      double y = 0.04 + 0.92 * j / 11.0;
      if (std::abs(x - y) < 1e-6) continue;
      RegimeReport r = classify(ParamsFirst(1.0, x, y));
      if (r.regime != Regime::kNoArc || r.boundary_degenerate) continue;
      found = true;
      double max_im = 0.0;
      for (const cplx& z : r.branch_points)
        max_im = std::max(max_im, std::abs(z.imag()));
      double scale = std::abs(r.branch_points.back());
      CHECK(max_im <= 1e-6 * (1.0 + scale));
    }
  }
  CHECK(found);
}

TEST_CASE("degenerate boundary curve: anchor point and branch collision") {
  std::array<double, 2> p = degenerate_boundary_point(-4.0);
  CHECK(p[0] == doctest::Approx(0.853553).epsilon(1e-5));
  CHECK(p[1] == doctest::Approx(0.146447).epsilon(1e-5));

  for (double t : {-3.2, -4.0, -4.6}) {
    std::array<double, 2> q = degenerate_boundary_point(t);
    CHECK(q[0] > 0.0);
    CHECK(q[0] < 1.0);
    CHECK(q[1] > 0.0);
    CHECK(q[1] < 1.0);
    RegimeReport r = classify(ParamsFirst(1.0, q[0], q[1]));
    CHECK(r.degeneracy_gap <= 1e-4);
    CHECK(r.boundary_degenerate);
  }

  CHECK_THROWS_AS(degenerate_boundary_point(-3.0), std::domain_error);
  CHECK_THROWS_AS(degenerate_boundary_point(-5.0), std::domain_error);
}
