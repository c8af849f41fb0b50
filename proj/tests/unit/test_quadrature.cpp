#include "doctest.h"
#include "ntv/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace ntv;

TEST_CASE("logarithmic integral at reference points") {
  CHECK(static_cast<double>(li(2.0L)) == doctest::Approx(1.045163780117493).epsilon(1e-15));
  CHECK(static_cast<double>(li(1e6L)) == doctest::Approx(78627.54915946).epsilon(1e-12));
  CHECK(static_cast<double>(offset_li(1e6L)) == doctest::Approx(78627.54915946 - 1.04516378011749).epsilon(1e-12));
  CHECK(static_cast<double>(offset_li(2.0L)) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("quadrature and series agree") {
  for (long double x : {10.0L, 1e3L, 1e8L, 1e12L, 1e16L, 1e20L}) {
    const long double a = li(x), b = li_series(x);
    REQUIRE(std::fabs(static_cast<double>((a - b) / b)) < 1e-15);
  }
}

TEST_CASE("sinc squared integral") {
  CHECK(static_cast<double>(sinc2_integral(1e4).value) == doctest::Approx(std::numbers::pi / 2 - 0.5e-4).epsilon(1e-8));
  CHECK(std::fabs(static_cast<double>(sinc2_integral(1e4).value) - std::numbers::pi / 2) < 1e-3);
  for (double X : {0.5, 3.0, 100.0, 5000.0}) {
    const double a = static_cast<double>(sinc2_integral(X).value);
    const double b = static_cast<double>(sinc2_integral_half_step(X).value);
    REQUIRE(a == doctest::Approx(b).epsilon(1e-13));
  }
}

TEST_CASE("adaptive integration of a smooth function") {
  const QuadResult r = integrate([](long double t) { return std::exp(-t) * std::cos(t); }, 0.0L, 40.0L, 1.0L, 1e-14L);
  CHECK(static_cast<double>(r.value) == doctest::Approx(0.5).epsilon(1e-12));
}
