#include "doctest.h"
#include "ntv/arith.hpp"
#include "ntv/errors.hpp"
#include "ntv/explicit_formula.hpp"
#include "ntv/zeros.hpp"

#include <cmath>
#include <string>

using namespace ntv;

namespace {
double vm_ref(u64 n) {
  const auto f = prime_factors(n);
  return f.size() == 1 ? std::log(static_cast<double>(f[0])) : 0.0;
}
const ZeroTable& table() {
  static const ZeroTable z = load_zeros(std::string(NTV_TEST_DATA) + "/zeros_100k.txt");
  return z;
}
}  // namespace

TEST_CASE("truncated formula at half-odd points") {
  for (double x : {1000.5, 12345.5, 250000.5}) {
    const FormulaEvaluation e = truncated_psi(x, table().max_height(), table());
    CHECK(e.half_odd);
    CHECK(e.empirical_regime);
    CHECK(e.within_budget());
    CHECK(std::fabs(e.residual) < 0.05 * e.error_budget);
  }
}

TEST_CASE("residual shrinks with more zeros") {
  const double x = 20000.5;
  const double r_small = std::fabs(truncated_psi(x, 200.0, table()).residual);
  const double r_big = std::fabs(truncated_psi(x, 50000.0, table()).residual);
  CHECK(r_big < r_small);
  CHECK_THROWS_AS(truncated_psi(x, 1e6, table()), HorizonError);
  CHECK_THROWS_AS(truncated_psi(1.5, 100, table()), DomainError);
}

TEST_CASE("psi1 matches a direct sum") {
  const double x = 5000.25;
  long double ref = 0;
  for (u64 n = 2; n <= 5000; ++n) ref += (x - static_cast<long double>(n)) * vm_ref(n);
  CHECK(psi1(x) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
}

TEST_CASE("psi1 formula within its error allowance") {
  const Psi1Formula f = psi1_formula(10000.5, table());
  CHECK(std::fabs(psi1(10000.5) - f.value) < f.epsilon_bound + f.tail_slack);
}

TEST_CASE("weighted sum is a second difference of psi1") {
  for (auto [x, h] : {std::pair{10000.5, 100.0}, std::pair{123456.5, 1000.0}, std::pair{1e6 + 0.5, 2000.0}}) {
    const double lhs = weighted_interval_exact(x, h);
    const double rhs = (psi1(x + h) - 2 * psi1(x) + psi1(x - h)) / h;
    REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("weighted sum against its zero expansion") {
  const WeightedSum w = weighted_interval_sum(1e6 + 0.5, 2000.0, table());
  CHECK(std::fabs(w.exact - w.formula) < w.epsilon_bound + w.tail_slack);
  CHECK(std::fabs(w.exact - w.formula) < 0.1);
}

TEST_CASE("sigma bounds") {
  const double x = 1e8, h = 1e5, alpha = 2.0;
  CHECK(sigma1_bound(x, h, alpha) > 0);
  CHECK(sigma2_bound(x, h, alpha) > 0);
  CHECK(sigma1_refined(x, h, alpha) < sigma1_bound(x, h, alpha));
  CHECK_THROWS_AS(sigma1_bound(100, 200, 2), DomainError);
  CHECK_THROWS_AS(sigma2_bound(1000, 500, 2), DomainError);  // alpha x / h = 4
  const double s1 = std::fabs(interval_zero_sum(1e6 + 0.5, 2000.0, table(), alpha * (1e6 + 0.5) / 2000.0));
  CHECK(s1 < sigma1_bound(1e6 + 0.5, 2000.0, alpha));
}
