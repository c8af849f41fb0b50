#include "doctest.h"
#include "ntv/arith.hpp"
#include "ntv/bounds.hpp"
#include "ntv/errors.hpp"
#include "ntv/quadrature.hpp"
#include "ntv/sieve.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

using namespace ntv;

TEST_CASE("zero-free region width") {
  const double T = 1e10, L = std::log(T);
  CHECK(ford_nu(T) == doctest::Approx(1.0 / (57.54 * std::pow(L, 2.0 / 3.0) * std::cbrt(std::log(L)))));
  CHECK(ford_nu(1e20) < ford_nu(1e10));
  CHECK(ramare_density(0.75, 1e6) > 0);
  CHECK(ramare_density(0.9, 1e6) < ramare_density(0.6, 1e6));
}

TEST_CASE("cube threshold") {
  const CubeSolveResult r = solve_cubes(kRamareA, kFordC, 0.9359);
  CHECK(r.verified);
  CHECK(r.loglog_n0 == doctest::Approx(33.2186).epsilon(1e-5));
  CHECK(r.loglog_n0 == doctest::Approx(std::log(r.y_star) - std::log(3.0)));
  // both sides at the threshold and just below it
  CHECK(cube_ineq_density(r.y_star, kRamareA, kFordC, 0.9359) < 0);
  CHECK(mpower_ineq(r.y_star, 3, 0.9359) < 0);
  const double below = r.y_star * (1 - 1e-5);
  CHECK((cube_ineq_density(below, kRamareA, kFordC, 0.9359) >= 0 || mpower_ineq(below, 3, 0.9359) >= 0));
}

TEST_CASE("density inequality near 8e14") {
  CHECK(cube_ineq_density(8e14, kRamareA, kFordC, 0.9359) > 0);
  CHECK(cube_ineq_density(8.02e14, kRamareA, kFordC, 0.9359) < 0);
  CHECK(mpower_ineq(1e12, 3, 0.9359) > 0);
}

TEST_CASE("m-power rows") {
  const auto& rows = mpower_table();
  REQUIRE(rows.size() == 5);
  const CubeSolveResult r4 = solve_mpowers(rows[0].m, kRamareA, kFordC, rows[0].k);
  CHECK(r4.verified);
  CHECK(std::fabs(r4.loglog_n0 - rows[0].loglog_n0) < 0.05);
  const CubeSolveResult r6 = solve_mpowers(6, kRamareA, kFordC, 0.9796);
  CHECK(r6.loglog_n0 == doctest::Approx(27.0213).epsilon(1e-5));
}

TEST_CASE("all-n threshold is the first sign change") {
  const auto m = solve_all_n();
  CHECK(all_n_gap(static_cast<double>(m)) <= 0);
  CHECK(all_n_gap(static_cast<double>(m - 1)) > 0);
  CHECK(m > 4'900'000'000ULL);
  CHECK(m < 5'000'000'000ULL);
}

TEST_CASE("Cramer-type constants") {
  CHECK(cramer_argmin() == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(cramer_term(2.0) == doctest::Approx(4.0 / std::numbers::pi));
  CHECK(cramer_refined_c(1e4) == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(cramer_refined_c(1e4) < cramer_term(2.0));
  CHECK_THROWS_AS(cramer_term(0.0), DomainError);
}

TEST_CASE("theta error bound holds to 1e6") {
  const MtCheck c = check_mt_epsilon0(1'000'000);
  CHECK(c.ok());
  CHECK(c.primes_checked == 78498 - 34);  // primes from 149 on
  CHECK(c.max_ratio < 1.0);
  CHECK_THROWS_AS(mt_epsilon0(100.0), DomainError);
}

TEST_CASE("unconditional threshold") {
  const UnconditionalResult u = ramanujan_unconditional(3130);
  CHECK(u.y_a == 9393);
  CHECK(u.threshold_y == 9394);
  CHECK(unconditional_lhs(u.y_a, 3130) < 0);
  CHECK(unconditional_lhs(u.y_a - 1, 3130) >= 0);
  double A = 0, fact = 1;
  for (int k = 1; k <= 5; ++k) {
    fact *= k;
    A += fact / std::pow(std::log(2.0), k + 1);
  }
  CHECK(u.A_const == doctest::Approx(A));
}

TEST_CASE("Schoenfeld gap dominates pi - Li on samples") {
  for (u64 x = 3000; x <= 10'000'000; x = x * 3 / 2) {
    const double gap = std::fabs(static_cast<double>(prime_pi(x)) - static_cast<double>(offset_li(x)));
    REQUIRE(gap < schoenfeld_gap(static_cast<double>(x)));
  }
}

TEST_CASE("conditional g is negative at large x") {
  CHECK(conditional_g(1.15e16L) < -3.2e19L);
}

TEST_CASE("Brun-Titchmarsh against direct counts") {
  for (u64 k : {1ULL, 3ULL, 10ULL, 30ULL}) {
    const u64 x = 1'000'000, y = 20'000;
    for (u64 a = 1; a <= k; ++a) {
      if (std::gcd(a, k) != 1) continue;
      u64 cnt = 0;
      for (u64 n = x + 1; n <= x + y; ++n)
        if (n % k == a % k && is_prime(n)) ++cnt;
      REQUIRE(static_cast<double>(cnt) <= brun_titchmarsh(x, y, k));
    }
  }
}
