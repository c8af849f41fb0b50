#include "doctest.h"
#include "ntv/checkpoints.hpp"
#include "ntv/errors.hpp"
#include "ntv/ramanujan.hpp"
#include "ntv/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace ntv;

namespace {
// f by brute force in long double, for cross-checks
long double f_plain(u64 x) {
  const long double e = std::numbers::e_v<long double>;
  const long double pi = static_cast<long double>(prime_pi(x));
  const long double pe = static_cast<long double>(prime_pi(floor_div_e(static_cast<long double>(x))));
  return pi * pi - e * x / std::log(static_cast<long double>(x)) * pe;
}

const CheckpointTable& fine_table() {
  static const CheckpointTable t = build_checkpoints({{1'000'000, 20'000'000, 10'000}});
  return t;
}
}  // namespace

TEST_CASE("floor(x/e) and its inverse") {
  CHECK(floor_div_e(2.0L) == 0);
  CHECK(floor_div_e(3.0L) == 1);
  CHECK(floor_div_e(271828182845.0L) == 99999999999ULL);
  CHECK(floor_div_e(271828182846.0L) == 100000000000ULL);
  for (u64 q : {1ULL, 2ULL, 1000ULL, 123456789ULL, 99999999999ULL}) {
    const u64 x = first_x_with_quotient(q);
    REQUIRE(floor_div_e(static_cast<long double>(x)) >= q);
    REQUIRE(floor_div_e(static_cast<long double>(x - 1)) < q);
  }
}

TEST_CASE("exact evaluation matches a direct computation") {
  const PrimeTable primes(2, 3'000'000);
  for (u64 x : {11ULL, 1000ULL, 99410ULL, 99411ULL, 2'000'000ULL, 2'999'999ULL}) {
    const RamanujanEval e = f_exact(static_cast<long double>(x), primes);
    REQUIRE(e.exact);
    REQUIRE(static_cast<double>(e.f_lo) == doctest::Approx(static_cast<double>(f_plain(x))).epsilon(1e-15));
  }
  CHECK(f_exact(99410.0L, primes).counterexample());
  CHECK_THROWS_AS(f_exact(4e6L, primes), CoverageError);
  const auto many = f_exact_many({2'999'999ULL, 11ULL, 1000ULL});
  CHECK(many[0].f_lo == f_exact(2'999'999.0L, primes).f_lo);
  CHECK(many[1].f_lo == f_exact(11.0L, primes).f_lo);
}

TEST_CASE("bracketed evaluation contains the exact value") {
  const CheckpointTable& t = fine_table();
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<u64> pick(2'800'000, 19'999'999);
  std::vector<u64> xs(100);
  for (u64& x : xs) x = pick(rng);
  std::sort(xs.begin(), xs.end());
  const auto exact = f_exact_many(xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const RamanujanEval b = f_bracketed(xs[i], t);
    REQUIRE(b.f_lo <= exact[i].f_lo);
    REQUIRE(exact[i].f_lo <= b.f_hi);
    REQUIRE(pi_from_table(xs[i], t) == exact[i].pi_x.lo);
  }
}

TEST_CASE("step size") {
  CHECK(static_cast<double>(step_epsilon(1000.0L, -1e6L)) == doctest::Approx(414.2135623731).epsilon(1e-12));
  CHECK(static_cast<double>(step_epsilon(1e9L, -1.0L)) == doctest::Approx(5e-10).epsilon(1e-9));
}

TEST_CASE("jump-point scan equals the naive scan") {
  const CounterexampleScan s = exhaustive_counterexample_scan(3, 200000);
  const std::vector<u64> naive = naive_counterexample_scan(3, 200000);
  CHECK(s.counterexamples == naive);
  CHECK(std::find(naive.begin(), naive.end(), 99410) != naive.end());
  CHECK(std::find(naive.begin(), naive.end(), 99411) == naive.end());
  CHECK(s.jump_points < 200000);
}

TEST_CASE("stepping agrees with the counterexample scan") {
  const CheckpointTable& t = fine_table();
  const u64 lo = 2'800'000, hi = 19'000'000;
  const CounterexampleScan s = exhaustive_counterexample_scan(lo, hi);
  REQUIRE_FALSE(s.counterexamples.empty());
  const SteppingReport plain = verify_range_stepping(lo, hi, t);
  CHECK_FALSE(plain.certified);
  CHECK(plain.indeterminate_at >= lo);
  CHECK(plain.indeterminate_at <= s.counterexamples.front());

  SteppingOptions heal;
  heal.self_heal = true;
  heal.recheck_every = 50;
  const SteppingReport found = verify_range_stepping(lo, hi, t, heal);
  CHECK_FALSE(found.certified);
  CHECK(found.counterexample_at == s.counterexamples.front());

  const u64 start = s.counterexamples.back() + 1;
  const SteppingReport r = verify_range_stepping(start, hi, t, heal);
  CHECK(r.certified);
  CHECK(r.counterexample_at == 0);
  CHECK(r.recheck_failures == 0);
  CHECK(r.steps > 0);

  const CheckpointTable coarse = build_checkpoints({{1'000'000, 20'000'000, 1'000'000}});
  const SteppingReport c = verify_range_stepping(start, hi, coarse);
  CHECK_FALSE(c.certified);
  CHECK(c.indeterminate_at >= start);
  const SteppingReport h = verify_range_stepping(start, hi, coarse, heal);
  CHECK(h.certified);
  CHECK(h.healed >= r.healed);
}

TEST_CASE("degenerate and uncovered ranges") {
  const SteppingReport r = verify_range_stepping(5'000'000, 5'000'000, fine_table());
  CHECK(r.certified);
  CHECK(r.steps == 0);
  CHECK_THROWS_AS(verify_range_stepping(1'000'000, 5'000'000, fine_table()), CoverageError);
}

TEST_CASE("asymptotic expansion coefficients") {
  const SeriesCheck c = series_coefficients_check();
  CHECK(c.coefficients_agree);
  CHECK(c.square == c.square_conv);
  CHECK(c.shifted == c.shifted_binom);
  CHECK(static_cast<double>(c.ratio_e1000) == doctest::Approx(1.0).epsilon(1e-5));
}
