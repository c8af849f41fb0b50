#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ntv/arith.hpp"
#include "ntv/checkpoints.hpp"
#include "ntv/sieve.hpp"

namespace ntv {

// f(x) = pi(x)^2 - (e x / log x) pi(x/e)

// floor(x / e); near-integer quotients are settled in 50-digit arithmetic.
u64 floor_div_e(long double x);
// smallest integer x with floor(x/e) >= q
u64 first_x_with_quotient(u64 q);

struct RamanujanEval {
  long double x = 0;
  PiBounds pi_x{0, 0};
  PiBounds pi_x_over_e{0, 0};
  long double f_lo = 0, f_hi = 0;
  bool exact = false;
  bool counterexample() const { return exact && f_lo >= 0; }
};

// pi^2 formed in 128-bit integers; the subtraction runs in long double.
RamanujanEval ramanujan_eval(long double x, u64 pi_x, u64 pi_x_over_e);
RamanujanEval ramanujan_eval(long double x, PiBounds pi_x, PiBounds pi_x_over_e);

// Exact evaluation from a prime table starting at 2 and covering x.
RamanujanEval f_exact(long double x, const PrimeTable& primes);
// Exact evaluation by sieving; ascending or not, all xs share one pass.
std::vector<RamanujanEval> f_exact_many(const std::vector<u64>& xs, const SieveOptions& opt = {});
// Bracketed evaluation from checkpoints covering x and x/e.
RamanujanEval f_bracketed(u64 x, const CheckpointTable& table);
// Exact pi(x) from the checkpoint at or below x plus a local sieve.
u64 pi_from_table(u64 x, const CheckpointTable& table, const SieveOptions& opt = {});

// sqrt(pi^2 - f) - pi, in a cancellation-free form; requires f < 0.
long double step_epsilon(long double pi_x, long double f);
// Conservative ends of a bracketed evaluation.
long double step_epsilon(const RamanujanEval& e);

struct SteppingOptions {
  u64 recheck_every = 100000;  // exact re-check of one step midpoint in this many
  bool self_heal = false;      // resolve indeterminate steps with a local exact sieve
  SieveOptions sieve{};
};

struct SteppingReport {
  u64 lo = 0, hi = 0;
  bool certified = false;
  u64 steps = 0;
  u64 indeterminate_at = 0;    // first x whose bracket for f reaches 0
  long double indeterminate_f_hi = 0;
  u64 counterexample_at = 0;   // set when self-healing finds f(x) >= 0
  u64 healed = 0;
  u64 rechecks = 0, recheck_failures = 0;
  long double min_step = 0, max_step = 0;
};
// Certifies f(n) < 0 for every integer n in [lo, hi], hence f < 0 on the real
// interval: between integers pi(x) is constant and e x / log x grows.
// lo == hi is treated as an empty range.
SteppingReport verify_range_stepping(u64 lo, u64 hi, const CheckpointTable& table,
                                     const SteppingOptions& opt = {});

struct CounterexampleScan {
  u64 lo = 0, hi = 0;
  std::vector<u64> counterexamples;  // every integer x in [lo, hi] with f(x) >= 0
  std::vector<long double> f_values;
  u64 jump_points = 0;               // evaluations at primes, x/e-prime crossings, lo
};
// f drops between jumps, so only jump points and the integers right after a
// nonnegative jump need evaluating.
CounterexampleScan exhaustive_counterexample_scan(u64 lo, u64 hi, const SieveOptions& opt = {});
// Every integer evaluated; oracle for small ranges (hi <= 1e9).
std::vector<u64> naive_counterexample_scan(u64 lo, u64 hi);

struct SeriesCheck {
  std::array<long long, 5> square{};     // coefficients of x^2/log^{2+j} x in pi(x)^2
  std::array<long long, 5> shifted{};    // same for (e x / log x) pi(x/e)
  std::array<long long, 5> square_conv{};    // 1, 1!, 2!, ... convolved with itself
  std::array<long long, 5> shifted_binom{};  // sum_k k! C(j, k)
  bool coefficients_agree = false;
  long double ratio_e100 = 0;   // (difference) / (-x^2 / log^6 x) at x = e^100
  long double ratio_e1000 = 0;
};
// Ratio of the difference of the two truncated expansions to -x^2/log^6 x at x = e^L.
long double series_difference_ratio(long double L);
SeriesCheck series_coefficients_check();

}  // namespace ntv
