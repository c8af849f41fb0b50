// One PASS/FAIL line per acceptance criterion. A criterion also fails when it
// overruns its time limit.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "ntv/additive.hpp"
#include "ntv/arith.hpp"
#include "ntv/bounds.hpp"
#include "ntv/checkpoints.hpp"
#include "ntv/explicit_formula.hpp"
#include "ntv/quadrature.hpp"
#include "ntv/ramanujan.hpp"
#include "ntv/sieve.hpp"
#include "ntv/squarefree.hpp"
#include "ntv/zeros.hpp"

using namespace ntv;

namespace tol {
constexpr double chebyshev_rel = 1e-9;      // theta, psi against naive summation
constexpr double residual_mean_frac = 0.05;  // mean |residual| / budget
constexpr double inverse_square_target = 1.108243;
constexpr double cube_loglog = 33.217, cube_loglog_tol = 0.05;
constexpr double cube_y_from = 8e14;
constexpr double mpower_tol = 0.05;
constexpr double all_n = 4.971e9, all_n_rel = 1e-3;
constexpr double cramer_value_tol = 1e-9, cramer_alpha_tol = 1e-4;
constexpr double refined_c = 0.5, refined_c_tol = 1e-3;
constexpr double sinc2_tol = 1e-3;
constexpr double second_difference_rel = 1e-6;
constexpr double psi1_epsilon = 12.0 / 5.0;
constexpr double estermann_eps = 0.005, estermann_tail = 0.086;
constexpr double artin_lo = 0.37395, artin_hi = 0.37396;
constexpr u64 erdos_p_max = 73;
constexpr double erdos_small_q = 0.568, erdos_large_q = 0.00183;
constexpr double g_ceiling = -3.2e19;
}  // namespace tol

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

SieveOptions all_cores() {
  SieveOptions o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  return o;
}

const ZeroTable& zeros() {
  static const ZeroTable z = load_zeros(default_zero_table_path());
  return z;
}

Outcome c1_sieve() {
  Outcome o;
  const u64 N = 100000;
  std::vector<bool> prime(N + 1), sqfree(N + 1);
  for (u64 n = 0; n <= N; ++n) {
    bool p = n >= 2;
    for (u64 d = 2; d * d <= n && p; ++d) p = n % d != 0;
    prime[n] = p;
    bool s = n >= 1;
    for (u64 d = 2; d * d <= n && s; ++d) s = n % (d * d) != 0;
    sqfree[n] = s;
  }
  const auto table = sieve_primes(2, N).primes();
  std::vector<bool> from_sieve(N + 1);
  for (u64 p : table) from_sieve[p] = true;
  o.require(from_sieve == prime, "prime flags");
  const SquarefreeSieve sq(1, N);
  bool sq_ok = true;
  for (u64 n = 1; n <= N; ++n) sq_ok = sq_ok && sq[n] == sqfree[n];
  o.require(sq_ok, "squarefree flags");

  std::vector<u64> xs(N + 1);
  for (u64 n = 0; n <= N; ++n) xs[n] = n;
  const auto pis = pi_at_points(xs);
  u64 pi_ref = 0;
  long double th = 0, ps = 0;
  bool pi_ok = true, th_ok = true, ps_ok = true;
  for (u64 n = 0; n <= N; ++n) {
    if (prime[n]) {
      ++pi_ref;
      th += std::log(static_cast<long double>(n));
    }
    // prime powers for psi
    for (u64 p = 2; p <= n; ++p) {
      if (!prime[p] || n % p) continue;
      u64 m = n;
      while (m % p == 0) m /= p;
      if (m == 1) ps += std::log(static_cast<long double>(p));
      break;
    }
    pi_ok = pi_ok && pis[n] == pi_ref;
    if (n % 7 == 0 || prime[n] || n == N) {
      const double t = theta(static_cast<double>(n)), s = psi(static_cast<double>(n));
      th_ok = th_ok && std::fabs(t - static_cast<double>(th)) <= tol::chebyshev_rel * std::max(1.0, t);
      ps_ok = ps_ok && std::fabs(s - static_cast<double>(ps)) <= tol::chebyshev_rel * std::max(1.0, s);
    }
  }
  o.require(pi_ok, "pi");
  o.require(th_ok, "theta");
  o.require(ps_ok, "psi");
  const u64 p6 = prime_pi(1'000'000), p9 = prime_pi(1'000'000'000, all_cores());
  o.require(p6 == 78498, "pi(1e6)");
  o.require(p9 == 50847534, "pi(1e9)");
  o.note("pi(1e9)=" + std::to_string(p9));
  return o;
}

Outcome c2_explicit_formula() {
  Outcome o;
  const ZeroTable& z = zeros();
  double frac_sum = 0, worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double x = std::floor(1e3 * std::pow(1e3, i / 19.0)) - (i == 19 ? 1 : 0) + 0.5;
    const FormulaEvaluation e = truncated_psi(x, z.max_height(), z);
    o.require(e.half_odd && e.within_budget(), "budget at x=" + fmt("%.1f", x));
    const double f = std::fabs(e.residual) / e.error_budget;
    frac_sum += f;
    worst = std::max(worst, f);
  }
  const double mean = frac_sum / 20;
  o.require(mean < tol::residual_mean_frac, "mean residual fraction");
  o.note("mean |r|/budget=" + fmt("%.3g", mean) + " max=" + fmt("%.3g", worst));
  return o;
}

Outcome c3_zero_stats() {
  Outcome o;
  const ZeroTable& z = zeros();
  const GridCheck n = check_counting_bound(z, 20.0, std::floor(z.max_height()), 1.0);
  o.require(n.ok(), "N(T) bound, first violation " + fmt("%.2f", n.first_violation));
  const GridCheck w = check_window_bound(z, 50.0, std::min(5000.0, z.max_height() - 1.01), 0.01);
  o.require(w.ok(), "window bound, first violation " + fmt("%.2f", w.first_violation));
  const InverseSquareSum s = inverse_square_sum(z);
  o.note("sum 1/|rho|^2 in [" + fmt("%.10f", s.lower()) + ", " + fmt("%.10f", s.upper()) + "]");
  o.require(s.brackets(tol::inverse_square_target), "bracket contains " + fmt("%.6f", tol::inverse_square_target));
  o.note("contains 2+gamma-log(4pi)=" + std::string(s.brackets(inverse_square_target_true()) ? "yes" : "no"));
  return o;
}

Outcome c4_cubes() {
  Outcome o;
  const double A = kRamareA, c = kFordC, k = 0.9359;
  const CubeSolveResult r = solve_cubes(A, c, k);
  o.require(r.verified, "forward check from y*");
  double first_bad = 0;
  for (int i = 0; i <= 2000; ++i) {
    const double y = tol::cube_y_from * std::pow(10.0, i / 1000.0);
    if (!(cube_ineq_density(y, A, c, k) < 0 && mpower_ineq(y, 3, k) < 0)) {
      first_bad = y;
      break;
    }
  }
  o.require(first_bad == 0, "both inequalities on sampled y >= 8e14 (first miss y=" + fmt("%.6g", first_bad) + ")");
  o.require(std::fabs(r.loglog_n0 - tol::cube_loglog) <= tol::cube_loglog_tol, "loglog_n0");
  o.require(mpower_ineq(1e12, 3, k) > 0, "second inequality fails at y=1e12");
  o.note("y*=" + fmt("%.6g", r.y_star) + " loglog_n0=" + fmt("%.5f", r.loglog_n0));
  return o;
}

Outcome c5_mpowers() {
  Outcome o;
  std::string rows;
  for (const MPowerRow& row : mpower_table()) {
    const CubeSolveResult r = solve_mpowers(row.m, kRamareA, kFordC, row.k);
    const double d = r.loglog_n0 - row.loglog_n0;
    o.require(r.verified && std::fabs(d) <= tol::mpower_tol,
              "m=" + std::to_string(row.m) + " got " + fmt("%.4f", r.loglog_n0) + " vs " + fmt("%.3f", row.loglog_n0));
    rows += (rows.empty() ? "" : " ") + std::to_string(row.m) + ":" + fmt("%.4f", r.loglog_n0);
  }
  const auto m = solve_all_n();
  o.require(std::fabs(static_cast<double>(m) - tol::all_n) <= tol::all_n_rel * tol::all_n, "all-n threshold");
  o.note(rows + " all_n=" + std::to_string(m));
  return o;
}

Outcome c6_cramer() {
  Outcome o;
  const double a = cramer_argmin();
  o.require(std::fabs(a - 2.0) <= tol::cramer_alpha_tol, "argmin");
  o.require(std::fabs(cramer_term(a) - 4.0 / std::numbers::pi) <= tol::cramer_value_tol, "min value");
  const double rc = cramer_refined_c(1e4);
  o.require(std::fabs(rc - tol::refined_c) <= tol::refined_c_tol, "refined c");
  const double s = static_cast<double>(sinc2_integral(1e4).value);
  o.require(std::fabs(s - std::numbers::pi / 2) <= tol::sinc2_tol, "sinc^2 integral");
  o.note("argmin=" + fmt("%.10f", a) + " c(1e4)=" + fmt("%.8f", rc) + " int=" + fmt("%.8f", s));
  return o;
}

Outcome c7_psi1() {
  Outcome o;
  const double pairs[10][2] = {{1000.5, 10},     {5000.5, 100},    {10000.5, 1000},  {33333.5, 500},
                               {100000.5, 2000}, {250000.5, 7},    {500000.5, 4096}, {777777.5, 100},
                               {1e6 + 0.5, 2000}, {2e6 + 0.5, 30000}};
  double worst = 0;
  for (const auto& pr : pairs) {
    const double x = pr[0], h = pr[1];
    const double lhs = weighted_interval_exact(x, h);
    const double rhs = (psi1(x + h) - 2 * psi1(x) + psi1(x - h)) / h;
    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(lhs));
  }
  o.require(worst <= tol::second_difference_rel, "second difference");
  const double x = 1e4 + 0.5;
  const Psi1Formula f = psi1_formula(x, zeros());
  const double gap = std::fabs(psi1(x) - f.value);
  o.require(gap < tol::psi1_epsilon + f.tail_slack, "psi1 gap");
  o.note("max rel diff=" + fmt("%.3g", worst) + " psi1 gap=" + fmt("%.4f", gap) + " slack=" + fmt("%.3f", f.tail_slack));
  return o;
}

Outcome c8_estermann() {
  Outcome o;
  const EstermannScan s = estermann_scan(3, 10'000'000, 100, all_cores());
  o.require(s.decomposed == 10'000'000 - 2 && s.exhausted.empty(), "every n decomposes");
  const EstermannConstants c = estermann_constants();
  o.require(c.eps_sum < tol::estermann_eps, "eps sum");
  o.require(c.tail_bound < tol::estermann_tail, "tail sum");
  o.require(c.artin_product >= tol::artin_lo && c.artin_product <= tol::artin_hi, "Artin product");
  const double lb = estermann_lower_bound(1e10, 0.25);
  o.require(lb > 0, "lower bound at 1e10");
  o.note("max attempts " + std::to_string(s.max_attempts) + " at " + std::to_string(s.argmax_attempts) +
         " eps=" + fmt("%.6f", c.eps_sum) + " tail=" + fmt("%.6f", c.tail_bound) + " artin=" +
         fmt("%.9f", c.artin_product) + " bound=" + fmt("%.6g", lb));
  return o;
}

Outcome c9_erdos() {
  Outcome o;
  const ErdosScan s = erdos_scan(10, 10'000'000);
  u64 expected = 0;
  for (u64 n = 10; n <= 10'000'000; ++n) expected += n % 4 != 1;
  o.require(s.checked == expected, "coverage");
  o.require(s.unresolved.empty(), "every n decomposes");
  u64 maxp = s.max_p;
  for (const auto& [n, p] : s.escalated) maxp = std::max(maxp, p);
  o.require(maxp <= tol::erdos_p_max, "p <= 73");
  const double small = mischievous_small_q_sum();
  const double large = reciprocal_prime_sum(97, 1'000'001) + 1e-6;
  o.require(small < tol::erdos_small_q, "0.568 constant");
  o.require(large < tol::erdos_large_q, "0.00183 constant");
  const double lb = erdos_lower_bound(2.5e14, 0.209, 0.0685);
  o.require(lb > 0, "lower bound at 2.5e14");
  o.note("max p " + std::to_string(maxp) + " escalated " + std::to_string(s.escalated.size()) + " sums " +
         fmt("%.6f", small) + " " + fmt("%.8f", large) + " bound=" + fmt("%.6g", lb));
  return o;
}

Outcome c10_unconditional() {
  Outcome o;
  const UnconditionalResult u = ramanujan_unconditional(3130);
  o.require(u.y_a == 9393 && u.threshold_y == 9394, "(y_a, threshold) = (9393, 9394)");
  const MtCheck m = check_mt_epsilon0(100'000'000);
  o.require(m.ok(), "theta majorant");
  o.note("y_a=" + std::to_string(u.y_a) + " threshold=" + std::to_string(u.threshold_y) +
         " max ratio=" + fmt("%.4f", m.max_ratio));
  return o;
}

Outcome c11_ramanujan_exact() {
  Outcome o;
  const u64 lo = 38'300'000'000ULL, hi = 39'000'000'000ULL, last = 38'358'837'682ULL, last_prime = 38'358'837'677ULL;
  const CounterexampleScan s = exhaustive_counterexample_scan(lo, hi, all_cores());
  o.require(!s.counterexamples.empty() && s.counterexamples.back() == last, "largest counterexample");
  u64 lp = 0;
  for (auto it = s.counterexamples.rbegin(); it != s.counterexamples.rend() && !lp; ++it)
    if (is_prime(*it)) lp = *it;
  o.require(lp == last_prime, "largest prime counterexample");
  // independent route: direct evaluation at the boundary
  const auto ev = f_exact_many({last_prime, last, last + 1}, all_cores());
  o.require(ev[0].f_lo >= 0 && ev[1].f_lo >= 0 && ev[2].f_lo < 0, "direct f at the boundary");
  o.note(std::to_string(s.counterexamples.size()) + " counterexamples, f(" + std::to_string(last) +
         ")=" + fmt("%.2f", static_cast<double>(ev[1].f_lo)));
  return o;
}

Outcome c12_stepping() {
  Outcome o;
  const u64 lo = 100'000'000'000ULL, hi = 120'000'000'000ULL;
  const SpacingPlan plan = {{36'000'000'000ULL, 45'000'000'000ULL, 10'000},
                            {45'000'000'000ULL, lo, 1'000'000},
                            {lo, hi, 10'000}};
  const CheckpointTable t = build_checkpoints(plan, all_cores());
  SteppingOptions so;
  so.recheck_every = 10000;
  so.sieve = all_cores();
  const SteppingReport r = verify_range_stepping(lo, hi, t, so);
  o.require(r.certified, "certified");
  const double span = static_cast<double>(hi - lo);
  o.require(r.steps > 0 && static_cast<double>(r.steps) >= span / static_cast<double>(r.max_step) &&
                static_cast<double>(r.steps) <= span / static_cast<double>(r.min_step) + 1,
            "step count");
  o.require(r.rechecks >= r.steps / so.recheck_every && r.recheck_failures == 0, "midpoint rechecks");
  const long double g = conditional_g(1.15e16L);
  o.require(g < tol::g_ceiling, "g(1.15e16)");
  o.note(std::to_string(t.size()) + " checkpoints, " + std::to_string(r.steps) + " steps, " +
         std::to_string(r.rechecks) + " rechecks, g=" + fmt("%.4g", static_cast<double>(g)));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "sieve oracles", 30, c1_sieve},
      {2, "explicit formula residual", 120, c2_explicit_formula},
      {3, "zero statistics", 60, c3_zero_stats},
      {4, "cube threshold", 10, c4_cubes},
      {5, "m-power table", 30, c5_mpowers},
      {6, "Cramer constants", 5, c6_cramer},
      {7, "psi1 identities", 60, c7_psi1},
      {8, "prime + squarefree", 120, c8_estermann},
      {9, "prime^2 + squarefree", 180, c9_erdos},
      {10, "unconditional Ramanujan threshold", 120, c10_unconditional},
      {11, "Ramanujan exact scan", 900, c11_ramanujan_exact},
      {12, "Ramanujan stepping", 1200, c12_stepping},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= c.limit_s, "time limit " + fmt("%.0f s", c.limit_s));
    failed += !o.pass;
    std::printf("%s %2d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
