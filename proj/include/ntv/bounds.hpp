#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ntv {

// ---- zero-free region / zero density -------------------------------------------

inline constexpr double kFordC = 57.54;
inline constexpr double kRamareA = 9.7;

// Width of the zero-free region: 1 / (c log^{2/3} T (log log T)^{1/3}), T >= 3.
double ford_nu(double T, double c = kFordC);
// N(sigma, T) <= A (3T)^{8(1-sigma)/3} log^{5-2 sigma} T + 103 log^2 T; T >= 2000, sigma >= 0.52.
double ramare_density(double sigma, double T, double A = kRamareA);

// ---- threshold solvers (y = log x) ---------------------------------------------

struct SolverOptions {
  double y_min = 10.0;
  double y_max = 1e18;
  int points_per_decade = 10000;
  double rel_tol = 1e-7;      // bisection stops at this relative width in y
  double verify_factor = 10.0;  // forward check of [y*, factor * y*]
};

struct CubeSolveResult {
  int m = 3;
  double A = 0, c = 0, k = 0;
  double y_star = 0;
  double loglog_n0 = 0;
  bool verified = false;  // both inequalities hold on the forward sample
};

// Left sides minus right sides; an inequality holds when its value is < 0.
double cube_ineq_density(double y, double A, double c, double k);  // shared by every m
double mpower_ineq(double y, int m, double k);                      // m = 3 gives the cube form

CubeSolveResult solve_cubes(double A, double c, double k, const SolverOptions& opt = {});
CubeSolveResult solve_mpowers(int m, double A, double c, double k, const SolverOptions& opt = {});

struct MPowerRow {
  int m;
  double k;
  double loglog_n0;  // value printed in the published table
};
// The published m-power table.
const std::vector<MPowerRow>& mpower_table();

// Region-gap for all-n: Y/m - log 111 - 2 log Y - log m with Y = base_m * e^{loglog}.
double all_n_gap(double m, double loglog = 19.807, double base_m = 1000.0);
// Smallest integer m with all_n_gap(m) <= 0, searched on [1e8, 1e11].
std::uint64_t solve_all_n(double loglog = 19.807, double base_m = 1000.0);

// ---- short intervals under RH ------------------------------------------------------

double cramer_term(double alpha);
double cramer_refined_c(double alpha);
// Brent minimiser of cramer_term on (lo, hi]
double cramer_argmin(double lo = 1e-3, double hi = 10.0);

// ---- prime number theorem errors -----------------------------------------------------

inline constexpr double kMtR = 6.315;
// sqrt(8/(17 pi)) X^{1/2} e^{-X}, X = sqrt(log x / R); x >= 149
double mt_epsilon0(double x);

struct MtCheck {
  std::uint64_t primes_checked = 0;
  std::uint64_t violations = 0;
  double first_violation = 0;
  double max_ratio = 0;  // max |theta(x) - x| / (x eps0(x))
  bool ok() const { return violations == 0; }
};
// |theta(x) - x| <= x eps0(x) for every real x in [149, hi]: tested at each
// prime and at each left limit, where the deviation is extremal.
MtCheck check_mt_epsilon0(std::uint64_t hi);

struct UnconditionalResult {
  double a = 0;
  int y_a = 0;              // smallest integer y solving the log-form inequality
  double M_a = 0, m_a = 0;  // evaluated at x_a = e^{y_a}
  double A_const = 0;       // sum_{k=1}^5 k!/log^{k+1} 2
  int y_a_prime_min = 0;    // smallest integer y >= y_a with y > eps_M - eps_m at e^y
  int threshold_y = 0;      // max(1 + y_a, y_a_prime_min)
};
double unconditional_lhs(double y, double a);  // log(...) + 21/4 log y - sqrt(y/R)
double eps_M(double logx, double M_a);
double eps_m(double logx, double m_a);
UnconditionalResult ramanujan_unconditional(double a);

// ---- RH-conditional pieces -----------------------------------------------------------------

// (1/8pi) sqrt(x) log x, x >= 2657
double schoenfeld_gap(double x);
// Li(x)^2 - (e x / log x)(Li(x/e) - (1/8pi) sqrt(x/e)(log x - 1)), x >= 2657 e
long double conditional_g(long double x);

// ---- Brun-Titchmarsh -------------------------------------------------------------------------

// 2y / (phi(k) log(y/k)), k < y
double brun_titchmarsh(double x, double y, std::uint64_t k);

}  // namespace ntv
