#include "ntv/bounds.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>

#include "ntv/arith.hpp"
#include "ntv/errors.hpp"
#include "ntv/quadrature.hpp"
#include "ntv/sieve.hpp"

namespace ntv {

using std::log;
namespace {
constexpr double kPi = std::numbers::pi;
}

double ford_nu(double T, double c) {
  if (!(T >= 3.0)) throw DomainError("ford_nu requires T >= 3");
  if (!(c > 0.0)) throw DomainError("ford_nu requires c > 0");
  const double L = log(T);
  return 1.0 / (c * std::pow(L, 2.0 / 3.0) * std::cbrt(log(L)));
}

double ramare_density(double sigma, double T, double A) {
  if (!(T >= 2000.0) || !(sigma >= 0.52)) {
    throw DomainError("ramare_density requires T >= 2000 and sigma >= 0.52");
  }
  const double L = log(T);
  return A * std::pow(3.0 * T, 8.0 * (1.0 - sigma) / 3.0) * std::pow(L, 5.0 - 2.0 * sigma) + 103.0 * L * L;
}

// ---- threshold solvers ----------------------------------------------------------

double cube_ineq_density(double y, double A, double c, double k) {
  const double lhs = log(27.0 * A / 256.0) + (4.0 - k) * log(y) -
                     4.0 / (std::cbrt(9.0) * c) * std::pow(y, k - 2.0 / 3.0) / std::cbrt(log(y));
  return lhs - log(0.5 * (1.0 - 1e-3));
}

double mpower_ineq(double y, int m, double k) {
  const double lhs = 2.75 * log(y) - (0.375 - 1.0 / m) * y + 0.375 * std::pow(y, k);
  return lhs - log(m / 12.0 * (1.0 - 1e-3));
}

namespace {
double both(double y, int m, double A, double c, double k) {
  return std::max(cube_ineq_density(y, A, c, k), mpower_ineq(y, m, k));
}
}  // namespace

CubeSolveResult solve_mpowers(int m, double A, double c, double k, const SolverOptions& opt) {
  if (m < 3) throw DomainError("m-power solver requires m >= 3");
  if (!(k > 2.0 / 3.0) || !(k < 1.0)) throw DomainError("solver requires 2/3 < k < 1");
  if (!(A > 0.0) || !(c > 0.0)) throw DomainError("solver requires A, c > 0");
  CubeSolveResult r;
  r.m = m;
  r.A = A;
  r.c = c;
  r.k = k;
  const double step = std::pow(10.0, 1.0 / opt.points_per_decade);
  auto f = [&](double y) { return both(y, m, A, c, k); };

  // last grid point where either inequality fails
  double last_fail = -1.0, after = -1.0;
  double y = opt.y_min;
  for (; y <= opt.y_max; y *= step) {
    if (!(f(y) < 0.0)) last_fail = y;
    else if (last_fail > 0.0 && after < last_fail) after = y;
  }
  if (last_fail > 0.0 && !(after > last_fail)) {
    throw SolverRangeError("no threshold below y = " + std::to_string(opt.y_max));
  }
  if (last_fail < 0.0) {
    r.y_star = opt.y_min;
  } else {
    boost::uintmax_t iters = 200;
    auto tol = [&](double a, double b) { return std::fabs(b - a) <= opt.rel_tol * std::fabs(b); };
    auto [lo, hi] = boost::math::tools::bisect(f, last_fail, after, tol, iters);
    r.y_star = f(hi) < 0.0 ? hi : after;
    (void)lo;
  }
  r.loglog_n0 = log(r.y_star) - log(static_cast<double>(m));
  r.verified = true;
  for (double t = r.y_star; t <= opt.verify_factor * r.y_star; t *= step) {
    if (!(f(t) < 0.0)) {
      r.verified = false;
      break;
    }
  }
  return r;
}

CubeSolveResult solve_cubes(double A, double c, double k, const SolverOptions& opt) {
  return solve_mpowers(3, A, c, k, opt);
}

const std::vector<MPowerRow>& mpower_table() {
  static const std::vector<MPowerRow> rows = {
      {4, 0.9635, 29.240}, {5, 0.9741, 27.820}, {6, 0.9796, 27.230},
      {7, 0.983, 26.427},  {1000, 0.9998, 19.807},
  };
  return rows;
}

double all_n_gap(double m, double loglog, double base_m) {
  const double logY = log(base_m) + loglog;
  const double Y = std::exp(logY);
  return Y / m - log(111.0) - 2.0 * logY - log(m);
}

std::uint64_t solve_all_n(double loglog, double base_m) {
  auto g = [&](double lm) { return all_n_gap(std::exp(lm), loglog, base_m); };
  const double a = log(1e8), b = log(1e11);
  if (!(g(a) > 0.0) || !(g(b) < 0.0)) throw SolverRangeError("all-n gap has no sign change on [1e8, 1e11]");
  boost::uintmax_t iters = 200;
  auto [lo, hi] = boost::math::tools::bisect(g, a, b, boost::math::tools::eps_tolerance<double>(50), iters);
  std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::exp(0.5 * (lo + hi))));
  while (m > 1 && all_n_gap(static_cast<double>(m - 1), loglog, base_m) <= 0.0) --m;
  while (all_n_gap(static_cast<double>(m), loglog, base_m) > 0.0) ++m;
  return m;
}

// ---- Cramer-type constants -------------------------------------------------------

double cramer_term(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("cramer_term requires alpha > 0");
  return alpha / kPi + 4.0 / (kPi * alpha);
}

double cramer_refined_c(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("cramer_refined_c requires alpha > 0");
  return 2.0 / (kPi * alpha) + static_cast<double>(sinc2_integral(alpha / 2.0).value) / kPi;
}

double cramer_argmin(double lo, double hi) {
  auto r = boost::math::tools::brent_find_minima([](double a) { return cramer_term(a); }, lo, hi, 52);
  return r.first;
}

// ---- PNT error ----------------------------------------------------------------------

double mt_epsilon0(double x) {
  if (!(x >= 149.0)) throw DomainError("mt_epsilon0 requires x >= 149");
  const double X = std::sqrt(log(x) / kMtR);
  return std::sqrt(8.0 / (17.0 * kPi)) * std::sqrt(X) * std::exp(-X);
}

MtCheck check_mt_epsilon0(std::uint64_t hi) {
  if (hi < 149) throw DomainError("check_mt_epsilon0 requires hi >= 149");
  MtCheck r;
  long double th = 0.0L;
  bool started = false;
  auto test = [&](double x, long double theta_val) {
    const double dev = std::fabs(static_cast<double>(theta_val) - x);
    const double bound = x * mt_epsilon0(x);
    r.max_ratio = std::max(r.max_ratio, dev / bound);
    if (!(dev <= bound) && r.violations++ == 0) r.first_violation = x;
  };
  SegmentSiever sv(2, hi);
  Segment seg;
  while (sv.next(seg)) {
    seg.for_each_prime([&](u64 p) {
      if (p > 149) {
        if (!started) {
          test(149.0, th);  // left end of the range
          started = true;
        }
        test(static_cast<double>(p), th);  // left limit at p
      }
      th += std::log(static_cast<long double>(p));
      if (p >= 149) {
        test(static_cast<double>(p), th);
        ++r.primes_checked;
      }
    });
  }
  test(static_cast<double>(hi), th);
  return r;
}

// ---- unconditional Ramanujan threshold -------------------------------------------------

double unconditional_lhs(double y, double a) {
  const double c = log(std::sqrt(8.0 / (17.0 * kPi)) / (std::pow(kMtR, 0.25) * a));
  return c + 5.25 * log(y) - std::sqrt(y / kMtR);
}

double eps_M(double L, double M) {
  return 72.0 + 2.0 * M + (2.0 * M + 132.0) / L + (4.0 * M + 288.0) / (L * L) +
         (12.0 * M + 576.0) / std::pow(L, 3) + 48.0 * M / std::pow(L, 4) + M * M / std::pow(L, 5);
}

double eps_m(double L, double m) {
  return 206.0 + m + 364.0 / L + 381.0 / (L * L) + 238.0 / std::pow(L, 3) + 97.0 / std::pow(L, 4) +
         30.0 / std::pow(L, 5) + 8.0 / std::pow(L, 6);
}

UnconditionalResult ramanujan_unconditional(double a) {
  if (!(a > 0.0)) throw DomainError("ramanujan_unconditional requires a > 0");
  constexpr int kMaxY = 10000000;
  UnconditionalResult r;
  r.a = a;
  int last_fail = 1;
  for (int y = 2; y <= kMaxY; ++y) {
    if (unconditional_lhs(y, a) > 0.0) last_fail = y;
    else if (y > 4 * last_fail + 1000) break;  // right side dominates from here on
  }
  if (last_fail >= kMaxY) throw SolverRangeError("no y_a below 1e7");
  r.y_a = last_fail + 1;
  const double y = r.y_a;
  const double l2_8 = std::pow(std::numbers::ln2, 8);
  const double t_half = std::exp(6.0 * log(y) - 0.5 * y);  // log^6 x_a / sqrt(x_a)
  const double t_full = std::exp(6.0 * log(y) - y);        // log^6 x_a / x_a
  r.A_const = 0.0;
  double fact = 1.0;
  for (int k = 1; k <= 5; ++k) {
    fact *= k;
    r.A_const += fact / std::pow(std::numbers::ln2, k + 1);
  }
  r.M_a = 120.0 + a + (a + 720.0) / y + (1792.0 * a + 1290240.0) / (y * y) + (5040.0 + 7.0 * a) / l2_8 * t_half;
  r.m_a = 120.0 - a - a / y - 1792.0 / (y * y) - 2.0 * r.A_const * t_full - 7.0 * a * t_half / l2_8;
  int fail = 0;
  for (int yy = 1; yy <= kMaxY; ++yy) {
    const double diff = eps_M(yy, r.M_a) - eps_m(yy, r.m_a);
    if (!(yy > diff)) fail = yy;
    else if (yy > 2 * fail + 100) break;
  }
  r.y_a_prime_min = fail + 1;
  r.threshold_y = std::max(1 + r.y_a, r.y_a_prime_min);
  return r;
}

// ---- RH-conditional --------------------------------------------------------------------

double schoenfeld_gap(double x) {
  if (!(x >= 2657.0)) throw DomainError("schoenfeld_gap requires x >= 2657");
  return std::sqrt(x) * log(x) / (8.0 * kPi);
}

long double conditional_g(long double x) {
  if (!(x >= 2657.0L * std::numbers::e_v<long double>)) throw DomainError("conditional_g requires x >= 2657 e");
  const long double e = std::numbers::e_v<long double>;
  const long double L = std::log(x);
  const long double li_x = offset_li(x);
  const long double inner =
      offset_li(x / e) - std::sqrt(x / e) * (L - 1.0L) / (8.0L * std::numbers::pi_v<long double>);
  return li_x * li_x - e * x / L * inner;
}

// ---- Brun-Titchmarsh -------------------------------------------------------------------

double brun_titchmarsh(double /*x*/, double y, std::uint64_t k) {
  if (k == 0) throw DomainError("brun_titchmarsh requires k >= 1");
  const double kk = static_cast<double>(k);
  if (!(y > kk) || y / kk <= 1.0 + 1e-9) throw DomainError("brun_titchmarsh requires k < y");
  return 2.0 * y / (static_cast<double>(euler_phi(k)) * log(y / kk));
}

}  // namespace ntv
