#include "ntv/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ntv/errors.hpp"
#include "ntv/quadrature.hpp"

namespace ntv {

namespace {
constexpr std::size_t kZeroBlock = 1024;
using cd = std::complex<double>;

cd xpow(double logx, double re, double gamma) {
  // x^(re + i gamma)
  return std::exp(re * logx) * cd(std::cos(gamma * logx), std::sin(gamma * logx));
}
}  // namespace

double sum_over_zeros(const ZeroTable& z, double gmax, const std::function<cd(double)>& term) {
  const auto& g = z.gammas();
  const std::size_t n = static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), gmax) - g.begin());
  std::vector<double> blocks;
  blocks.reserve(n / kZeroBlock + 1);
  for (std::size_t b = 0; b < n; b += kZeroBlock) {
    double acc = 0.0;
    const std::size_t e = std::min(n, b + kZeroBlock);
    for (std::size_t i = b; i < e; ++i) acc += 2.0 * term(g[i]).real();
    blocks.push_back(acc);
  }
  return pairwise_sum(blocks);
}

FormulaEvaluation truncated_psi(double x, double T, const ZeroTable& z, const SieveOptions& opt) {
  if (!(x > 2.0)) throw DomainError("truncated_psi requires x > 2");
  if (!(T > 0.0)) throw DomainError("truncated_psi requires T > 0");
  if (T > z.max_height()) {
    throw HorizonError("truncation height " + std::to_string(T) + " beyond zero table horizon " +
                       std::to_string(z.max_height()));
  }
  FormulaEvaluation e;
  e.x = x;
  e.T = T;
  const double L = std::log(x);
  e.main_term = x;
  e.zero_sum = sum_over_zeros(z, T, [&](double g) { return xpow(L, 0.5, g) / cd(0.5, g); });
  e.zeros_used = static_cast<std::size_t>(z.count_between(0.0, std::nextafter(T, 0.0)));
  e.constant_terms = std::log(2.0 * std::numbers::pi) + 0.5 * std::log1p(-1.0 / (x * x));
  e.predicted_psi = e.main_term - e.zero_sum - e.constant_terms;
  e.exact_psi = psi(x, opt);
  e.residual = e.exact_psi - e.predicted_psi;
  e.error_budget = 2.0 * x * L * L / T;
  e.half_odd = (x - std::floor(x)) == 0.5;
  e.empirical_regime = L <= 60.0;
  return e;
}

double psi1(double x, const SieveOptions& opt) {
  if (!(x >= 2.0)) return 0.0;
  const u64 n = static_cast<u64>(std::floor(x));
  const long double xl = x;
  auto parts = map_segments<double>(2, n, opt, [&](const Segment& s) {
    long double acc = 0.0L;
    s.for_each_prime([&](u64 p) {
      const long double lp = std::log(static_cast<long double>(p));
      for (u64 q = p;; q *= p) {
        acc += (xl - static_cast<long double>(q)) * lp;
        if (q > n / p) break;
      }
    });
    return static_cast<double>(acc);
  });
  return pairwise_sum(parts);
}

Psi1Formula psi1_formula(double x, const ZeroTable& z) {
  if (!(x > 2.0)) throw DomainError("psi1_formula requires x > 2");
  Psi1Formula r;
  const double L = std::log(x);
  r.zero_sum = sum_over_zeros(z, std::numeric_limits<double>::infinity(),
                              [&](double g) { return xpow(L, 1.5, g) / (cd(0.5, g) * cd(1.5, g)); });
  r.value = 0.5 * x * x - r.zero_sum - x * std::log(2.0 * std::numbers::pi);
  r.tail_slack = std::pow(x, 1.5) * inverse_square_tail(z.max_height());
  return r;
}

double weighted_interval_exact(double x, double h) {
  if (!(h > 0.0) || !(h < x)) throw DomainError("weighted sum requires 0 < h < x");
  const double a = x - h, b = x + h;
  // integers n with a < n < b
  u64 lo = static_cast<u64>(std::floor(a)) + 1;
  u64 hi = static_cast<u64>(std::ceil(b)) - 1;
  if (lo < 2) lo = 2;
  long double acc = 0.0L;
  auto add = [&](u64 n, long double lam) {
    const long double w = 1.0L - std::fabs(static_cast<long double>(n) - x) / h;
    if (w > 0) acc += lam * w;
  };
  if (lo <= hi) {
    SegmentSiever sv(lo, hi);
    Segment seg;
    while (sv.next(seg)) seg.for_each_prime([&](u64 p) { add(p, std::log(static_cast<long double>(p))); });
    // higher prime powers
    const u64 r = isqrt(hi);
    for (std::uint32_t p : small_primes(static_cast<std::uint32_t>(r))) {
      for (u64 q = static_cast<u64>(p) * p; q <= hi; q *= p) {
        if (q >= lo) add(q, std::log(static_cast<long double>(p)));
        if (q > hi / p) break;
      }
    }
  }
  return static_cast<double>(acc);
}

double interval_zero_sum(double x, double h, const ZeroTable& z, double gmax) {
  if (!(h > 0.0) || !(h < x)) throw DomainError("interval zero sum requires 0 < h < x");
  const double lp = std::log(x + h), l0 = std::log(x), lm = std::log(x - h);
  return sum_over_zeros(z, gmax, [&](double g) {
    const cd num = xpow(lp, 1.5, g) - 2.0 * xpow(l0, 1.5, g) + xpow(lm, 1.5, g);
    return num / (cd(0.5, g) * cd(1.5, g));
  });
}

WeightedSum weighted_interval_sum(double x, double h, const ZeroTable& z) {
  WeightedSum r;
  r.exact = weighted_interval_exact(x, h);
  r.sigma = interval_zero_sum(x, h, z, std::numeric_limits<double>::infinity());
  r.formula = h - r.sigma / h;
  r.tail_slack = 4.0 * std::pow(x + h, 1.5) * inverse_square_tail(z.max_height()) / h;
  r.epsilon_bound = 48.0 / (5.0 * h);
  return r;
}

namespace {
void check_sigma_args(double x, double h, double alpha) {
  if (!(h > 0.0) || !(h < x) || !(alpha > 0.0)) throw DomainError("sigma bounds require 0 < h < x, alpha > 0");
  if (!(alpha * x / h > 15.0)) throw DomainError("sigma bounds require alpha x / h > 15");
}
}  // namespace

double sigma1_bound(double x, double h, double alpha) {
  check_sigma_args(x, h, alpha);
  return alpha * x * h / (std::numbers::pi * std::sqrt(x - h)) * std::log(alpha * x / h);
}

double sigma2_bound(double x, double h, double alpha) {
  check_sigma_args(x, h, alpha);
  return 4.0 * h * std::pow(x + h, 1.5) / (std::numbers::pi * alpha * x) * std::log(alpha * x / h);
}

double sigma1_refined(double x, double h, double alpha) {
  check_sigma_args(x, h, alpha);
  const double I = static_cast<double>(sinc2_integral(alpha / 2.0).value);
  return 2.0 / std::numbers::pi * I * h * std::sqrt(x) * std::log(x / h);
}

}  // namespace ntv
