#include "ntv/ramanujan.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>

#include "ntv/errors.hpp"

namespace ntv {

namespace {
constexpr long double kE = std::numbers::e_v<long double>;
using big = boost::multiprecision::cpp_bin_float_50;

long double pi_sq(u64 p) {
  const u128 s = u128{p} * p;  // the cast is exact while p^2 < 2^64
  return static_cast<long double>(s);
}

long double coefficient(long double x) {
  return kE * x / std::log(x);
}
}  // namespace

u64 floor_div_e(long double x) {
  if (!(x >= 0)) throw DomainError("floor_div_e requires x >= 0");
  const long double q = x / kE;
  const long double fl = std::floor(q);
  const long double frac = q - fl;
  if (frac > 1e-6L && frac < 1.0L - 1e-6L) return static_cast<u64>(fl);
  const big bq = big(x) / boost::math::constants::e<big>();
  return static_cast<u64>(boost::multiprecision::floor(bq));
}

u64 first_x_with_quotient(u64 q) {
  u64 j = static_cast<u64>(std::ceil(kE * static_cast<long double>(q)));
  while (j > 0 && floor_div_e(static_cast<long double>(j - 1)) >= q) --j;
  while (floor_div_e(static_cast<long double>(j)) < q) ++j;
  return j;
}

RamanujanEval ramanujan_eval(long double x, PiBounds px, PiBounds pe) {
  if (!(x >= kE)) throw DomainError("f requires x >= e");
  RamanujanEval r;
  r.x = x;
  r.pi_x = px;
  r.pi_x_over_e = pe;
  const long double c = coefficient(x);
  r.f_lo = pi_sq(px.lo) - c * static_cast<long double>(pe.hi);
  r.f_hi = pi_sq(px.hi) - c * static_cast<long double>(pe.lo);
  r.exact = px.exact() && pe.exact();
  return r;
}

RamanujanEval ramanujan_eval(long double x, u64 pi_x, u64 pi_x_over_e) {
  return ramanujan_eval(x, PiBounds{pi_x, pi_x}, PiBounds{pi_x_over_e, pi_x_over_e});
}

RamanujanEval f_exact(long double x, const PrimeTable& primes) {
  if (!(x >= kE)) throw DomainError("f requires x >= e");
  const u64 n = static_cast<u64>(std::floor(x));
  if (primes.range_lo() > 2 || primes.range_hi() < n) {
    throw CoverageError("prime table [" + std::to_string(primes.range_lo()) + ", " +
                        std::to_string(primes.range_hi()) + "] does not cover [2, " + std::to_string(n) + "]");
  }
  const auto& ps = primes.primes();
  auto count = [&](u64 v) { return static_cast<u64>(std::upper_bound(ps.begin(), ps.end(), v) - ps.begin()); };
  return ramanujan_eval(x, count(n), count(floor_div_e(x)));
}

std::vector<RamanujanEval> f_exact_many(const std::vector<u64>& xs, const SieveOptions& opt) {
  std::vector<u64> pts;
  for (u64 x : xs) {
    if (x < 3) throw DomainError("f requires x >= e");
    pts.push_back(x);
    pts.push_back(floor_div_e(static_cast<long double>(x)));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::vector<u64> pis = pi_at_points(pts, opt);
  auto lookup = [&](u64 v) { return pis[std::lower_bound(pts.begin(), pts.end(), v) - pts.begin()]; };
  std::vector<RamanujanEval> out;
  out.reserve(xs.size());
  for (u64 x : xs) {
    out.push_back(ramanujan_eval(static_cast<long double>(x), lookup(x), lookup(floor_div_e(static_cast<long double>(x)))));
  }
  return out;
}

RamanujanEval f_bracketed(u64 x, const CheckpointTable& table) {
  const long double xl = static_cast<long double>(x);
  return ramanujan_eval(xl, table.pi_bounds(x), table.pi_bounds(floor_div_e(xl)));
}

u64 pi_from_table(u64 x, const CheckpointTable& table, const SieveOptions& opt) {
  if (!table.covers(x)) throw CoverageError("x = " + std::to_string(x) + " outside checkpoint coverage");
  const auto& e = table.entries();
  auto it = std::upper_bound(e.begin(), e.end(), x, [](u64 v, const std::pair<u64, u64>& p) { return v < p.first; });
  --it;
  if (it->first == x) return it->second;
  return it->second + count_primes(it->first + 1, x, opt);
}

long double step_epsilon(long double pi_x, long double f) {
  if (!(f < 0)) throw DomainError("cannot step: f upper bound is not negative");
  // sqrt(pi^2 - f) - pi = -f / (sqrt(pi^2 - f) + pi)
  return -f / (std::sqrt(pi_x * pi_x - f) + pi_x);
}

long double step_epsilon(const RamanujanEval& e) {
  return step_epsilon(static_cast<long double>(e.pi_x.hi), e.f_hi);
}

SteppingReport verify_range_stepping(u64 lo, u64 hi, const CheckpointTable& table, const SteppingOptions& opt) {
  if (lo < 3 || lo > hi) throw DomainError("verify_range_stepping requires 3 <= lo <= hi");
  SteppingReport r;
  r.lo = lo;
  r.hi = hi;
  if (lo == hi) {
    r.certified = true;
    return r;
  }
  const u64 need_lo = floor_div_e(static_cast<long double>(lo));
  if (!table.covers(need_lo) || !table.covers(hi)) {
    throw CoverageError("checkpoints must cover [" + std::to_string(need_lo) + ", " + std::to_string(hi) + "]");
  }
  auto exact_at = [&](u64 x) {
    const long double xl = static_cast<long double>(x);
    return ramanujan_eval(xl, pi_from_table(x, table, opt.sieve),
                          pi_from_table(floor_div_e(xl), table, opt.sieve));
  };
  u64 x = lo;
  while (x <= hi) {
    RamanujanEval ev = f_bracketed(x, table);
    if (!(ev.f_hi < 0)) {
      if (!opt.self_heal) {
        r.indeterminate_at = x;
        r.indeterminate_f_hi = ev.f_hi;
        return r;
      }
      ev = exact_at(x);
      ++r.healed;
      if (!(ev.f_hi < 0)) {
        r.counterexample_at = x;
        return r;
      }
    }
    const long double eps = step_epsilon(ev);
    // integers n with n - x < eps are certified
    const u64 step = std::max<u64>(1, static_cast<u64>(std::ceil(eps)));
    if (r.steps == 0 || eps < r.min_step) r.min_step = eps;
    if (eps > r.max_step) r.max_step = eps;
    if (opt.recheck_every && r.steps % opt.recheck_every == 0) {
      const u64 mid = x + (step - 1) / 2;
      ++r.rechecks;
      if (!(exact_at(mid).f_hi < 0)) ++r.recheck_failures;
    }
    ++r.steps;
    if (hi - x < step) break;
    x += step;
  }
  r.certified = r.recheck_failures == 0;
  return r;
}

CounterexampleScan exhaustive_counterexample_scan(u64 lo, u64 hi, const SieveOptions& opt) {
  if (lo < 3) lo = 3;
  check_sieve_range(lo, hi);
  CounterexampleScan r;
  r.lo = lo;
  r.hi = hi;
  if (lo > hi) return r;

  const u64 qlo = floor_div_e(static_cast<long double>(lo));
  const u64 qhi = floor_div_e(static_cast<long double>(hi));
  u64 pi_e = qlo >= 2 ? prime_pi(qlo, opt) : 0;
  u64 pi_x = lo > 2 ? prime_pi(lo - 1, opt) : 0;

  // x where pi(x/e) steps up
  std::vector<u64> jumps;
  if (qhi > qlo) {
    PrimeTable(qlo + 1, qhi, opt).for_each_prime([&](u64 q) { jumps.push_back(first_x_with_quotient(q)); });
  }
  std::size_t ji = 0;

  auto f_at = [&](u64 x, u64 px, u64 pe) {
    const long double xl = static_cast<long double>(x);
    return pi_sq(px) - coefficient(xl) * static_cast<long double>(pe);
  };
  auto evaluate = [&](u64 x) {
    ++r.jump_points;
    long double f = f_at(x, pi_x, pi_e);
    // f decreases until the next prime or quotient jump
    while (f >= 0) {
      r.counterexamples.push_back(x);
      r.f_values.push_back(f);
      ++x;
      if (x > hi || is_prime(x) || (ji < jumps.size() && jumps[ji] <= x)) break;
      f = f_at(x, pi_x, pi_e);
    }
  };

  SegmentSiever sv(lo, hi, opt.segment_size);
  Segment seg;
  std::vector<u64> events, ps;
  bool first = true;
  while (sv.next(seg)) {
    ps.clear();
    seg.for_each_prime([&](u64 p) { ps.push_back(p); });
    events.clear();
    if (first) events.push_back(lo);
    first = false;
    for (std::size_t k = ji; k < jumps.size() && jumps[k] <= seg.hi(); ++k) events.push_back(jumps[k]);
    events.insert(events.end(), ps.begin(), ps.end());
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    std::size_t pk = 0;
    for (u64 x : events) {
      while (pk < ps.size() && ps[pk] <= x) ++pi_x, ++pk;
      while (ji < jumps.size() && jumps[ji] <= x) ++pi_e, ++ji;
      evaluate(x);
    }
  }
  return r;
}

std::vector<u64> naive_counterexample_scan(u64 lo, u64 hi) {
  if (lo < 3) lo = 3;
  if (hi > 1000000000ULL) throw CapacityError("naive scan limited to hi <= 1e9");
  std::vector<u64> out;
  if (lo > hi) return out;
  std::vector<std::uint32_t> prefix(hi + 1, 0);
  std::vector<bool> composite(hi + 1, false);
  for (u64 i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  for (u64 i = 2; i <= hi; ++i) prefix[i] = prefix[i - 1] + (composite[i] ? 0 : 1);
  for (u64 x = lo; x <= hi; ++x) {
    const long double xl = static_cast<long double>(x);
    if (ramanujan_eval(xl, prefix[x], prefix[floor_div_e(xl)]).f_lo >= 0) out.push_back(x);
  }
  return out;
}

long double series_difference_ratio(long double L) {
  static const long double a[5] = {1, 2, 5, 16, 64};
  static const long double b[5] = {1, 2, 5, 16, 65};
  const long double x2 = std::exp(2.0L * L);
  long double sa = 0, sb = 0;
  for (int j = 4; j >= 0; --j) {
    sa += a[j] / std::pow(L, j + 2);
    sb += b[j] / std::pow(L, j + 2);
  }
  const long double diff = x2 * sa - x2 * sb;
  return diff / (-x2 / std::pow(L, 6));
}

SeriesCheck series_coefficients_check() {
  SeriesCheck s;
  s.square = {1, 2, 5, 16, 64};
  s.shifted = {1, 2, 5, 16, 65};
  std::array<long long, 5> fact{1, 1, 2, 6, 24};
  for (int j = 0; j < 5; ++j) {
    for (int k = 0; k <= j; ++k) s.square_conv[j] += fact[k] * fact[j - k];
    long long binom = 1;  // C(j, k)
    for (int k = 0; k <= j; ++k) {
      s.shifted_binom[j] += fact[k] * binom;
      binom = binom * (j - k) / (k + 1);
    }
  }
  s.coefficients_agree = s.square == s.square_conv && s.shifted == s.shifted_binom;
  s.ratio_e100 = series_difference_ratio(100.0L);
  s.ratio_e1000 = series_difference_ratio(1000.0L);
  return s;
}

}  // namespace ntv
