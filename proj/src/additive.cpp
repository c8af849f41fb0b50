#include "ntv/additive.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ntv/errors.hpp"
#include "ntv/squarefree.hpp"

namespace ntv {

namespace {

bool squarefree_by_factoring(u64 m) {
  for (u64 q : prime_factors(m))
    if ((m / q) % q == 0) return false;
  return true;
}

// Largest prime strictly below n, 0 if none.
u64 prev_prime(u64 n) {
  if (n <= 2) return 0;
  for (u64 c = n - 1; c >= 2; --c)
    if (is_prime(c)) return c;
  return 0;
}

}  // namespace

bool validate(const Decomposition& d) {
  if (!is_prime(d.p) || d.m < 1) return false;
  if (d.square_power != 1 && d.square_power != 2) return false;
  const u128 pk = d.square_power == 1 ? u128{d.p} : u128{d.p} * d.p;
  if (pk + d.m != d.n) return false;
  if (d.m <= 1000000) return squarefree_by_factoring(d.m);
  return SquarefreeSieve(d.m, d.m).flag(d.m);
}

// ---- prime + squarefree ------------------------------------------------------

Decomposition estermann_search(u64 n, unsigned lookback) {
  if (n < 3) throw DomainError("estermann_search requires n >= 3");
  if (lookback == 0) throw DomainError("estermann_search requires lookback >= 1");
  Decomposition d;
  d.n = n;
  u64 p = n;
  for (unsigned i = 0; i < lookback; ++i) {
    p = prev_prime(p);
    if (p == 0) break;
    if (is_squarefree(n - p)) {
      d.p = p;
      d.m = n - p;
      d.attempts = i;
      return d;
    }
  }
  throw ExhaustionError("no prime among the " + std::to_string(lookback) + " largest below " +
                            std::to_string(n) + " leaves a squarefree remainder",
                        n);
}

EstermannScan estermann_scan(u64 lo, u64 hi, unsigned lookback, const SieveOptions& opt) {
  if (lo < 3) lo = 3;
  if (lookback == 0) throw DomainError("estermann_scan requires lookback >= 1");
  check_sieve_range(lo, hi);
  EstermannScan r;
  r.lo = lo;
  r.hi = hi;
  if (lo > hi) return r;
  constexpr u64 kChunk = u64{1} << 24;
  for (u64 a = lo;; a += kChunk) {
    const u64 b = std::min(hi, a + kChunk - 1);
    // start far enough back to hold `lookback` primes below a
    u64 start = a;
    for (unsigned i = 0; i < lookback; ++i) {
      const u64 q = prev_prime(start);
      if (q == 0) break;
      start = q;
    }
    const PrimeTable table(std::min(start, a), b, opt);
    const std::vector<u64>& ps = table.primes();
    std::size_t below = 0;  // primes < n
    for (u64 n = a; n <= b; ++n) {
      while (below < ps.size() && ps[below] < n) ++below;
      bool ok = false;
      for (unsigned t = 0; t < lookback && t < below; ++t) {
        if (is_squarefree(n - ps[below - 1 - t])) {
          ok = true;
          if (t > r.max_attempts) {
            r.max_attempts = t;
            r.argmax_attempts = n;
          }
          break;
        }
      }
      if (ok) ++r.decomposed;
      else r.exhausted.push_back(n);
    }
    if (b == hi) break;
  }
  return r;
}

double estermann_lower_bound(double n, double A) {
  if (!(n >= 3.0)) throw DomainError("estermann_lower_bound requires n >= 3");
  if (!(A > 0.0) || !(A < 0.5)) throw DomainError("estermann_lower_bound requires 0 < A < 1/2");
  const double L = std::log(n);
  return kArtinFloor - 0.005 - (1.0 + 2.0 * A) / (1.0 - 2.0 * A) * 0.086 - L / std::sqrt(n) -
         std::pow(n, -2.0 * A) * L - std::pow(n, -A) * L;
}

EstermannConstants estermann_constants(u64 artin_limit) {
  EstermannConstants c;
  for (const auto& row : epsilon_table()) {
    if (row.q > 13) break;
    const double phi = static_cast<double>(row.q * (row.q - 1));
    c.eps_sum += std::stod(row.eps_1e10) / phi;
    c.eps_moduli_used.push_back(row.q);
  }
  for (u64 a = 1; a <= 13; ++a) {
    if (!is_squarefree(a)) continue;
    c.head_sum += 1.0 / static_cast<double>(a * euler_phi(a));
  }
  c.tail_bound = 1.95 - c.head_sum;
  long double prod = 1.0L;
  for (std::uint32_t p : small_primes(static_cast<std::uint32_t>(artin_limit))) {
    const long double pl = p;
    prod *= 1.0L - 1.0L / (pl * (pl - 1.0L));
  }
  c.artin_product = static_cast<double>(prod);
  c.artin_limit = artin_limit;
  return c;
}

// ---- prime^2 + squarefree ----------------------------------------------------

const std::vector<EpsilonRow>& epsilon_table() {
  static const std::vector<EpsilonRow> rows = {
      {3, "0.003228", "0.00323"}, {5, "0.012214", "0.01222"}, {7, "0.017015", "0.01702"},
      {11, "0.031939", "0.03194"}, {13, "0.042497", "0.04250"}, {17, "0.14271", "0.14271"},
      {19, "0.17641", "0.17641"}, {23, "0.25779", "0.25779"}, {29, "0.41474", "0.41474"},
      {31, "0.47695", "0.47695"}, {37, "0.69397", "0.69397"}, {41, "0.86446", "0.86446"},
      {43, "0.95757", "0.95757"}, {47, "1.15923", "1.15923"}, {53, "1.50179", "1.50179"},
      {59, "1.89334", "1.89334"}, {61, "2.03488", "2.03488"}, {67, "2.49293", "2.49293"},
      {71, "2.82639", "2.82639"}, {73, "3.00162", "3.00162"}, {79, "3.56158", "3.56158"},
      {83, "3.96363", "3.96363"}, {89, "4.61023", "4.61023"}, {97, "5.55434", "5.55434"},
  };
  return rows;
}

std::vector<EpsilonRow> load_epsilon_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::vector<EpsilonRow> rows;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (ln == 1 && line.rfind("q,", 0) == 0) continue;
    std::stringstream ss(line);
    std::string q, a, b;
    if (!std::getline(ss, q, ',') || !std::getline(ss, a, ',') || !std::getline(ss, b)) {
      throw ParseError("expected q,eps_1e10,eps_T", ln);
    }
    try {
      rows.push_back({std::stoull(q), a, b});
    } catch (const std::exception&) {
      throw ParseError("bad modulus '" + q + "'", ln);
    }
  }
  return rows;
}

double omega_q2(u64 q) {
  switch (q) {
    case 3: return 1.109042;
    case 5: return 0.821891;
    case 7: return 0.744132;
    case 11: return 0.711433;
    case 13: return 0.718525;
    default: break;
  }
  if (q < 17 || q > 97 || !is_prime(q)) throw DomainError("omega_q2 defined for odd primes q <= 97");
  return (std::log(7.0) - 7.0 / static_cast<double>(q * (q - 1))) / std::sqrt(7.0);
}

double eps_T_derived(u64 q, double T) {
  for (const auto& row : epsilon_table()) {
    if (row.q != q) continue;
    const double phi = static_cast<double>(q * (q - 1));
    return std::max(std::stod(row.eps_1e10), omega_q2(q) * phi / std::sqrt(T));
  }
  throw DomainError("no table row for q = " + std::to_string(q));
}

double mischievous_small_q_sum() {
  double s = 0.0;
  for (const auto& row : epsilon_table()) {
    const double q = static_cast<double>(row.q);
    s += 2.0 * (1.0 + std::stod(row.eps_T)) / (q * (q - 1.0));
  }
  return s;
}

double reciprocal_prime_sum(u64 lo, u64 hi, const SieveOptions& opt) {
  if (lo < 2 || !(lo < hi)) throw DomainError("reciprocal_prime_sum requires 2 <= lo < hi");
  auto parts = map_segments<double>(lo + 1, hi, opt, [](const Segment& s) {
    long double acc = 0.0L;
    s.for_each_prime([&](u64 q) {
      const long double ql = static_cast<long double>(q);
      acc += 1.0L / (ql * (ql - 1.0L));
    });
    return static_cast<double>(acc);
  });
  return pairwise_sum(parts);
}

double erdos_lower_bound(double n, double c, double A) {
  if (!(n >= 1e14)) throw DomainError("erdos_lower_bound requires n >= 1e14");
  if (!(c > 0.0) || !(c < 0.25)) throw DomainError("erdos_lower_bound requires 0 < c < 1/4");
  if (!(A > 0.0) || !(A < 1.0)) throw DomainError("erdos_lower_bound requires 0 < A < 1");
  const double L = std::log(n), s = std::sqrt(n);
  const double lead = 1.0 - 0.568 - 0.00183 / (0.25 - c) - 0.8 / (L * L) -
                      (std::pow(n, -2.0 * c) + std::pow(n, -c)) * L;
  const double la = std::log(A * s);
  const double mid = A * s * L / la * (1.0 + 1.2762 / la);
  const double last = std::exp2(1.3841 * L / std::log(L)) *
                      (1.5 + 1.0 / (48.0 * A * A) + 9.0 / (2.0 * A * A * n)) * L;
  return lead * s - mid - last;
}

Decomposition erdos_search(u64 n, u64 p_max) {
  if (n < 10 || n % 4 == 1) throw DomainError("erdos_search requires n >= 10, n != 1 mod 4");
  Decomposition d;
  d.n = n;
  d.square_power = 2;
  unsigned tried = 0;
  for (std::uint32_t p : small_primes(static_cast<std::uint32_t>(p_max))) {
    const u64 p2 = u64{p} * p;
    if (p2 >= n) break;
    if (p == 2 && n % 4 == 0) continue;
    if (is_squarefree(n - p2)) {
      d.p = p;
      d.m = n - p2;
      d.attempts = tried;
      return d;
    }
    ++tried;
  }
  throw ExhaustionError("no prime p <= " + std::to_string(p_max) + " with " + std::to_string(n) +
                            " - p^2 squarefree",
                        n);
}

ErdosWindow erdos_search_range(u64 N, u64 W, u64 P, bool keep_found) {
  if (P < 2 || W == 0) throw DomainError("erdos_search_range requires P >= 2, W >= 1");
  if (N < P * P + 10) throw DomainError("erdos_search_range requires N >= P^2 + 10");
  check_sieve_range(N - P * P, N + W);
  const SquarefreeSieve sf(N - P * P, N + W - 5);
  const std::vector<std::uint32_t> ps = small_primes(static_cast<std::uint32_t>(P));
  ErdosWindow w;
  for (u64 n = N; n < N + W; ++n) {
    if ((n & 3) == 1) continue;
    unsigned tried = 0;
    bool ok = false;
    for (std::uint32_t p : ps) {
      if (p == 2 && (n & 3) == 0) continue;
      const u64 m = n - u64{p} * p;
      if (sf[m]) {
        if (keep_found) w.found.push_back({n, p, 2, m, tried});
        w.max_p = std::max<u64>(w.max_p, p);
        ok = true;
        break;
      }
      ++tried;
    }
    if (!ok) w.failures.push_back(n);
  }
  return w;
}

ErdosScan erdos_scan(u64 lo, u64 hi, u64 W, u64 P, u64 p_max) {
  if (W == 0) throw DomainError("erdos_scan requires W >= 1");
  if (p_max < P) throw DomainError("erdos_scan requires p_max >= P");
  if (lo < 10) lo = 10;
  check_sieve_range(lo, hi);
  ErdosScan r;
  r.lo = lo;
  r.hi = hi;
  if (lo > hi) return r;
  const u64 first_window = P * P + 10;
  // below the window precondition: direct tests
  for (u64 n = lo; n <= std::min(hi, first_window - 1); ++n) {
    if (n % 4 == 1) continue;
    ++r.checked;
    try {
      r.max_p = std::max(r.max_p, erdos_search(n, P).p);
    } catch (const ExhaustionError&) {
      r.rejected.push_back(n);
    }
  }
  for (u64 N = std::max(lo, first_window); N <= hi;) {
    const u64 w = std::min(W, hi - N + 1);
    const ErdosWindow win = erdos_search_range(N, w, P);
    for (u64 n = N; n < N + w; ++n) r.checked += (n & 3) != 1;
    r.rejected.insert(r.rejected.end(), win.failures.begin(), win.failures.end());
    r.max_p = std::max(r.max_p, win.max_p);
    N += w;
  }
  for (u64 n : r.rejected) {
    try {
      const Decomposition d = erdos_search(n, p_max);
      r.escalated.emplace_back(n, d.p);
      r.max_p = std::max(r.max_p, d.p);
    } catch (const ExhaustionError&) {
      r.unresolved.push_back(n);
    }
  }
  return r;
}

// ---- counting checks ----------------------------------------------------------

u64 b_count(u64 n, double A) {
  if (n < 10 || !(A > 0.0) || !(A < 1.0)) throw DomainError("b_count requires n >= 10, 0 < A < 1");
  const double top = 1.0 / (A * A);
  const double low = (static_cast<double>(n) - 9.0) / (A * A * static_cast<double>(n));
  // integers B in [lo_b, hi_b)
  const u64 hi_b = static_cast<u64>(std::ceil(top));
  const u64 lo_b = std::max<u64>(1, static_cast<u64>(std::ceil(low)));
  u64 count = hi_b > lo_b ? hi_b - lo_b : 0;
  const u64 res = (n - 1) % 24;
  for (u64 B = res == 0 ? 24 : res; B < hi_b; B += 24) ++count;
  return count;
}

double b_count_bound(double n, double A) {
  return 2.0 + 1.0 / (24.0 * A * A) + 9.0 / (A * A * n);
}

double robin_omega_bound(double n) {
  if (!(n >= 3.0)) throw DomainError("robin_omega_bound requires n >= 3");
  return 1.3841 * std::log(n) / std::log(std::log(n));
}

}  // namespace ntv
