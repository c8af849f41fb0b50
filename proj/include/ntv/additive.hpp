#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ntv/arith.hpp"
#include "ntv/sieve.hpp"

namespace ntv {

struct Decomposition {
  u64 n = 0;
  u64 p = 0;
  int square_power = 1;  // 1: n = p + m, 2: n = p^2 + m
  u64 m = 0;
  unsigned attempts = 0;  // primes tried before the successful one
};

// Re-checks primality of p (Miller-Rabin) and squarefreeness of m (factorisation
// up to 1e6, a small squarefree sieve above).
bool validate(const Decomposition& d);

// ---- prime + squarefree ------------------------------------------------------

// Tries the `lookback` largest primes below n, largest first.
Decomposition estermann_search(u64 n, unsigned lookback = 100);

struct EstermannScan {
  u64 lo = 0, hi = 0;
  u64 decomposed = 0;
  unsigned max_attempts = 0;
  u64 argmax_attempts = 0;
  std::vector<u64> exhausted;  // n where every lookback prime failed
};
// Every n in [lo, hi] (odd and even), primes from one sieve pass.
EstermannScan estermann_scan(u64 lo, u64 hi, unsigned lookback = 100, const SieveOptions& opt = {});

inline constexpr double kArtinFloor = 0.373;
// c - 0.005 - ((1+2A)/(1-2A)) 0.086 - n^{-1/2} log n - n^{-2A} log n - n^{-A} log n
double estermann_lower_bound(double n, double A = 0.25);

struct EstermannConstants {
  double eps_sum = 0;         // sum of eps_a / phi(a^2) over the moduli with table values
  std::vector<u64> eps_moduli_used;  // the a contributing to eps_sum
  double head_sum = 0;        // sum_{a <= 13} mu^2(a) / phi(a^2)
  double tail_bound = 0;      // 1.95 - head_sum
  double artin_product = 0;   // prod_{p <= artin_limit} (1 - 1/(p(p-1)))
  u64 artin_limit = 0;
};
EstermannConstants estermann_constants(u64 artin_limit = 1000000);

// ---- prime^2 + squarefree ----------------------------------------------------

struct EpsilonRow {
  u64 q;
  std::string eps_1e10;  // table value at x0 = 1e10, as printed
  std::string eps_T;     // table value at T = sqrt(2.5e14), as printed
};
// The 24 odd primes q <= 97 with both printed tables.
const std::vector<EpsilonRow>& epsilon_table();
std::vector<EpsilonRow> load_epsilon_csv(const std::string& path);

// omega(q^2, 1e10): printed values for q <= 13, closed form for 17 <= q <= 97
double omega_q2(u64 q);
// max(eps(q^2, 1e10), omega(q^2, 1e10) phi(q^2) / sqrt(T))
double eps_T_derived(u64 q, double T = 15811388.300841898);

// sum over the 24 q of 2 (1 + eps(q^2, T)) / (q (q-1))
double mischievous_small_q_sum();
// sum of 1/(q(q-1)) over primes lo < q <= hi
double reciprocal_prime_sum(u64 lo, u64 hi, const SieveOptions& opt = {});

double erdos_lower_bound(double n, double c_exp = 0.209, double A = 0.0685);

// Smallest prime p with n - p^2 squarefree, using direct tests; p <= p_max.
// p = 2 is skipped when 4 | n. Throws ExhaustionError.
Decomposition erdos_search(u64 n, u64 p_max = 200);

struct ErdosWindow {
  std::vector<Decomposition> found;  // only filled when keep_found
  std::vector<u64> failures;         // n with no p <= P
  u64 max_p = 0;                     // largest p needed by a resolved n
};
// One squarefree sieve over [N - P^2, N + W - 4), then table lookups for every
// n in [N, N+W) with n != 1 mod 4.
ErdosWindow erdos_search_range(u64 N, u64 W = u64{1} << 31, u64 P = 43, bool keep_found = false);

struct ErdosScan {
  u64 lo = 0, hi = 0;
  u64 checked = 0;
  std::vector<u64> rejected;                      // failures at p <= P
  std::vector<std::pair<u64, u64>> escalated;     // (n, p) resolved with P < p <= p_max
  std::vector<u64> unresolved;
  u64 max_p = 0;
};
// Every n in [lo, hi] with n >= 10, n != 1 mod 4; windows of width W, then
// failures retried with primes up to p_max.
ErdosScan erdos_scan(u64 lo, u64 hi, u64 W = u64{1} << 24, u64 P = 43, u64 p_max = 200);

// ---- counting checks ----------------------------------------------------------

// Integers B in [(n-9)/(A^2 n), 1/A^2) plus integers B in [1, 1/A^2) with
// B = n - 1 mod 24.
u64 b_count(u64 n, double A);
double b_count_bound(double n, double A);  // 2 + 1/(24A^2) + 9/(A^2 n)

// 1.3841 log n / log log n, n >= 3
double robin_omega_bound(double n);

}  // namespace ntv
