#include "ntv/arith.hpp"

#include <cmath>

namespace ntv {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {
// r^k <= n without overflow
bool pow_le(u64 r, unsigned k, u64 n) {
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= r;
    if (acc > n) return false;
  }
  return true;
}
}  // namespace

u64 iroot(u64 n, unsigned k) {
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  while (r > 0 && !pow_le(r, k, n)) --r;
  while (pow_le(r + 1, k, n)) ++r;
  return r;
}

bool is_square(u64 n) {
  u64 r = isqrt(n);
  return r * r == n;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this base set is deterministic below 3.3e24
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned omega(u64 n) { return static_cast<unsigned>(prime_factors(n).size()); }

u64 euler_phi(u64 n) {
  if (n == 0) return 0;
  u64 r = n;
  for (u64 p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

int mobius(u64 n) {
  if (n == 0) return 0;
  int sign = 1;
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

bool is_squarefree(u64 n) {
  if (n == 0) return false;
  const u64 c = iroot(n, 3);
  for (u64 q = 2; q <= c; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return false;
    }
  }
  return n == 1 || !is_square(n);
}

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> comp(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace ntv
