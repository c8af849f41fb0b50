#pragma once

#include <cstdint>
#include <vector>

namespace ntv {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 isqrt(u64 n);
// floor(n^(1/k)) for k >= 1
u64 iroot(u64 n, unsigned k);
bool is_square(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
// Deterministic Miller-Rabin for all 64-bit n.
bool is_prime(u64 n);

// Distinct prime factors by trial division.
std::vector<u64> prime_factors(u64 n);
unsigned omega(u64 n);
u64 euler_phi(u64 n);
int mobius(u64 n);
// Squarefree test: trial division by q^2 for q up to cbrt(n), then a
// perfect-square check on what remains.
bool is_squarefree(u64 n);

// Simple Eratosthenes, for small limits only.
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

}  // namespace ntv
