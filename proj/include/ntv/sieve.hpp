#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <memory>
#include <thread>
#include <type_traits>
#include <vector>

#include "ntv/arith.hpp"
#include "ntv/errors.hpp"

namespace ntv {

// Largest hi accepted by the sieve. Sieving-prime state grows like pi(sqrt(hi)).
inline constexpr u64 kSieveRangeCap = 1000000000000000000ULL;

struct SieveOptions {
  u64 segment_size = u64{1} << 21;  // numbers per segment, rounded up to a multiple of 240
  unsigned threads = 1;
};

void check_sieve_range(u64 lo, u64 hi);

// ---- wheel-30 layout -------------------------------------------------------
// Byte i of a segment covers base + 30*i + r for r in kWheelResidues (bit 0..7).
inline constexpr std::uint8_t kWheelResidues[8] = {1, 7, 11, 13, 17, 19, 23, 29};

// One sieved block, valid until the producing siever advances.
class Segment {
 public:
  u64 lo() const { return lo_; }
  u64 hi() const { return hi_; }
  u64 count() const;
  // primes in [lo, min(x, hi)]
  u64 count_upto(u64 x) const;
  // out[i] = count_upto(xs[i]) for ascending xs, in one pass
  void count_upto_many(const u64* xs, std::size_t n, u64* out) const;

  template <class F>
  void for_each_prime(F&& f) const {
    for (u64 p : {u64{2}, u64{3}, u64{5}})
      if (p >= lo_ && p <= hi_) f(p);
    for (std::size_t w = 0; w < nwords_; ++w) {
      std::uint64_t bits = words_[w];
      const u64 wbase = base_ + 240 * static_cast<u64>(w);
      while (bits) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(bits));
        bits &= bits - 1;
        f(wbase + 30 * (b >> 3) + kWheelResidues[b & 7]);
      }
    }
  }

 private:
  friend class SegmentSiever;
  u64 lo_ = 0, hi_ = 0, base_ = 0;
  const std::uint64_t* words_ = nullptr;
  std::size_t nwords_ = 0;
};

// Sequential segmented sieve over [lo, hi]. Segment k starts at byte
// floor(lo/30) + k*segment_bytes, so segment boundaries depend only on lo and
// segment_size.
class SegmentSiever {
 public:
  SegmentSiever(u64 lo, u64 hi, u64 segment_size = SieveOptions{}.segment_size);
  ~SegmentSiever();
  SegmentSiever(const SegmentSiever&) = delete;
  SegmentSiever& operator=(const SegmentSiever&) = delete;

  bool next(Segment& out);
  std::size_t segment_bytes() const { return nb_; }

 private:
  struct SievingPrime;
  void activate_until(u64 seg_end_number);

  u64 lo_, hi_;
  u64 cur_byte_;  // global byte index of next segment
  u64 end_byte_;  // one past last byte
  std::size_t nb_;
  std::vector<std::uint64_t> buf_;
  std::vector<std::uint32_t> primes_;  // sieving primes > presieve limit, ascending
  std::vector<SievingPrime> active_;
  std::size_t next_inactive_ = 0;
};

// Bytes per segment for a requested segment size in numbers.
std::size_t segment_bytes_for(u64 segment_size);
// Number of segments SegmentSiever will produce for [lo, hi].
u64 segment_count(u64 lo, u64 hi, u64 segment_size);

// Runs map(const Segment&) -> T on every segment of [lo, hi], spreading whole
// segments over opt.threads workers. Results are returned in segment order.
template <class T, class Map>
std::vector<T> map_segments(u64 lo, u64 hi, const SieveOptions& opt, Map&& map) {
  check_sieve_range(lo, hi);
  if (lo > hi) return {};
  const u64 nseg = segment_count(lo, hi, opt.segment_size);
  const u64 nb = segment_bytes_for(opt.segment_size);
  std::vector<T> out(nseg);
  const unsigned nt = static_cast<unsigned>(std::max<u64>(1, std::min<u64>(opt.threads, nseg)));
  auto work = [&](u64 s_begin, u64 s_end) {
    if (s_begin >= s_end) return;
    const u64 b0 = lo / 30;
    const u64 clo = s_begin == 0 ? lo : 30 * (b0 + s_begin * nb);
    const u64 chi_raw = 30 * (b0 + s_end * nb) - 1;
    const u64 chi = chi_raw < hi ? chi_raw : hi;
    SegmentSiever sv(clo, chi, opt.segment_size);
    Segment seg;
    u64 idx = s_begin;
    while (sv.next(seg)) out[idx++] = map(seg);
  };
  if (nt == 1) {
    work(0, nseg);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) {
      pool.emplace_back(work, nseg * t / nt, nseg * (t + 1) / nt);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

// Pairwise (tree) sum; result depends only on the order of v.
double pairwise_sum(const std::vector<double>& v);

// ---- prime tables and Chebyshev functions ---------------------------------

class PrimeTable {
 public:
  PrimeTable(u64 lo, u64 hi, SieveOptions opt = {});
  u64 range_lo() const { return lo_; }
  u64 range_hi() const { return hi_; }
  u64 segment_size() const { return opt_.segment_size; }
  const std::vector<u64>& primes() const;  // materialized on first call
  u64 count() const;
  bool contains(u64 p) const;  // p must lie in [lo, hi]

  template <class F>
  void for_each_prime(F&& f) const {
    if (lo_ > hi_) return;
    SegmentSiever sv(lo_, hi_, opt_.segment_size);
    Segment seg;
    while (sv.next(seg)) seg.for_each_prime(f);
  }

 private:
  u64 lo_, hi_;
  SieveOptions opt_;
  mutable std::shared_ptr<std::vector<u64>> cache_;
};

PrimeTable sieve_primes(u64 lo, u64 hi, SieveOptions opt = {});

u64 count_primes(u64 lo, u64 hi, const SieveOptions& opt = {});
u64 prime_pi(u64 x, const SieveOptions& opt = {});
u64 prime_pi_real(double x, const SieveOptions& opt = {});
// pi(x) for any arithmetic x; real arguments are floored
template <class T>
  requires std::is_arithmetic_v<T>
u64 pi(T x, const SieveOptions& opt = {}) {
  if constexpr (std::is_integral_v<T>) {
    return x < 2 ? 0 : prime_pi(static_cast<u64>(x), opt);
  } else {
    return prime_pi_real(static_cast<double>(x), opt);
  }
}
double theta(double x, const SieveOptions& opt = {});
double psi(double x, const SieveOptions& opt = {});
// sum of log p over primes p <= x with p = l mod k
double theta_progression(double x, u64 k, u64 l, const SieveOptions& opt = {});
u64 pi_progression(double x, u64 k, u64 l, const SieveOptions& opt = {});

// Lambda(n): log p if n = p^j, else 0.
double von_mangoldt(u64 n);

}  // namespace ntv
