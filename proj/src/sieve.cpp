#include "ntv/sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace ntv {

namespace {

constexpr std::array<std::uint8_t, 30> make_bit_of_residue() {
  std::array<std::uint8_t, 30> t{};
  for (auto& v : t) v = 0xFF;
  for (unsigned i = 0; i < 8; ++i) t[kWheelResidues[i]] = static_cast<std::uint8_t>(i);
  return t;
}
constexpr auto kBitOfResidue = make_bit_of_residue();

// bits whose residue is <= r
constexpr std::array<std::uint8_t, 30> make_low_mask() {
  std::array<std::uint8_t, 30> t{};
  for (unsigned r = 0; r < 30; ++r) {
    unsigned m = 0;
    for (unsigned i = 0; i < 8; ++i)
      if (kWheelResidues[i] <= r) m |= 1u << i;
    t[r] = static_cast<std::uint8_t>(m);
  }
  return t;
}
constexpr auto kLowMask = make_low_mask();

// kClearMask[p % 30][j]: mask clearing p*m for m = kWheelResidues[j] (mod 30)
constexpr std::array<std::array<std::uint8_t, 8>, 30> make_clear_mask() {
  std::array<std::array<std::uint8_t, 8>, 30> t{};
  for (unsigned c = 0; c < 30; ++c) {
    for (unsigned j = 0; j < 8; ++j) {
      const unsigned r = (c * kWheelResidues[j]) % 30;
      const unsigned b = kBitOfResidue[r];
      t[c][j] = b < 8 ? static_cast<std::uint8_t>(~(1u << b)) : 0xFF;
    }
  }
  return t;
}
constexpr auto kClearMask = make_clear_mask();

// multiples of 7, 11, 13, 17, 19 removed; period 7*11*13*17*19 bytes
constexpr std::uint32_t kPresievePrimes[5] = {7, 11, 13, 17, 19};
constexpr std::size_t kPresievePeriod = 7 * 11 * 13 * 17 * 19;

const std::vector<std::uint8_t>& presieve_pattern() {
  static const std::vector<std::uint8_t> pat = [] {
    // two periods back to back so any window of one period is contiguous
    std::vector<std::uint8_t> v(2 * kPresievePeriod, 0xFF);
    for (std::uint32_t p : kPresievePrimes) {
      for (unsigned j = 0; j < 8; ++j) {
        // first m = kWheelResidues[j] mod 30 with m >= 1, i.e. m = residue itself
        const u64 n = static_cast<u64>(p) * kWheelResidues[j];
        const std::uint8_t mask = kClearMask[p % 30][j];
        for (u64 b = n / 30; b < v.size(); b += p) v[b] &= mask;
      }
    }
    return v;
  }();
  return pat;
}

constexpr u64 kPresieveLimit = 19;

std::vector<std::uint32_t> sieving_primes(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit <= kPresieveLimit) return out;
  if (limit <= (u64{1} << 26)) {
    out = small_primes(static_cast<std::uint32_t>(limit));
  } else {
    SegmentSiever sv(2, limit);
    Segment seg;
    while (sv.next(seg)) seg.for_each_prime([&](u64 p) { out.push_back(static_cast<std::uint32_t>(p)); });
  }
  out.erase(out.begin(), std::upper_bound(out.begin(), out.end(), static_cast<std::uint32_t>(kPresieveLimit)));
  return out;
}

}  // namespace

struct SegmentSiever::SievingPrime {
  std::uint32_t p;
  std::uint32_t off[8];  // byte offsets relative to the current segment start
};

void check_sieve_range(u64 lo, u64 hi) {
  if (hi > kSieveRangeCap) {
    throw CapacityError("sieve range " + std::to_string(hi) + " exceeds cap " +
                        std::to_string(kSieveRangeCap));
  }
  (void)lo;
}

std::size_t segment_bytes_for(u64 segment_size) {
  const u64 s = std::max<u64>(segment_size, 240);
  return static_cast<std::size_t>((s + 239) / 240 * 8);
}

u64 segment_count(u64 lo, u64 hi, u64 segment_size) {
  if (lo > hi) return 0;
  const u64 nb = segment_bytes_for(segment_size);
  const u64 bytes = hi / 30 - lo / 30 + 1;
  return (bytes + nb - 1) / nb;
}

SegmentSiever::SegmentSiever(u64 lo, u64 hi, u64 segment_size)
    : lo_(std::max<u64>(lo, 2)), hi_(hi), nb_(segment_bytes_for(segment_size)) {
  check_sieve_range(lo, hi);
  cur_byte_ = lo_ / 30;
  end_byte_ = lo_ > hi_ ? cur_byte_ : hi_ / 30 + 1;
  if (lo_ > hi_) return;
  buf_.assign(nb_ / 8, 0);
  primes_ = sieving_primes(isqrt(hi_));
  active_.reserve(primes_.size());
}

SegmentSiever::~SegmentSiever() = default;

void SegmentSiever::activate_until(u64 seg_end_number) {
  const u64 seg_start_number = 30 * cur_byte_;
  while (next_inactive_ < primes_.size()) {
    const u64 p = primes_[next_inactive_];
    if (p * p > seg_end_number) break;
    SievingPrime sp{};
    sp.p = static_cast<std::uint32_t>(p);
    const u64 start = std::max(p * p, seg_start_number);
    const u64 m0 = (start + p - 1) / p;
    const unsigned m0r = static_cast<unsigned>(m0 % 30);
    for (unsigned j = 0; j < 8; ++j) {
      const u64 m = m0 + (kWheelResidues[j] + 30 - m0r) % 30;
      sp.off[j] = static_cast<std::uint32_t>(p * m / 30 - cur_byte_);
    }
    active_.push_back(sp);
    ++next_inactive_;
  }
}

bool SegmentSiever::next(Segment& out) {
  if (cur_byte_ >= end_byte_) return false;
  const std::size_t len = static_cast<std::size_t>(std::min<u64>(nb_, end_byte_ - cur_byte_));
  const std::size_t len_padded = (len + 7) / 8 * 8;
  auto* seg = reinterpret_cast<std::uint8_t*>(buf_.data());

  // presieve
  const auto& pat = presieve_pattern();
  {
    std::size_t done = 0;
    std::size_t phase = static_cast<std::size_t>(cur_byte_ % kPresievePeriod);
    while (done < len) {
      const std::size_t n = std::min(len - done, kPresievePeriod);
      std::memcpy(seg + done, pat.data() + phase, n);
      done += n;
      phase = (phase + n) % kPresievePeriod;
    }
  }
  std::memset(seg + len, 0, len_padded - len);
  if (cur_byte_ == 0) {
    seg[0] &= 0xFE;  // 1 is not prime
    for (std::uint32_t p : kPresievePrimes) {
      if (p / 30 < len) seg[p / 30] |= static_cast<std::uint8_t>(1u << kBitOfResidue[p % 30]);
    }
  }

  activate_until(30 * (cur_byte_ + len) - 1);
  const std::uint32_t nb = static_cast<std::uint32_t>(len);
  for (auto& sp : active_) {
    const std::uint32_t p = sp.p;
    const auto& mk = kClearMask[p % 30];
    for (unsigned j = 0; j < 8; ++j) {
      std::uint32_t o = sp.off[j];
      const std::uint8_t m = mk[j];
      for (; o < nb; o += p) seg[o] &= m;
      sp.off[j] = o - nb;
    }
  }

  // clip to [lo, hi]
  const u64 base = 30 * cur_byte_;
  if (lo_ > base) {
    const u64 r = lo_ - base;  // < 30 for the first segment
    if (r < 30) seg[0] &= static_cast<std::uint8_t>(~kLowMask[r - 1]);
  }
  if (cur_byte_ + len == end_byte_) {
    const u64 r = hi_ - 30 * (end_byte_ - 1);
    seg[len - 1] &= kLowMask[r];
  }

  out.lo_ = std::max(lo_, base);
  out.hi_ = std::min(hi_, base + 30 * len - 1);
  out.base_ = base;
  out.words_ = buf_.data();
  out.nwords_ = len_padded / 8;
  cur_byte_ += len;
  return true;
}

u64 Segment::count() const {
  u64 c = 0;
  for (std::size_t w = 0; w < nwords_; ++w) c += static_cast<u64>(std::popcount(words_[w]));
  for (u64 p : {u64{2}, u64{3}, u64{5}})
    if (p >= lo_ && p <= hi_) ++c;
  return c;
}

u64 Segment::count_upto(u64 x) const {
  if (x < lo_) return 0;
  if (x >= hi_) return count();
  u64 c = 0;
  for (u64 p : {u64{2}, u64{3}, u64{5}})
    if (p >= lo_ && p <= x) ++c;
  const u64 d = x - base_;
  const u64 byte = d / 30;
  const std::size_t wfull = static_cast<std::size_t>(byte / 8);
  for (std::size_t w = 0; w < wfull; ++w) c += static_cast<u64>(std::popcount(words_[w]));
  const unsigned sh = static_cast<unsigned>(8 * (byte % 8));
  std::uint64_t mask = (sh ? ((std::uint64_t{1} << sh) - 1) : 0) |
                       (static_cast<std::uint64_t>(kLowMask[d % 30]) << sh);
  c += static_cast<u64>(std::popcount(words_[wfull] & mask));
  return c;
}

void Segment::count_upto_many(const u64* xs, std::size_t n, u64* out) const {
  std::size_t w = 0;
  u64 acc = 0;  // primes >= 7 in words [0, w)
  for (std::size_t i = 0; i < n; ++i) {
    const u64 x = xs[i];
    if (x < lo_) {
      out[i] = 0;
      continue;
    }
    u64 c = 0;
    for (u64 p : {u64{2}, u64{3}, u64{5}})
      if (p >= lo_ && p <= x && p <= hi_) ++c;
    const u64 xc = x < hi_ ? x : hi_;
    const u64 d = xc - base_;
    const u64 byte = d / 30;
    const std::size_t wfull = static_cast<std::size_t>(byte / 8);
    for (; w < wfull; ++w) acc += static_cast<u64>(std::popcount(words_[w]));
    const unsigned sh = static_cast<unsigned>(8 * (byte % 8));
    const std::uint64_t mask = (sh ? ((std::uint64_t{1} << sh) - 1) : 0) |
                               (static_cast<std::uint64_t>(kLowMask[d % 30]) << sh);
    out[i] = c + acc + static_cast<u64>(std::popcount(words_[wfull] & mask));
  }
}

double pairwise_sum(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  std::vector<double> cur = v;
  while (cur.size() > 1) {
    std::vector<double> nxt((cur.size() + 1) / 2);
    for (std::size_t i = 0; i < cur.size() / 2; ++i) nxt[i] = cur[2 * i] + cur[2 * i + 1];
    if (cur.size() % 2) nxt.back() = cur.back();
    cur.swap(nxt);
  }
  return cur[0];
}

// ---- PrimeTable ----------------------------------------------------------------

PrimeTable::PrimeTable(u64 lo, u64 hi, SieveOptions opt) : lo_(lo), hi_(hi), opt_(opt) {
  if (lo < 2) throw DomainError("prime table lower end must be >= 2");
  if (lo > hi) throw DomainError("prime table requires lo <= hi");
  check_sieve_range(lo, hi);
}

const std::vector<u64>& PrimeTable::primes() const {
  if (!cache_) {
    auto v = std::make_shared<std::vector<u64>>();
    for_each_prime([&](u64 p) { v->push_back(p); });
    cache_ = v;
  }
  return *cache_;
}

u64 PrimeTable::count() const { return count_primes(lo_, hi_, opt_); }

bool PrimeTable::contains(u64 p) const {
  if (p < lo_ || p > hi_) throw DomainError("value outside prime table range");
  const auto& v = primes();
  return std::binary_search(v.begin(), v.end(), p);
}

PrimeTable sieve_primes(u64 lo, u64 hi, SieveOptions opt) { return PrimeTable(lo, hi, opt); }

// ---- counting functions ----------------------------------------------------------

namespace {
u64 floor_arg(double x) {
  if (!(x >= 0)) return 0;
  if (x >= static_cast<double>(kSieveRangeCap)) {
    throw CapacityError("argument exceeds sieve range cap");
  }
  return static_cast<u64>(std::floor(x));
}
}  // namespace

u64 count_primes(u64 lo, u64 hi, const SieveOptions& opt) {
  lo = std::max<u64>(lo, 2);
  if (lo > hi) return 0;
  auto parts = map_segments<u64>(lo, hi, opt, [](const Segment& s) { return s.count(); });
  u64 c = 0;
  for (u64 v : parts) c += v;
  return c;
}

u64 prime_pi(u64 x, const SieveOptions& opt) { return count_primes(2, x, opt); }
u64 prime_pi_real(double x, const SieveOptions& opt) { return prime_pi(floor_arg(x), opt); }

namespace {
double theta_int(u64 n, const SieveOptions& opt) {
  if (n < 2) return 0.0;
  auto parts = map_segments<double>(2, n, opt, [](const Segment& s) {
    double acc = 0.0;
    s.for_each_prime([&](u64 p) { acc += std::log(static_cast<double>(p)); });
    return acc;
  });
  return pairwise_sum(parts);
}
}  // namespace

double theta(double x, const SieveOptions& opt) { return theta_int(floor_arg(x), opt); }

double psi(double x, const SieveOptions& opt) {
  const u64 n = floor_arg(x);
  double total = 0.0;
  for (unsigned k = 1;; ++k) {
    const u64 r = iroot(n, k);
    if (r < 2) break;
    total += theta_int(r, opt);
  }
  return total;
}

double theta_progression(double x, u64 k, u64 l, const SieveOptions& opt) {
  if (k == 0 || l >= k) throw DomainError("theta_progression requires k >= 1 and 0 <= l < k");
  const u64 n = floor_arg(x);
  if (n < 2) return 0.0;
  auto parts = map_segments<double>(2, n, opt, [k, l](const Segment& s) {
    double acc = 0.0;
    s.for_each_prime([&](u64 p) {
      if (p % k == l) acc += std::log(static_cast<double>(p));
    });
    return acc;
  });
  return pairwise_sum(parts);
}

u64 pi_progression(double x, u64 k, u64 l, const SieveOptions& opt) {
  if (k == 0 || l >= k) throw DomainError("pi_progression requires k >= 1 and 0 <= l < k");
  const u64 n = floor_arg(x);
  if (n < 2) return 0;
  auto parts = map_segments<u64>(2, n, opt, [k, l](const Segment& s) {
    u64 c = 0;
    s.for_each_prime([&](u64 p) { c += (p % k == l); });
    return c;
  });
  u64 c = 0;
  for (u64 v : parts) c += v;
  return c;
}

double von_mangoldt(u64 n) {
  if (n < 2) return 0.0;
  u64 q = 0;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      q = d;
      break;
    }
  }
  if (q == 0) return std::log(static_cast<double>(n));
  u64 m = n;
  while (m % q == 0) m /= q;
  return m == 1 ? std::log(static_cast<double>(q)) : 0.0;
}

}  // namespace ntv
