#include "ntv/squarefree.hpp"

#include "ntv/errors.hpp"
#include "ntv/sieve.hpp"

namespace ntv {

SquarefreeSieve::SquarefreeSieve(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw DomainError("squarefree window requires lo <= hi");
  check_sieve_range(lo, hi);
  flags_.assign(hi - lo + 1, 1);
  if (lo == 0) flags_[0] = 0;
  const u64 r = isqrt(hi);
  auto cross = [&](u64 q) {
    const u64 q2 = q * q;
    u64 first = (lo + q2 - 1) / q2 * q2;
    if (first == 0) first = q2;
    for (u64 m = first; m <= hi; m += q2) flags_[m - lo] = 0;
  };
  if (r >= 2) {
    SegmentSiever sv(2, r);
    Segment seg;
    while (sv.next(seg)) seg.for_each_prime(cross);
  }
}

bool SquarefreeSieve::flag(u64 n) const {
  if (n < lo_ || n > hi_) throw DomainError("value outside squarefree window");
  return flags_[n - lo_] != 0;
}

u64 SquarefreeSieve::count() const {
  u64 c = 0;
  for (auto f : flags_) c += f;
  return c;
}

SquarefreeSieve sieve_squarefree(u64 lo, u64 hi) { return SquarefreeSieve(lo, hi); }

}  // namespace ntv
