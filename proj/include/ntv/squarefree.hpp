#pragma once

#include <cstdint>
#include <vector>

#include "ntv/arith.hpp"

namespace ntv {

// Squarefree flags over [window_lo, window_hi]; n = 0 is never squarefree.
class SquarefreeSieve {
 public:
  SquarefreeSieve(u64 lo, u64 hi);
  u64 window_lo() const { return lo_; }
  u64 window_hi() const { return hi_; }
  bool flag(u64 n) const;  // n must lie in the window
  // unchecked access for hot loops
  bool operator[](u64 n) const { return flags_[n - lo_] != 0; }
  u64 count() const;

 private:
  u64 lo_, hi_;
  std::vector<std::uint8_t> flags_;
};

SquarefreeSieve sieve_squarefree(u64 lo, u64 hi);

}  // namespace ntv
