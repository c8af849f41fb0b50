#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ntv/arith.hpp"
#include "ntv/sieve.hpp"

namespace ntv {

struct SpacingBand {
  u64 from, to, spacing;
};
using SpacingPlan = std::vector<SpacingBand>;

struct PiBounds {
  u64 lo, hi;
  bool exact() const { return lo == hi; }
};

// Sorted (x, pi(x)) pairs. x strictly ascending, pi non-decreasing,
// pi(x_{i+1}) - pi(x_i) <= x_{i+1} - x_i.
class CheckpointTable {
 public:
  CheckpointTable() = default;
  CheckpointTable(std::vector<std::pair<u64, u64>> entries, SpacingPlan plan = {});

  const std::vector<std::pair<u64, u64>>& entries() const { return entries_; }
  const SpacingPlan& plan() const { return plan_; }
  std::size_t size() const { return entries_.size(); }
  u64 min_x() const;
  u64 max_x() const;
  bool covers(u64 x) const;

  // Bracket for pi(x) from the neighbouring checkpoints. Throws CoverageError
  // outside [min_x, max_x].
  PiBounds pi_bounds(u64 x) const;

  void save(const std::string& path) const;

 private:
  std::vector<std::pair<u64, u64>> entries_;
  SpacingPlan plan_;
};

void validate_plan(const SpacingPlan& plan);
// Grid points of a plan, ascending and de-duplicated at band joints.
std::vector<u64> plan_points(const SpacingPlan& plan);
// Exact pi at arbitrary ascending points via one streaming sieve pass.
std::vector<u64> pi_at_points(const std::vector<u64>& xs, const SieveOptions& opt = {});

CheckpointTable build_checkpoints(const SpacingPlan& plan, const SieveOptions& opt = {});
CheckpointTable load_checkpoints(const std::string& path);

}  // namespace ntv
