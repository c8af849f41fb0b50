#include "ntv/checkpoints.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ntv/errors.hpp"

namespace ntv {

CheckpointTable::CheckpointTable(std::vector<std::pair<u64, u64>> entries, SpacingPlan plan)
    : entries_(std::move(entries)), plan_(std::move(plan)) {
  if (entries_.empty()) throw ValidationError("checkpoint table is empty");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    const auto& [x0, p0] = entries_[i - 1];
    const auto& [x1, p1] = entries_[i];
    if (x1 <= x0) {
      throw ValidationError("checkpoint x not strictly ascending at entry " + std::to_string(i + 1));
    }
    if (p1 < p0) throw ValidationError("checkpoint pi decreases at entry " + std::to_string(i + 1));
    if (p1 - p0 > x1 - x0) {
      throw ValidationError("checkpoint pi increment exceeds x increment at entry " +
                            std::to_string(i + 1));
    }
  }
}

u64 CheckpointTable::min_x() const { return entries_.front().first; }
u64 CheckpointTable::max_x() const { return entries_.back().first; }
bool CheckpointTable::covers(u64 x) const { return x >= min_x() && x <= max_x(); }

PiBounds CheckpointTable::pi_bounds(u64 x) const {
  if (!covers(x)) {
    throw CoverageError("x = " + std::to_string(x) + " outside checkpoint coverage [" +
                        std::to_string(min_x()) + ", " + std::to_string(max_x()) + "]");
  }
  auto it = std::upper_bound(entries_.begin(), entries_.end(), x,
                             [](u64 v, const std::pair<u64, u64>& e) { return v < e.first; });
  const auto& left = *(it - 1);
  if (left.first == x) return {left.second, left.second};
  const auto& right = *it;
  return {left.second, std::min(right.second, left.second + (x - left.first))};
}

void CheckpointTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << "x,pi\n";
  for (const auto& [x, p] : entries_) out << x << ',' << p << '\n';
  if (!out) throw Error("write failed for " + path);
}

void validate_plan(const SpacingPlan& plan) {
  if (plan.empty()) throw ValidationError("empty spacing plan");
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& b = plan[i];
    if (b.spacing == 0) throw ValidationError("plan band has zero spacing");
    if (b.to <= b.from) throw ValidationError("plan band is empty or descending");
    if ((b.to - b.from) % b.spacing != 0) {
      throw ValidationError("plan spacing " + std::to_string(b.spacing) +
                            " does not divide band length");
    }
    if (i > 0 && plan[i - 1].to != b.from) throw ValidationError("plan bands are not contiguous");
  }
}

std::vector<u64> plan_points(const SpacingPlan& plan) {
  validate_plan(plan);
  std::vector<u64> xs;
  for (const auto& b : plan) {
    for (u64 x = b.from; x <= b.to; x += b.spacing) {
      if (xs.empty() || xs.back() < x) xs.push_back(x);
    }
  }
  return xs;
}

std::vector<u64> pi_at_points(const std::vector<u64>& xs, const SieveOptions& opt) {
  if (!std::is_sorted(xs.begin(), xs.end())) throw DomainError("points must be ascending");
  std::vector<u64> out(xs.size(), 0);
  if (xs.empty() || xs.back() < 2) return out;
  struct Part {
    u64 total = 0;
    std::size_t first = 0;
    std::vector<u64> local;
  };
  auto parts = map_segments<Part>(2, xs.back(), opt, [&](const Segment& s) {
    Part part;
    part.total = s.count();
    auto b = std::lower_bound(xs.begin(), xs.end(), s.lo());
    auto e = std::upper_bound(b, xs.end(), s.hi());
    part.first = static_cast<std::size_t>(b - xs.begin());
    part.local.resize(static_cast<std::size_t>(e - b));
    s.count_upto_many(xs.data() + part.first, part.local.size(), part.local.data());
    return part;
  });
  u64 before = 0;
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.local.size(); ++i) out[part.first + i] = before + part.local[i];
    before += part.total;
  }
  return out;
}

CheckpointTable build_checkpoints(const SpacingPlan& plan, const SieveOptions& opt) {
  const auto xs = plan_points(plan);
  const auto ps = pi_at_points(xs, opt);
  std::vector<std::pair<u64, u64>> entries(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) entries[i] = {xs[i], ps[i]};
  return CheckpointTable(std::move(entries), plan);
}

namespace {
bool parse_u64(std::string_view s, u64& v) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}
}  // namespace

CheckpointTable load_checkpoints(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open checkpoint file " + path);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<u64, u64>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line != "x,pi") throw ParseError("expected header 'x,pi'", lineno);
      continue;
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    u64 x = 0, p = 0;
    if (comma == std::string::npos || !parse_u64(std::string_view(line).substr(0, comma), x) ||
        !parse_u64(std::string_view(line).substr(comma + 1), p)) {
      throw ParseError("malformed checkpoint row '" + line + "'", lineno);
    }
    entries.emplace_back(x, p);
  }
  if (lineno == 0) throw ParseError("empty checkpoint file", 1);
  return CheckpointTable(std::move(entries));
}

}  // namespace ntv
