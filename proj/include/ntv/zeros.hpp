#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ntv {

// Ordinates 0 < gamma_1 < gamma_2 < ... of nontrivial zeta zeros, each taken
// on the critical line.
class ZeroTable {
 public:
  ZeroTable() = default;
  // Validates strict ascent and positivity. When check_first is set the first
  // ordinate must lie within 1e-4 of 14.1347.
  explicit ZeroTable(std::vector<double> gammas, bool check_first = true);

  const std::vector<double>& gammas() const { return gammas_; }
  std::size_t size() const { return gammas_.size(); }
  bool empty() const { return gammas_.empty(); }
  double max_height() const { return gammas_.empty() ? 0.0 : gammas_.back(); }

  // N(T) = #{gamma <= T}; HorizonError above max_height.
  std::int64_t count_below(double T) const;
  // #{gamma in (a, b]} without horizon checks
  std::int64_t count_between(double a, double b) const;
  // N(t+1) - N(t-1) for 50 < t <= max_height - 1
  std::int64_t window_count(double t) const;

 private:
  std::vector<double> gammas_;
};

ZeroTable load_zeros(const std::string& path);

// Environment variable naming the default zero table.
inline constexpr const char* kZeroTableEnv = "NTVERIFY_ZEROS";
// Path from the environment variable, else the copy shipped in tests/data.
std::string default_zero_table_path();

struct GridCheck {
  std::uint64_t points = 0;
  std::uint64_t violations = 0;
  double first_violation = 0.0;  // grid point, valid when violations > 0
  double min_margin = 0.0;       // min of (bound - value) over the grid
  bool ok() const { return violations == 0; }
};

// N(T) < T log T / (2 pi) at T = lo, lo+step, ..., <= hi.
GridCheck check_counting_bound(const ZeroTable& z, double lo, double hi, double step = 1.0);
// N(t + 1.01) - N(t - 1) < log t at t = lo + k*step <= hi.
GridCheck check_window_bound(const ZeroTable& z, double lo, double hi, double step = 0.01);

struct InverseSquareSum {
  double partial = 0.0;  // 2 * sum over loaded gamma of 1/(1/4 + gamma^2)
  double tail = 0.0;     // density estimate for gamma above the horizon
  double horizon = 0.0;
  std::size_t zeros_used = 0;
  double lower() const { return partial; }
  double upper() const { return partial + tail; }
  bool brackets(double v) const { return v >= lower() && v <= upper(); }
};

// Tail of 2 * sum_{gamma > H} 1/gamma^2 from the zero density log(t/2pi)/2pi.
double inverse_square_tail(double H);
InverseSquareSum inverse_square_sum(const ZeroTable& z);

// Reference constants for the full sum over all zeros.
double inverse_square_target_stated();  // Euler gamma - 2 + log(4 pi)
double inverse_square_target_true();    // 2 + Euler gamma - log(4 pi)

}  // namespace ntv
