#include "ntv/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>

#include "ntv/errors.hpp"

#ifndef NTV_DEFAULT_ZEROS
#define NTV_DEFAULT_ZEROS "tests/data/zeros_100k.txt"
#endif

namespace ntv {

ZeroTable::ZeroTable(std::vector<double> gammas, bool check_first) : gammas_(std::move(gammas)) {
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (!(gammas_[i] > 0.0) || !std::isfinite(gammas_[i])) {
      throw ValidationError("zero ordinate " + std::to_string(i + 1) + " is not a positive number");
    }
    if (i > 0 && gammas_[i] <= gammas_[i - 1]) {
      throw ValidationError("zero ordinates not strictly ascending at entry " + std::to_string(i + 1));
    }
  }
  if (check_first && !gammas_.empty() && std::abs(gammas_[0] - 14.1347) > 1e-4) {
    throw ValidationError("first zero ordinate is not 14.1347...");
  }
}

std::int64_t ZeroTable::count_between(double a, double b) const {
  if (b <= a) return 0;
  auto lo = std::upper_bound(gammas_.begin(), gammas_.end(), a);
  auto hi = std::upper_bound(gammas_.begin(), gammas_.end(), b);
  return hi - lo;
}

std::int64_t ZeroTable::count_below(double T) const {
  if (T > max_height()) {
    throw HorizonError("T = " + std::to_string(T) + " beyond zero table horizon " +
                       std::to_string(max_height()));
  }
  return std::upper_bound(gammas_.begin(), gammas_.end(), T) - gammas_.begin();
}

std::int64_t ZeroTable::window_count(double t) const {
  if (!(t > 50.0)) throw DomainError("window_count requires t > 50");
  if (t + 1.0 > max_height()) {
    throw HorizonError("window (t-1, t+1] exceeds zero table horizon " + std::to_string(max_height()));
  }
  return count_between(t - 1.0, t + 1.0);
}

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open zero table " + path);
  std::vector<double> g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v) || v <= 0.0) {
      throw ParseError("bad zero ordinate '" + tok + "'", lineno);
    }
    if (!g.empty() && v <= g.back()) throw ParseError("zero ordinates not strictly ascending", lineno);
    g.push_back(v);
  }
  if (g.empty()) throw ParseError("zero table is empty", lineno == 0 ? 1 : lineno);
  return ZeroTable(std::move(g));
}

std::string default_zero_table_path() {
  if (const char* env = std::getenv(kZeroTableEnv); env && *env) return env;
  return NTV_DEFAULT_ZEROS;
}

GridCheck check_counting_bound(const ZeroTable& z, double lo, double hi, double step) {
  if (!(lo > 15.0) || !(step > 0.0)) throw DomainError("counting bound grid needs T > 15, step > 0");
  if (hi > z.max_height()) throw HorizonError("counting bound grid beyond zero table horizon");
  GridCheck gc;
  gc.min_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0;; ++k) {
    const double T = lo + static_cast<double>(k) * step;
    if (T > hi) break;
    const double bound = T * std::log(T) / (2.0 * std::numbers::pi);
    const double margin = bound - static_cast<double>(z.count_below(T));
    ++gc.points;
    gc.min_margin = std::min(gc.min_margin, margin);
    if (!(margin > 0.0) && gc.violations++ == 0) gc.first_violation = T;
  }
  return gc;
}

GridCheck check_window_bound(const ZeroTable& z, double lo, double hi, double step) {
  if (!(lo >= 50.0) || !(step > 0.0)) throw DomainError("window grid needs t >= 50, step > 0");
  if (hi + 1.01 > z.max_height()) throw HorizonError("window grid beyond zero table horizon");
  GridCheck gc;
  gc.min_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0;; ++k) {
    const double t = lo + static_cast<double>(k) * step;
    if (t > hi) break;
    const double margin = std::log(t) - static_cast<double>(z.count_between(t - 1.0, t + 1.01));
    ++gc.points;
    gc.min_margin = std::min(gc.min_margin, margin);
    if (!(margin > 0.0) && gc.violations++ == 0) gc.first_violation = t;
  }
  return gc;
}

double inverse_square_tail(double H) {
  if (!(H > 2.0 * std::numbers::pi)) return std::numeric_limits<double>::infinity();
  // 2 * int_H^inf log(t/2pi) / (2 pi t^2) dt
  return (std::log(H / (2.0 * std::numbers::pi)) + 1.0) / (std::numbers::pi * H);
}

InverseSquareSum inverse_square_sum(const ZeroTable& z) {
  InverseSquareSum r;
  r.zeros_used = z.size();
  r.horizon = z.max_height();
  // smallest terms first
  long double acc = 0.0L;
  const auto& g = z.gammas();
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    const long double y = *it;
    acc += 1.0L / (0.25L + y * y);
  }
  r.partial = static_cast<double>(2.0L * acc);
  r.tail = z.empty() ? std::numeric_limits<double>::infinity() : inverse_square_tail(r.horizon);
  return r;
}

double inverse_square_target_stated() {
  return std::numbers::egamma - 2.0 + std::log(4.0 * std::numbers::pi);
}

double inverse_square_target_true() {
  return 2.0 + std::numbers::egamma - std::log(4.0 * std::numbers::pi);
}

}  // namespace ntv
