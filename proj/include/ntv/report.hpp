#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace ntv {

using Value = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

// Key/value summary plus an optional table. Reals print with 12 significant digits.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, Value>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  template <class T>
  void add(std::string key, T v) {
    summary.emplace_back(std::move(key), to_value(v));
  }
  template <class T>
  static Value to_value(T v) {
    if constexpr (std::is_same_v<T, bool>) return Value(v);
    else if constexpr (std::is_floating_point_v<T>) return Value(static_cast<double>(v));
    else if constexpr (std::is_integral_v<T> && std::is_signed_v<T>) return Value(static_cast<std::int64_t>(v));
    else if constexpr (std::is_integral_v<T>) return Value(static_cast<std::uint64_t>(v));
    else return Value(std::string(v));
  }
};

std::string format_real(double v);  // %.12g, "inf"/"-inf"/"nan" for non-finite
std::string format_value(const Value& v);

// CSV: "key,value" lines, then a blank line, header and rows when the table is non-empty.
void write_csv(const Report& r, std::ostream& out);
// JSON object {command, summary, columns, rows}.
void write_json(const Report& r, std::ostream& out);

}  // namespace ntv
