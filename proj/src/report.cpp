#include "ntv/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include "json.hpp"
#include <ostream>

namespace ntv {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, double>) return format_real(x);
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else return std::to_string(x);
      },
      v);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

nlohmann::ordered_json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return format_real(x);
          // round-trip through 12 significant digits so dumps stay short and stable
          return std::strtod(format_real(x).c_str(), nullptr);
        } else {
          return x;
        }
      },
      v);
}

}  // namespace

void write_csv(const Report& r, std::ostream& out) {
  out << "key,value\n";
  out << "command," << csv_field(r.command) << '\n';
  for (const auto& [k, v] : r.summary) out << csv_field(k) << ',' << csv_field(format_value(v)) << '\n';
  if (r.columns.empty() || r.rows.empty()) return;
  out << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_field(r.columns[i]);
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(format_value(row[i]));
    out << '\n';
  }
}

void write_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) s[k] = to_json(v);
  j["summary"] = s;
  j["columns"] = r.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& v : row) a.push_back(to_json(v));
    rows.push_back(a);
  }
  j["rows"] = rows;
  out << j.dump(2) << '\n';
}

}  // namespace ntv
