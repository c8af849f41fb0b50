#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ntv::cli {

enum class Format { csv, json };

struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> params;  // flag name without dashes -> value ("true" for switches)
  std::optional<std::string> output_path;
  Format format = Format::csv;
  unsigned threads = 0;  // 0: all available cores
};

const std::vector<std::string>& subcommands();

struct ParamSpec {
  std::string name;
  std::string help;
  bool is_switch = false;
};
// Parameters accepted by a subcommand; empty for unknown names.
const std::vector<ParamSpec>& params_for(const std::string& subcommand);

// Exit status: 0 verified or solved, 1 verification failure (witness in the
// report), 2 usage or input error (one line on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ntv::cli
