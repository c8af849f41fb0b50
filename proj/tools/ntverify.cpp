#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ntv/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ntverify: explicit prime-distribution verifications"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI/TOML file with the same keys as the flags");

  unsigned threads = 0;
  std::string format = "csv";
  std::string output;
  app.add_option("--threads", threads, "worker threads (default: all cores)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "write the report here instead of stdout");

  struct Slot {
    std::string value;
    bool on = false;
    CLI::Option* opt = nullptr;
    bool is_switch = false;
  };
  std::map<std::string, std::map<std::string, Slot>> slots;
  for (const auto& name : ntv::cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    auto& mine = slots[name];
    for (const auto& spec : ntv::cli::params_for(name)) {
      Slot& s = mine[spec.name];
      s.is_switch = spec.is_switch;
      s.opt = spec.is_switch ? sub->add_flag("--" + spec.name, s.on, spec.help)
                             : sub->add_option("--" + spec.name, s.value, spec.help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  ntv::cli::RunConfig cfg;
  cfg.threads = threads;
  cfg.format = format == "json" ? ntv::cli::Format::json : ntv::cli::Format::csv;
  if (!output.empty()) cfg.output_path = output;
  for (CLI::App* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    for (auto& [key, s] : slots[cfg.subcommand]) {
      if (s.opt->count() == 0) continue;
      cfg.params[key] = s.is_switch ? (s.on ? "true" : "false") : s.value;
    }
  }
  return ntv::cli::run(cfg, std::cout, std::cerr);
}
