// Experiment runner: executes the verification suites against a JSON
// config and writes one CSV and one JSON report per suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bergman/runner.hpp"

namespace {

using bergman::json;

json load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // translate the byte offset into a line/column diagnostic
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << path << ":" << line << ":" << col << ": " << e.what();
    throw std::runtime_error(msg.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bergman: desk-scale Cauchy-transform experiments on Bergman "
               "spaces (membership criteria, transforms, conformal catalogs)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "reports";
  std::uint64_t seed = 0;
  int levels = 0;
  int samples = 0;
  bool quiet = false;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_dir, "output directory for reports");
  app.add_option("--seed", seed, "override the config seed");
  app.add_option("--levels", levels, "override the exhaustion level count");
  app.add_option("--samples", samples, "override the boundary sample count");
  app.add_flag("--quiet", quiet, "suppress progress output");

  std::vector<CLI::App*> suite_cmds;
  for (const auto& name : bergman::cli::suite_names()) {
    suite_cmds.push_back(app.add_subcommand(name));
    suite_cmds.back()->fallthrough();
  }
  CLI::App* all_cmd = app.add_subcommand("all", "run every suite");
  all_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n"
              << app.help() << std::flush;
    return 2;
  }

  bergman::cli::RunConfig cfg;
  try {
    cfg = config_path.empty()
              ? bergman::cli::RunConfig::defaults()
              : bergman::cli::config_from_json(load_config_file(config_path));
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  for (int i = 1; i < argc; ++i) {  // only override when the flag was given
    const std::string arg = argv[i];
    if (arg == "--seed") cfg.seed = seed;
    if (arg == "--levels") cfg.levels = levels;
    if (arg == "--samples") cfg.samples = samples;
  }

  if (const char* env = std::getenv("BERGMAN_OUT_DIR"); env && *env)
    out_dir = env;

  std::vector<std::string> selected;
  if (all_cmd->parsed()) {
    selected = bergman::cli::suite_names();
  } else {
    for (std::size_t i = 0; i < suite_cmds.size(); ++i)
      if (suite_cmds[i]->parsed())
        selected.push_back(bergman::cli::suite_names()[i]);
  }

  bool all_pass = true;
  std::string first_failure;
  try {
    for (const auto& name : selected) {
      const bergman::cli::SuiteResult result =
          bergman::cli::run_suite(name, cfg);
      bergman::cli::write_reports(result, out_dir);
      if (!quiet)
        std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << name << " -> "
                  << out_dir << "/" << name << ".{csv,json}\n";
      if (!result.pass && first_failure.empty())
        first_failure = result.first_failure;
      all_pass = all_pass && result.pass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!all_pass) {
    std::cerr << "first failure: " << first_failure << "\n";
    return 1;
  }
  return 0;
}
