// Experiment runner: one subcommand per verification suite.
//
// Exit status: 0 when every check passes, 1 on a failed check, 2 on an invalid
// configuration or command line.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "qha/config.hpp"
#include "qha/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitContract = 1;
constexpr int kExitConfig = 2;

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qha::ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum harmonic analysis on the Bergman space: verification suites"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> degree;
  std::optional<double> beta;
  std::optional<std::string> r_grid;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output directory (overrides output_path)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--degree", degree, "truncation degree N");
  app.add_option("--beta", beta, "weak localization exponent in (0, 1)");
  app.add_option("--r-grid", r_grid, "comma-separated radii, strictly increasing in [0, 1)");

  for (const std::string& name : qha::suite_names()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  qha::RunConfig config;
  try {
    if (config_path) config = qha::load_config(*config_path);
    if (out_dir) config.output_path = *out_dir;
    if (seed) config.seed = *seed;
    if (degree) config.truncation_degree = *degree;
    if (beta) config.beta = *beta;
    if (r_grid) config.r_grid = qha::parse_r_grid(*r_grid);
    qha::validate(config);
    std::filesystem::create_directories(config.output_path);
  } catch (const std::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  qha::SuiteResult result;
  try {
    result = qha::run_suite(name, config);
  } catch (const std::exception& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return kExitContract;
  }

  const std::filesystem::path dir(config.output_path);
  try {
    write_file(dir / (name + ".csv"), result.csv);
    if (!result.svg.empty()) write_file(dir / (name + ".svg"), result.svg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }

  for (const qha::Check& c : result.checks) {
    std::cout << (c.pass() ? "PASS " : "FAIL ") << c.name << " value=" << c.value << " reference=" << c.reference
              << " tolerance=" << c.tolerance << '\n';
  }
  std::cout << name << ": " << (result.passed() ? "all checks passed" : "contract violation") << '\n';
  return result.passed() ? kExitPass : kExitContract;
}
