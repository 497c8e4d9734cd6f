#include "qha/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace qha {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(key + ": cannot parse '" + text + "' as a number");
  }
  return value;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.truncation_degree < 0) throw ConfigError("truncation_degree must be >= 0");
  if (c.radial_order < 1) throw ConfigError("radial_order must be >= 1");
  if (c.angular_order < 1) throw ConfigError("angular_order must be >= 1");
  if (c.circle_order < 1) throw ConfigError("circle_order must be >= 1");
  if (!(c.cutoff > 0.0 && c.cutoff < 1.0)) throw ConfigError("cutoff must lie in (0, 1)");
  if (!(c.beta > 0.0 && c.beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
  if (c.r_grid.empty()) throw ConfigError("r_grid must be nonempty");
  for (std::size_t i = 0; i < c.r_grid.size(); ++i) {
    if (!(c.r_grid[i] >= 0.0 && c.r_grid[i] < 1.0)) throw ConfigError("r_grid values must lie in [0, 1)");
    if (i > 0 && !(c.r_grid[i] > c.r_grid[i - 1])) throw ConfigError("r_grid must be strictly increasing");
  }
  if (c.output_path.empty()) throw ConfigError("output_path must be nonempty");
}

std::vector<double> parse_r_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number<double>("r_grid", trim(item)));
  if (out.empty()) throw ConfigError("r_grid must be nonempty");
  return out;
}

RunConfig parse_config(std::istream& is) {
  RunConfig c;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": repeated key '" + key + "'");
    try {
      if (key == "truncation_degree") {
        c.truncation_degree = parse_number<int>(key, value);
      } else if (key == "radial_order") {
        c.radial_order = parse_number<int>(key, value);
      } else if (key == "angular_order") {
        c.angular_order = parse_number<int>(key, value);
      } else if (key == "circle_order") {
        c.circle_order = parse_number<int>(key, value);
      } else if (key == "cutoff") {
        c.cutoff = parse_number<double>(key, value);
      } else if (key == "beta") {
        c.beta = parse_number<double>(key, value);
      } else if (key == "r_grid") {
        c.r_grid = parse_r_grid(value);
      } else if (key == "seed") {
        c.seed = parse_number<std::uint64_t>(key, value);
      } else if (key == "output_path") {
        c.output_path = value;
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace qha
