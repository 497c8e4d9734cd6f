#pragma once

// Run configuration for the experiment runner.
//
// Grammar: one `key = value` pair per line; blank lines and lines starting
// with '#' are ignored; trailing '# ...' comments are stripped. Keys:
//   truncation_degree  integer >= 0            (default 16)
//   radial_order       integer >= 1            (default 64)
//   angular_order      integer >= 1            (default 128)
//   circle_order       integer >= 1            (default 32)
//   cutoff             real in (0, 1)          (default 0.999)
//   beta               real in (0, 1)          (default 0.5)
//   r_grid             comma-separated reals, strictly increasing in [0, 1)
//                                              (default 0.5,0.7,0.9)
//   seed               integer >= 0            (default 42)
//   output_path        directory               (default .)

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qha/errors.hpp"
#include "qha/quadrature.hpp"

namespace qha {

class ConfigError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

struct RunConfig {
  int truncation_degree = 16;
  int radial_order = kDefaultRadialOrder;
  int angular_order = kDefaultAngularOrder;
  int circle_order = kDefaultCircleOrder;
  double cutoff = 0.999;
  double beta = 0.5;
  std::vector<double> r_grid{0.5, 0.7, 0.9};
  std::uint64_t seed = 42;
  std::string output_path = ".";

  DiskQuadrature disk_quadrature() const { return {radial_order, angular_order}; }
  GroupQuadrature group_quadrature() const { return {disk_quadrature(), circle_order}; }
};

/// Throws ConfigError naming the offending field.
void validate(const RunConfig& config);

/// Parses "a,b,c". Throws ConfigError on malformed numbers or an empty list.
std::vector<double> parse_r_grid(const std::string& text);

/// Parses and validates; unspecified keys keep their defaults. Throws ConfigError with
/// the line number on syntax errors, unknown or repeated keys and range violations.
RunConfig parse_config(std::istream& is);

/// Throws ConfigError if the file cannot be opened.
RunConfig load_config(const std::string& path);

}  // namespace qha
