#pragma once

// Verification suites behind the experiment runner subcommands. Each suite is a
// pure function of the configuration and returns its checks together with the
// CSV (and, for convergence, SVG) text to be written.

#include <string>
#include <vector>

#include "qha/config.hpp"
#include "qha/localization.hpp"

namespace qha {

enum class Relation { equal, at_most, less };

struct Check {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::equal;

  /// equal: |value - reference| <= tolerance; at_most: value <= reference + tolerance;
  /// less: value < reference.
  bool pass() const;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  std::string csv;
  std::string svg;  // empty unless the suite emits a plot

  bool passed() const;
};

struct NamedSymbol {
  std::string name;
  Symbol symbol;
};

/// constant one, |w|^2, w, conj(w) and the smoothed indicator (1 - |w - 0.3|^2 / 0.16)_+^3.
std::vector<NamedSymbol> symbol_battery();

/// Header "check,value,reference,tolerance,relation,pass".
std::string checks_csv(const std::vector<Check>& checks);

/// Geometry and representation identities over seeded samples.
SuiteResult run_identities(const RunConfig& config);
/// Formal dimension and two Schur orthogonality pairings of basis vectors.
SuiteResult run_schur(const RunConfig& config);
/// T_a = a * Phi over the symbol battery, and T_1 = identity.
SuiteResult run_toeplitz_identity(const RunConfig& config);
/// Young inequalities over seeded samples; uses the reduced group rule of YoungOptions.
SuiteResult run_young(const RunConfig& config);
/// Localization profile invariants, additivity, reconstruction, finite-measure and continuity bounds.
SuiteResult run_localization(const RunConfig& config);
/// Convergence table for T_{|w|^2}: strictly decreasing error and the I_S I_{S^*} bound.
SuiteResult run_convergence(const RunConfig& config);

/// Runs the named suite. Throws InvalidParameter for an unknown name.
SuiteResult run_suite(const std::string& name, const RunConfig& config);

const std::vector<std::string>& suite_names();

/// Static SVG of err_opnorm and bound against r on a log scale.
std::string convergence_svg(const ConvergenceTable& table);

}  // namespace qha
