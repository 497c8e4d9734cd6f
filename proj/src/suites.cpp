#include "qha/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "qha/convolution.hpp"
#include "qha/representation.hpp"

namespace qha {

namespace {

constexpr int kGeometrySamples = 1000;
constexpr int kColumnSamples = 50;
constexpr int kOracleSamples = 5;
constexpr double kExactTolerance = 1e-12;

std::string format(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Short decimal form for check names.
std::string label(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Check equal(std::string name, double value, double reference, double tolerance) {
  return {std::move(name), value, reference, tolerance, Relation::equal};
}

Check at_most(std::string name, double value, double bound, double slack) {
  return {std::move(name), value, bound, slack, Relation::at_most};
}

SuiteResult finish(std::string name, std::vector<Check> checks) {
  SuiteResult result{std::move(name), std::move(checks), "", ""};
  result.csv = checks_csv(result.checks);
  return result;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::equal: return "eq";
    case Relation::at_most: return "le";
    case Relation::less: return "lt";
  }
  return "";
}

OperatorMatrix phi(TruncatedSpace space) {
  const SpaceVector one = SpaceVector::basis(space, 0);
  return rank_one(one, one);
}

}  // namespace

bool Check::pass() const {
  if (!std::isfinite(value)) return false;
  switch (relation) {
    case Relation::equal: return std::abs(value - reference) <= tolerance;
    case Relation::at_most: return value <= reference + tolerance;
    case Relation::less: return value < reference;
  }
  return false;
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

std::string checks_csv(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "check,value,reference,tolerance,relation,pass\n";
  for (const Check& c : checks) {
    os << c.name << ',' << format(c.value) << ',' << format(c.reference) << ',' << format(c.tolerance) << ','
       << relation_name(c.relation) << ',' << (c.pass() ? "true" : "false") << '\n';
  }
  return os.str();
}

std::vector<NamedSymbol> symbol_battery() {
  std::vector<NamedSymbol> out;
  out.push_back({"one", Symbol::constant(1.0)});
  out.push_back({"abs_w_squared", Symbol{[](DiskPoint z) { return cplx(z.norm()); }, 1.0}});
  out.push_back({"w", Symbol{[](DiskPoint z) { return z.value(); }, 1.0}});
  out.push_back({"conj_w", Symbol{[](DiskPoint z) { return std::conj(z.value()); }, 1.0}});
  out.push_back({"smoothed_indicator", Symbol{[](DiskPoint z) {
                                                const double d = 1.0 - std::norm(z.value() - 0.3) / 0.16;
                                                return cplx(d > 0.0 ? d * d * d : 0.0);
                                              },
                                              1.0}});
  return out;
}

SuiteResult run_identities(const RunConfig& config) {
  SampleGenerator gen(config.seed);
  const DiskPoint origin(0.0, 0.0);
  double multiplicativity = 0.0;
  double cocycle_zero = 0.0;
  double involution = 0.0;
  double absolute_value = 0.0;
  double round_trip = 0.0;
  for (int s = 0; s < kGeometrySamples; ++s) {
    const GroupElement g = gen.group_element(0.9);
    const GroupElement h = gen.group_element(0.9);
    const DiskPoint z = act(gen.group_element(0.9), origin);
    const cplx lhs = cocycle(g * h, z);
    const cplx rhs = cocycle(g, act(h, z)) * cocycle(h, z);
    multiplicativity = std::max(multiplicativity, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    cocycle_zero = std::max(cocycle_zero, std::abs(std::abs(cocycle(g, origin)) - (1.0 - act(g, origin).norm())));
    const cplx w = act(h, origin).value();
    involution = std::max(involution, std::abs(tau(w, tau(w, z.value())) - z.value()));
    absolute_value = std::max(absolute_value, abs_value_identity_check(g, h));
    const auto [p, k] = decompose(g);
    round_trip = std::max(round_trip, (lift_tau(p) * k.embed()).distance(g));
  }

  const TruncatedSpace space(config.truncation_degree);
  double column = 0.0;
  for (int s = 0; s < kColumnSamples; ++s) {
    const GroupElement g = gen.group_element(0.9);
    const SpaceVector lhs = pi_matrix(g, space).matrix.apply(SpaceVector::basis(space, 0));
    column = std::max(column, (lhs.coeffs() - pi_apply_one(g, space).coeffs()).norm());
  }

  const DiskQuadrature q = config.disk_quadrature();
  double oracle = 0.0;
  for (int s = 0; s < kOracleSamples; ++s) {
    const GroupElement g = gen.group_element(0.5);
    oracle = std::max(oracle, (pi_matrix(g, space).matrix - pi_matrix_quadrature(g, space, q).matrix).max_abs());
  }

  return finish("identities", {
                                  equal("cocycle_multiplicativity", multiplicativity, 0.0, kExactTolerance),
                                  equal("cocycle_zero", cocycle_zero, 0.0, kExactTolerance),
                                  equal("involution_round_trip", involution, 0.0, kExactTolerance),
                                  equal("absolute_value_identity", absolute_value, 0.0, kExactTolerance),
                                  equal("decompose_round_trip", round_trip, 0.0, kExactTolerance),
                                  equal("representation_column", column, 0.0, 1e-8),
                                  equal("pi_series_vs_quadrature", oracle, 0.0, 1e-8),
                              });
}

SuiteResult run_schur(const RunConfig& config) {
  const TruncatedSpace space(config.truncation_degree);
  const GroupQuadrature gq = config.group_quadrature();
  const SpaceVector e0 = SpaceVector::basis(space, 0);
  const SpaceVector e1 = SpaceVector::basis(space, std::min(1, space.degree()));
  const SchurEstimate d = schur_pairing(e0, e0, e0, e0, gq, config.cutoff);
  const SchurEstimate same = schur_pairing(e1, e0, e1, e0, gq, config.cutoff);
  const SchurEstimate cross = schur_pairing(e0, e1, e1, e0, gq, config.cutoff);
  const double cross_reference = space.degree() == 0 ? 1.0 : 0.0;
  return finish("schur", {
                             equal("formal_dimension_estimate", d.value().real(), 1.0, 1e-3),
                             equal("formal_dimension_imag", d.value().imag(), 0.0, 1e-3),
                             equal("formal_dimension_truncated", d.truncated.real(), config.cutoff * config.cutoff, 1e-3),
                             equal("formal_dimension_tail", d.tail.real(), 1.0 - config.cutoff * config.cutoff, 1e-3),
                             equal("pairing_e1_e0_e1_e0", std::abs(same.value() - 1.0), 0.0, 1e-3),
                             equal("pairing_e0_e1_e1_e0", std::abs(cross.value() - cross_reference), 0.0, 1e-3),
                         });
}

SuiteResult run_toeplitz_identity(const RunConfig& config) {
  const TruncatedSpace space(config.truncation_degree);
  const GroupQuadrature gq = config.group_quadrature();
  const OperatorMatrix Phi = phi(space);
  std::vector<Check> checks;
  double worst = 0.0;
  for (const NamedSymbol& s : symbol_battery()) {
    const double diff = (toeplitz_matrix(s.symbol, space, gq.base) - conv_symbol_op(s.symbol, Phi, gq)).max_abs();
    worst = std::max(worst, diff);
    checks.push_back(equal("toeplitz_vs_convolution_" + s.name, diff, 0.0, 1e-6));
  }
  checks.push_back(equal("toeplitz_vs_convolution_max", worst, 0.0, 1e-6));
  const double identity =
      (conv_symbol_op(Symbol::constant(1.0), Phi, gq) - OperatorMatrix::identity(space)).max_abs();
  checks.push_back(equal("constant_one_is_identity", identity, 0.0, 1e-6));
  return finish("toeplitz-identity", std::move(checks));
}

SuiteResult run_young(const RunConfig& config) {
  YoungOptions options;
  options.space = TruncatedSpace(config.truncation_degree);
  options.seed = config.seed;
  options.cutoff = config.cutoff;
  const YoungReport report = young_report(options);

  std::ostringstream os;
  os << "sample,inequality,lhs,rhs,slack,violated\n";
  for (const YoungRow& r : report.rows) {
    os << r.sample << ',' << r.inequality << ',' << format(r.lhs) << ',' << format(r.rhs) << ',' << format(r.slack)
       << ',' << (r.violated ? "true" : "false") << '\n';
  }
  SuiteResult result{"young", {at_most("young_violations", report.violations(), 0.0, 0.0)}, os.str(), ""};
  return result;
}

SuiteResult run_localization(const RunConfig& config) {
  const TruncatedSpace space(config.truncation_degree);
  const DiskQuadrature q = config.disk_quadrature();
  const OperatorMatrix S = toeplitz_matrix(symbol_battery()[1].symbol, space, q);
  std::vector<Check> checks;

  const LocalizationProfile profile =
      localization_profile(S, config.beta, config.r_grid, default_z_grid(), q);
  double increase = 0.0;
  double negative = 0.0;
  for (std::size_t i = 0; i < profile.r_grid.size(); ++i) {
    negative = std::max(negative, -std::min(profile.i_values[i], profile.i_adjoint_values[i]));
    if (i > 0) increase = std::max(increase, profile.i_values[i] - profile.i_values[i - 1]);
  }
  checks.push_back(at_most("i_functional_increase", increase, 0.0, 1e-9));
  checks.push_back(at_most("i_functional_negative_part", negative, 0.0, 0.0));

  const double r_mid = config.r_grid[config.r_grid.size() / 2];
  const OperatorMatrix whole = s_g(S, q, config.cutoff);
  const OperatorMatrix split =
      s_br_filtered(S, r_mid, q, config.cutoff) + s_complement_filtered(S, r_mid, q, config.cutoff);
  checks.push_back(equal("additivity", (whole - split).max_abs(), 0.0, 1e-10));

  const OperatorMatrix Phi = phi(space);
  double previous = 0.0;
  const double cutoffs[] = {0.99, 0.995, 0.999};
  for (int i = 0; i < 3; ++i) {
    const double err = op_norm(s_g(Phi, q, cutoffs[i]) - Phi);
    const std::string name = "reconstruction_cutoff_" + label(cutoffs[i]);
    checks.push_back(i == 0 ? at_most(name, err, 0.05, 0.0) : Check{name, err, previous, 0.0, Relation::less});
    previous = err;
  }

  for (double r : config.r_grid) {
    const auto [lhs, rhs] = finite_measure_check(S, r, q, config.cutoff);
    checks.push_back(at_most("finite_measure_r_" + label(r), lhs, rhs, 1e-12));
  }

  SampleGenerator gen(config.seed);
  const GroupQuadrature gq = config.group_quadrature();
  double worst = -1.0;
  for (int s = 0; s < 3; ++s) {
    const GroupElement g = gen.group_element(0.5);
    const GroupElement h = g * gen.group_element(0.1);
    const auto [lhs, rhs] = continuity_modulus_check(S, g, h, gq, config.cutoff);
    worst = std::max(worst, lhs - rhs);
  }
  checks.push_back(at_most("continuity_modulus_excess", worst, 0.0, 1e-5));
  return finish("localization", std::move(checks));
}

SuiteResult run_convergence(const RunConfig& config) {
  const TruncatedSpace space(config.truncation_degree);
  const DiskQuadrature q = config.disk_quadrature();
  const OperatorMatrix S = toeplitz_matrix(symbol_battery()[1].symbol, space, q);
  const LocalizationProfile profile =
      localization_profile(S, config.beta, config.r_grid, default_z_grid(), q);
  const ConvergenceTable table = convergence_experiment(S, profile, q, config.cutoff);

  std::vector<Check> checks;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string r = label(table[i].r);
    checks.push_back(at_most("bound_r_" + r, table[i].err_opnorm, table[i].bound, kConvergenceSlack));
    if (i > 0) {
      checks.push_back({"decrease_r_" + r, table[i].err_opnorm, table[i - 1].err_opnorm, 0.0, Relation::less});
    }
  }
  std::ostringstream os;
  write_csv(os, table);
  SuiteResult result{"convergence", std::move(checks), os.str(), convergence_svg(table)};
  return result;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "schur",        "toeplitz-identity",
                                              "young",      "localization", "convergence"};
  return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& config) {
  validate(config);
  if (name == "identities") return run_identities(config);
  if (name == "schur") return run_schur(config);
  if (name == "toeplitz-identity") return run_toeplitz_identity(config);
  if (name == "young") return run_young(config);
  if (name == "localization") return run_localization(config);
  if (name == "convergence") return run_convergence(config);
  throw InvalidParameter("unknown suite '" + name + "'");
}

std::string convergence_svg(const ConvergenceTable& table) {
  constexpr double width = 480.0;
  constexpr double height = 320.0;
  constexpr double margin = 48.0;
  constexpr double floor_value = 1e-16;

  double lo = 1.0;
  double hi = 1e-16;
  for (const ConvergenceRow& row : table) {
    for (double v : {row.err_opnorm, row.bound}) {
      const double c = std::max(v, floor_value);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  const double log_lo = std::floor(std::log10(std::min(lo, hi)));
  const double log_hi = std::max(std::ceil(std::log10(hi)), log_lo + 1.0);
  auto x_of = [&](double r) { return margin + r * (width - 2.0 * margin); };
  auto y_of = [&](double v) {
    const double t = (std::log10(std::max(v, floor_value)) - log_lo) / (log_hi - log_lo);
    return height - margin - t * (height - 2.0 * margin);
  };
  auto polyline = [&](auto value, const char* colour) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << "<polyline fill=\"none\" stroke=\"" << colour
       << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < table.size(); ++i) {
      os << (i ? " " : "") << x_of(table[i].r) << ',' << y_of(value(table[i]));
    }
    os << "\"/>\n";
    return os.str();
  };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
     << height - margin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
     << "\" stroke=\"black\"/>\n";
  for (int e = static_cast<int>(log_lo); e <= static_cast<int>(log_hi); ++e) {
    const double y = y_of(std::pow(10.0, e));
    os << "<text x=\"4\" y=\"" << y + 4.0 << "\" font-size=\"11\">1e" << e << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double r = 0.25 * k;
    os << "<text x=\"" << x_of(r) - 8.0 << "\" y=\"" << height - margin + 16.0 << "\" font-size=\"11\">"
       << std::setprecision(2) << r << "</text>\n";
  }
  os << "<text x=\"" << width / 2.0 << "\" y=\"" << height - 8.0 << "\" font-size=\"12\">r</text>\n";
  os << polyline([](const ConvergenceRow& row) { return row.err_opnorm; }, "#1f77b4");
  os << polyline([](const ConvergenceRow& row) { return row.bound; }, "#d62728");
  os << "<text x=\"" << width - margin - 120.0 << "\" y=\"" << margin << "\" font-size=\"12\" fill=\"#1f77b4\">"
     << "err_opnorm</text>\n";
  os << "<text x=\"" << width - margin - 120.0 << "\" y=\"" << margin + 16.0
     << "\" font-size=\"12\" fill=\"#d62728\">bound</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace qha
