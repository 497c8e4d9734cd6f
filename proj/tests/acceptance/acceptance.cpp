// Acceptance suite: one PASS/FAIL line per criterion.
//
//   qha_acceptance            run all criteria
//   qha_acceptance --only N   run criterion N only
//
// Exit status is 0 iff every selected criterion passes.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qha/convolution.hpp"
#include "qha/localization.hpp"
#include "qha/representation.hpp"
#include "qha/suites.hpp"

using namespace qha;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

OperatorMatrix phi(TruncatedSpace space) {
  const SpaceVector one = SpaceVector::basis(space, 0);
  return rank_one(one, one);
}

Outcome formal_dimension() {
  const TruncatedSpace space(16);
  const SpaceVector one = SpaceVector::basis(space, 0);
  const SchurEstimate d = schur_pairing(one, one, one, one, GroupQuadrature{DiskQuadrature(), kDefaultCircleOrder}, 0.999);
  const double err = std::abs(d.value() - 1.0);
  return {err <= 1e-3, "d_pi=" + fmt(d.value().real()) + " (truncated " + fmt(d.truncated.real()) + ", tail " +
                           fmt(d.tail.real()) + ") |err|=" + fmt(err) + " tol=1e-3"};
}

Outcome toeplitz_as_convolution() {
  const TruncatedSpace space(12);
  const GroupQuadrature gq{DiskQuadrature(), kDefaultCircleOrder};
  const OperatorMatrix Phi = phi(space);
  double worst = 0.0;
  for (const NamedSymbol& s : symbol_battery()) {
    worst = std::max(worst, (toeplitz_matrix(s.symbol, space, gq.base) - conv_symbol_op(s.symbol, Phi, gq)).max_abs());
  }
  return {worst <= 1e-6, "max entrywise diff=" + fmt(worst) + " tol=1e-6"};
}

Outcome push_through() {
  // T_a is formed at degree 40 and the convolution compressed to degree 10, so the
  // compression of pi(g) does not enter. The group rule covers the support of psi.
  const TruncatedSpace out(10);
  const TruncatedSpace wide(40);
  const GroupQuadrature gq{DiskQuadrature(32, 64), 8};
  const DiskQuadrature tq(32, 64);
  const double cutoff = 0.5;
  SampleGenerator gen(kSeed);
  double worst = 0.0;
  for (int s = 0; s < 5; ++s) {
    const GroupFunction psi = gen.bump();
    const Symbol a = gen.trig_symbol();
    const OperatorMatrix lhs = conv_groupfun_op(psi, toeplitz_matrix(a, wide, tq), gq, cutoff, out);
    const OperatorMatrix rhs = toeplitz_matrix(conv_fun_fun(psi, a, gq, cutoff), out, tq);
    worst = std::max(worst, op_norm(lhs - rhs));
  }
  return {worst <= 1e-5, "max ||psi*T_a - T_{psi*a}||=" + fmt(worst) + " tol=1e-5"};
}

Outcome geometry_exactness() {
  SampleGenerator gen(kSeed);
  const DiskPoint origin(0.0, 0.0);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const GroupElement g = gen.group_element(0.9);
    const GroupElement h = gen.group_element(0.9);
    const DiskPoint z = act(gen.group_element(0.9), origin);
    const cplx rhs = cocycle(g, act(h, z)) * cocycle(h, z);
    worst = std::max(worst, std::abs(cocycle(g * h, z) - rhs) / std::max(1.0, std::abs(rhs)));
    worst = std::max(worst, std::abs(std::abs(cocycle(g, origin)) - (1.0 - act(g, origin).norm())));
    const cplx w = act(h, origin).value();
    worst = std::max(worst, std::abs(tau(w, tau(w, z.value())) - z.value()));
    worst = std::max(worst, abs_value_identity_check(g, h));
  }
  return {worst <= 1e-12, "max defect over 1000 samples=" + fmt(worst) + " tol=1e-12"};
}

Outcome representation_column() {
  const TruncatedSpace space(16);
  SampleGenerator gen(kSeed);
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const GroupElement g = gen.group_element(0.9);
    const Eigen::VectorXcd lhs = pi_matrix(g, space).matrix.entries().col(0);
    const DiskPoint origin(0.0, 0.0);
    const Eigen::VectorXcd rhs = std::conj(cocycle(g, origin)) * kernel_vector(act(g, origin), space).coeffs();
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return {worst <= 1e-8, "max column defect over 50 samples=" + fmt(worst) + " tol=1e-8"};
}

Outcome reconstruction() {
  const TruncatedSpace space(8);
  const OperatorMatrix S = phi(space);
  const DiskQuadrature q;
  std::vector<double> errs;
  for (double cutoff : {0.99, 0.995, 0.999}) errs.push_back(op_norm(s_g(S, q, cutoff) - S));
  const bool decreasing = errs[1] < errs[0] && errs[2] < errs[1];
  return {errs[1] <= 0.05 && decreasing, "err(0.99,0.995,0.999)=" + fmt(errs[0]) + "," + fmt(errs[1]) + "," +
                                             fmt(errs[2]) + " tol(0.995)=0.05"};
}

Outcome convergence_with_bound() {
  const TruncatedSpace space(8);
  const DiskQuadrature q;
  const std::vector<double> r_grid{0.5, 0.7, 0.9};
  const OperatorMatrix operators[] = {phi(space), toeplitz_matrix(symbol_battery()[1].symbol, space, q)};
  const char* names[] = {"Phi", "T_|w|^2"};
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 2; ++k) {
    const LocalizationProfile profile = localization_profile(operators[k], kDefaultBeta, r_grid, default_z_grid(), q);
    const ConvergenceTable table = convergence_experiment(operators[k], profile, q, 0.999);
    detail += std::string(k ? "; " : "") + names[k] + ":";
    for (std::size_t i = 0; i < table.size(); ++i) {
      ok = ok && table[i].bound_ok;
      if (i > 0) ok = ok && table[i].err_opnorm < table[i - 1].err_opnorm;
      detail += " r=" + fmt(table[i].r) + " err=" + fmt(table[i].err_opnorm) + " bound=" + fmt(table[i].bound);
    }
  }
  return {ok, detail};
}

Outcome dual_representation() {
  const TruncatedSpace space(8);
  const OperatorMatrix S = phi(space);
  const OperatorMatrix direct = s_br(S, 0.7, DiskQuadrature(), 0.999);
  const OperatorMatrix conv =
      s_br_via_convolutions(S, 0.7, GroupQuadrature{DiskQuadrature(), 2}, 0.999, DiskQuadrature(16, 64));
  const double diff = op_norm(direct - conv);
  return {diff <= 1e-4, "||s_br - s_br_via_convolutions||=" + fmt(diff) + " tol=1e-4"};
}

Outcome young() {
  const YoungReport report = young_report(YoungOptions{});
  return {report.violations() == 0,
          "violations=" + std::to_string(report.violations()) + " over " + std::to_string(report.rows.size()) + " rows"};
}

Outcome unitarity_decay() {
  SampleGenerator gen(kSeed);
  const TruncatedSpace small(8);
  const TruncatedSpace large(32);
  int decreased = 0;
  double worst_ratio = 0.0;
  double window_small = 0.0;
  double window_large = 0.0;
  for (int s = 0; s < 10; ++s) {
    const GroupElement g = gen.group_element(0.5);
    const double d8 = unitarity_defect(g, small);
    const double d32 = unitarity_defect(g, large);
    if (d32 < d8) ++decreased;
    worst_ratio = std::max(worst_ratio, d32 / d8);
    window_small = std::max(window_small, unitarity_defect_on_window(g, small, TruncatedSpace(4)));
    window_large = std::max(window_large, unitarity_defect_on_window(g, large, TruncatedSpace(4)));
  }
  return {decreased == 10, "defect(32)<defect(8) for " + std::to_string(decreased) +
                               "/10 samples, max defect(32)/defect(8)=" + fmt(worst_ratio) +
                               "; degree-4 window: " + fmt(window_small) + " -> " + fmt(window_large)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "formal dimension d_pi = 1", 30, formal_dimension},
      {2, "Toeplitz operator as convolution a * Phi", 60, toeplitz_as_convolution},
      {3, "push-through psi * T_a = T_{psi * a}", 120, push_through},
      {4, "cocycle and geometry identities", 5, geometry_exactness},
      {5, "representation column pi(g)1", 30, representation_column},
      {6, "reconstruction S_G -> S", 180, reconstruction},
      {7, "convergence of S_{B_r} with the I_S I_{S*} bound", 300, convergence_with_bound},
      {8, "S_{B_r} as an integral of convolutions", 300, dual_representation},
      {9, "Young inequalities", 120, young},
      {10, "unitarity defect decays with N", 60, unitarity_decay},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    all = all && pass;
    std::cout << "CRITERION " << c.id << ' ' << (pass ? "PASS" : "FAIL") << " [" << c.title << "] "
              << outcome.detail << " time=" << fmt(seconds) << "s budget=" << c.budget_seconds << "s"
              << (in_time ? "" : " (over budget)") << std::endl;
  }
  return all ? 0 : 1;
}
