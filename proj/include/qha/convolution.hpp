#pragma once

// Quantum harmonic analysis convolutions on the Bergman space:
//   (psi * a)(z) = int_G psi(g) a(g^{-1} z) dg          function * function
//   a * S        = int_G a(g.0) pi(g) S pi(g)^* dg      symbol * operator
//   psi * S      = int_G psi(g) pi(g) S pi(g)^* dg      group function * operator

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qha/bergman.hpp"
#include "qha/quadrature.hpp"

namespace qha {

/// A bounded function on G. integrable_bound, when present, is a declared bound on its L^1 norm.
struct GroupFunction {
  std::function<cplx(const GroupElement&)> evaluator;
  double sup_bound = 0.0;
  std::optional<double> integrable_bound;

  cplx operator()(const GroupElement& g) const { return evaluator(g); }

  static GroupFunction zero();
};

/// Radial profile scale * (1 - |g.0|^2 / radius^2)^power on |g.0| < radius, zero outside.
GroupFunction radial_bump(double radius, int power, cplx scale);

/// psi * a as a lazily evaluated symbol. Group nodes and psi values are sampled once;
/// sup_bound is the Young bound ||psi||_1 ||a||_inf with ||psi||_1 taken on the same nodes.
Symbol conv_fun_fun(const GroupFunction& psi, const Symbol& a, const GroupQuadrature& gq, double cutoff);

/// K-average of S over the circle nodes of gq: entries [m, l] times the circle mean of
/// e^{-2 i phi (m - l)}.
OperatorMatrix k_average(const OperatorMatrix& S, const GroupQuadrature& gq);

/// a * S computed as int_B a(z) Q_z S_K Q_z^* dz with Q_z = (1 - |z|^2)^{-1} P pi(tau_z) P
/// and S_K the K-average. The factor (1 - |z|^2)^2 carried by the two compressions of
/// pi(tau_z) cancels the density of d lambda analytically, so the integrand is bounded on
/// the whole disk and gq.base is used without a cutoff.
OperatorMatrix conv_symbol_op(const Symbol& a, const OperatorMatrix& S, const GroupQuadrature& gq);

/// P_out (psi * S) P_out, where S acts on its own (possibly larger) truncation and
/// `output` (default: the space of S) selects the compression of the result. Passing an
/// S truncated well above `output` keeps the compression error of pi(g) out of the result.
OperatorMatrix conv_groupfun_op(const GroupFunction& psi, const OperatorMatrix& S, const GroupQuadrature& gq,
                                double cutoff, std::optional<TruncatedSpace> output = std::nullopt);

/// L^p norm of psi over |g.0| < cutoff; p = infinity gives the maximum over nodes.
double group_lp_norm(const GroupFunction& psi, const GroupQuadrature& gq, double cutoff, double p);

/// L^p(d lambda) norm of a over |z| < cutoff; p = infinity gives the maximum over nodes.
double lambda_lp_norm(const Symbol& a, const DiskQuadrature& q, double cutoff, double p);

/// Maximum of |a| over the given points.
double sup_over(const Symbol& a, const std::vector<DiskPoint>& points);

/// Polar grid with `radii` rings from 0 to max_radius (the origin appears once) and
/// `angles` points per nonzero ring.
std::vector<DiskPoint> polar_grid(int radii, int angles, double max_radius);

/// Seeded generators used by the Young suite and by the acceptance tests.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

  /// sum_{p+q<=2} c_pq z^p conj(z)^q with |Re c|, |Im c| <= 1; sup_bound = sum |c_pq|.
  Symbol trig_symbol();
  /// trig_symbol() times (1 - |z|^2)^2, which lies in every L^q(d lambda).
  Symbol decaying_symbol();
  /// radial_bump with radius in [0.2, 0.45], power in {1, 2, 3}, |scale| in [0.5, 2].
  GroupFunction bump();
  /// lift_tau(z) embed(phi) with z uniform on |z| <= max_radius and phi uniform in [0, pi).
  GroupElement group_element(double max_radius);
  /// Dense matrix with entries uniform in the unit square.
  OperatorMatrix operator_matrix(TruncatedSpace space);

 private:
  double uniform(double lo, double hi);
  std::mt19937_64 rng_;
};

struct YoungRow {
  int sample = 0;
  std::string inequality;  // "classical_p1", "classical_p2", "classical_pinf", "qha_item1", "qha_item2"
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool violated = false;
};

struct YoungReport {
  std::vector<YoungRow> rows;
  int violations() const;
};

inline constexpr double kYoungRelativeSlack = 1e-6;

struct YoungOptions {
  int samples = 50;
  TruncatedSpace space{10};
  std::uint64_t seed = 42;
  GroupQuadrature gq{DiskQuadrature(24, 48), 8};
  double cutoff = 0.999;
  std::vector<DiskPoint> z_grid = polar_grid(6, 8, 0.9);
  /// When true, every sample uses zero functions and the zero operator.
  bool zero_inputs = false;
};

/// For each sample, draws (psi, a, S) and records both sides of
///   ||psi * a||_inf <= ||psi||_p ||a||_q  for p in {1, 2, inf},
///   ||psi * S|| <= ||psi||_1 ||S||,
///   ||psi * S|| <= ||psi||_inf ||S||_1.
/// A row is violated when lhs > rhs (1 + kYoungRelativeSlack).
YoungReport young_report(const YoungOptions& options);

}  // namespace qha
