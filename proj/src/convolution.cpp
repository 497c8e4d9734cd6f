#include "qha/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include "qha/errors.hpp"
#include "qha/representation.hpp"

namespace qha {

namespace {

void check_finite(cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw IntegrationError(std::string("non-finite value in ") + what);
  }
}

// h(d) = sum_c weights[c] e^{-2 i phi_c d} for d in [-span, span], stored at index d + span.
std::vector<cplx> circle_harmonics(const std::vector<cplx>& weights, const GroupQuadrature& gq, int span) {
  std::vector<cplx> h(2 * span + 1, 0.0);
  for (int c = 0; c < gq.circle_order; ++c) {
    if (weights[c] == cplx(0.0)) continue;
    const double phi = gq.circle_angle(c);
    for (int d = -span; d <= span; ++d) h[d + span] += weights[c] * std::polar(1.0, -2.0 * phi * d);
  }
  return h;
}

Eigen::MatrixXcd modulate(const Eigen::MatrixXcd& S, const std::vector<cplx>& h, int span) {
  Eigen::MatrixXcd out(S.rows(), S.cols());
  for (Eigen::Index l = 0; l < S.cols(); ++l) {
    for (Eigen::Index m = 0; m < S.rows(); ++m) out(m, l) = S(m, l) * h[m - l + span];
  }
  return out;
}

}  // namespace

GroupFunction GroupFunction::zero() {
  return GroupFunction{[](const GroupElement&) { return cplx(0.0); }, 0.0, 0.0};
}

GroupFunction radial_bump(double radius, int power, cplx scale) {
  if (!(radius > 0.0 && radius < 1.0)) throw InvalidParameter("bump radius must lie in (0, 1)");
  if (power < 0) throw InvalidParameter("bump power must be non-negative");
  const double r2 = radius * radius;
  auto eval = [r2, power, scale](const GroupElement& g) -> cplx {
    // |g.0|^2 = |b|^2 / |a|^2
    const double t = std::norm(g.b()) / std::norm(g.a());
    if (t >= r2) return 0.0;
    return scale * std::pow(1.0 - t / r2, power);
  };
  // L^1 norm: int_0^{r^2} (1 - t/r^2)^power (1 - t)^{-2} dt, a smooth integrand on [0, r^2].
  const LineRule rule = gauss_legendre(64, 0.0, r2);
  double l1 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    l1 += rule.weights[i] * std::pow(1.0 - t / r2, power) / ((1.0 - t) * (1.0 - t));
  }
  return GroupFunction{eval, std::abs(scale), std::abs(scale) * l1};
}

Symbol conv_fun_fun(const GroupFunction& psi, const Symbol& a, const GroupQuadrature& gq, double cutoff) {
  struct Sampled {
    std::vector<GroupElement> inverses;
    std::vector<cplx> weights;
    Symbol a;
  };
  auto data = std::make_shared<Sampled>();
  data->a = a;
  double l1 = 0.0;
  for (const GroupNode& node : group_nodes(gq, cutoff)) {
    const cplx v = psi(node.element);
    check_finite(v, "group function");
    if (v == cplx(0.0)) continue;
    data->inverses.push_back(node.element.inverse());
    data->weights.push_back(node.weight * v);
    l1 += node.weight * std::abs(v);
  }
  auto eval = [data](DiskPoint z) -> cplx {
    cplx sum = 0.0;
    for (std::size_t n = 0; n < data->weights.size(); ++n) {
      sum += data->weights[n] * data->a(act(data->inverses[n], z));
    }
    return sum;
  };
  return Symbol{eval, l1 * a.sup_bound * (1.0 + 1e-12)};
}

OperatorMatrix k_average(const OperatorMatrix& S, const GroupQuadrature& gq) {
  if (gq.circle_order <= 0) throw InvalidParameter("circle order must be positive");
  const int span = S.space().degree();
  const std::vector<cplx> w(gq.circle_order, 1.0 / gq.circle_order);
  return OperatorMatrix(modulate(S.entries(), circle_harmonics(w, gq, span), span));
}

OperatorMatrix conv_symbol_op(const Symbol& a, const OperatorMatrix& S, const GroupQuadrature& gq) {
  const int dim = S.space().dim();
  const Eigen::MatrixXcd averaged = k_average(S, gq).entries();
  const DiskQuadrature& q = gq.base;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t n = 0; n < q.size(); ++n) {
    const DiskPoint z = q.nodes()[n];
    const cplx value = a(z);
    check_finite(value, "symbol");
    if (value == cplx(0.0)) continue;
    const Eigen::MatrixXcd block = pi_block(lift_tau(z), dim, dim) / (1.0 - z.norm());
    acc.noalias() += (q.weights()[n] * value) * (block * averaged * block.adjoint());
  }
  return OperatorMatrix(std::move(acc));
}

OperatorMatrix conv_groupfun_op(const GroupFunction& psi, const OperatorMatrix& S, const GroupQuadrature& gq,
                                double cutoff, std::optional<TruncatedSpace> output) {
  const TruncatedSpace out_space = output.value_or(S.space());
  if (out_space.dim() > S.space().dim()) {
    throw DimensionMismatch("conv_groupfun_op: output truncation exceeds that of S");
  }
  if (!(cutoff > 0.0 && cutoff < 1.0)) throw InvalidParameter("cutoff must lie in (0, 1)");
  if (gq.circle_order <= 0) throw InvalidParameter("circle order must be positive");

  const int in_dim = S.space().dim();
  const int out_dim = out_space.dim();
  const int span = in_dim - 1;
  const DiskQuadrature disk = gq.base.scaled(cutoff);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  std::vector<cplx> circle_weights(gq.circle_order);
  for (std::size_t n = 0; n < disk.size(); ++n) {
    const DiskPoint u = disk.nodes()[n];
    const GroupElement t = lift_tau(u);
    bool any = false;
    for (int c = 0; c < gq.circle_order; ++c) {
      const cplx v = psi(t * RotationElement{gq.circle_angle(c)}.embed());
      check_finite(v, "group function");
      circle_weights[c] = v / static_cast<double>(gq.circle_order);
      any = any || v != cplx(0.0);
    }
    if (!any) continue;
    const double lam = disk.weights()[n] / std::pow(1.0 - u.norm(), 2);
    const Eigen::MatrixXcd rotated = modulate(S.entries(), circle_harmonics(circle_weights, gq, span), span);
    const Eigen::MatrixXcd block = pi_block(t, out_dim, in_dim);
    acc.noalias() += lam * (block * rotated * block.adjoint());
  }
  return OperatorMatrix(std::move(acc));
}

double group_lp_norm(const GroupFunction& psi, const GroupQuadrature& gq, double cutoff, double p) {
  if (!(p >= 1.0)) throw InvalidParameter("L^p exponent must be >= 1");
  double acc = 0.0;
  for (const GroupNode& node : group_nodes(gq, cutoff)) {
    const double v = std::abs(psi(node.element));
    if (std::isinf(p)) {
      acc = std::max(acc, v);
    } else {
      acc += node.weight * std::pow(v, p);
    }
  }
  return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
}

double lambda_lp_norm(const Symbol& a, const DiskQuadrature& q, double cutoff, double p) {
  if (!(p >= 1.0)) throw InvalidParameter("L^p exponent must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const DiskPoint& z : q.scaled(cutoff).nodes()) m = std::max(m, std::abs(a(z)));
    return m;
  }
  const cplx integral = integrate_lambda([&](DiskPoint z) { return cplx(std::pow(std::abs(a(z)), p)); }, q, cutoff);
  return std::pow(integral.real(), 1.0 / p);
}

double sup_over(const Symbol& a, const std::vector<DiskPoint>& points) {
  double m = 0.0;
  for (const DiskPoint& z : points) m = std::max(m, std::abs(a(z)));
  return m;
}

std::vector<DiskPoint> polar_grid(int radii, int angles, double max_radius) {
  if (radii < 1 || angles < 1) throw InvalidParameter("polar grid needs at least one radius and angle");
  if (!(max_radius >= 0.0 && max_radius < 1.0)) throw InvalidParameter("polar grid radius must lie in [0, 1)");
  std::vector<DiskPoint> grid{DiskPoint(0.0, 0.0)};
  for (int k = 1; k < radii; ++k) {
    const double r = max_radius * k / (radii - 1);
    for (int j = 0; j < angles; ++j) grid.emplace_back(std::polar(r, 2.0 * std::numbers::pi * j / angles));
  }
  return grid;
}

double SampleGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Symbol SampleGenerator::trig_symbol() {
  struct Term {
    int p, q;
    cplx c;
  };
  std::vector<Term> terms;
  double bound = 0.0;
  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; p + q <= 2; ++q) {
      const cplx c(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      terms.push_back({p, q, c});
      bound += std::abs(c);
    }
  }
  auto eval = [terms](DiskPoint z) {
    const cplx w = z.value();
    const cplx wc = std::conj(w);
    cplx sum = 0.0;
    for (const Term& t : terms) sum += t.c * std::pow(w, t.p) * std::pow(wc, t.q);
    return sum;
  };
  return Symbol{eval, bound};
}

Symbol SampleGenerator::decaying_symbol() {
  Symbol base = trig_symbol();
  auto eval = [f = base.evaluator](DiskPoint z) {
    const double d = 1.0 - z.norm();
    return d * d * f(z);
  };
  return Symbol{eval, base.sup_bound};
}

GroupFunction SampleGenerator::bump() {
  const double radius = uniform(0.2, 0.45);
  const int power = 1 + static_cast<int>(std::floor(uniform(0.0, 3.0)));
  const double magnitude = uniform(0.5, 2.0);
  const double phase = uniform(0.0, 2.0 * std::numbers::pi);
  return radial_bump(radius, power, std::polar(magnitude, phase));
}

GroupElement SampleGenerator::group_element(double max_radius) {
  const double radius = max_radius * std::sqrt(uniform(0.0, 1.0));
  const double angle = uniform(0.0, 2.0 * std::numbers::pi);
  const double phi = uniform(0.0, std::numbers::pi);
  return lift_tau(DiskPoint(std::polar(radius, angle))) * RotationElement{phi}.embed();
}

OperatorMatrix SampleGenerator::operator_matrix(TruncatedSpace space) {
  Eigen::MatrixXcd m(space.dim(), space.dim());
  for (Eigen::Index l = 0; l < m.cols(); ++l) {
    for (Eigen::Index k = 0; k < m.rows(); ++k) m(k, l) = cplx(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
  }
  return OperatorMatrix(std::move(m));
}

int YoungReport::violations() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const YoungRow& r) { return r.violated; }));
}

YoungReport young_report(const YoungOptions& options) {
  YoungReport report;
  SampleGenerator gen(options.seed);
  const double inf = std::numeric_limits<double>::infinity();
  auto push = [&](int sample, const char* name, double lhs, double rhs) {
    report.rows.push_back(
        YoungRow{sample, name, lhs, rhs, rhs - lhs, lhs > rhs * (1.0 + kYoungRelativeSlack)});
  };
  for (int s = 0; s < options.samples; ++s) {
    GroupFunction psi = gen.bump();
    Symbol a = gen.trig_symbol();
    Symbol a_dec = gen.decaying_symbol();
    OperatorMatrix S = gen.operator_matrix(options.space);
    if (options.zero_inputs) {
      psi = GroupFunction::zero();
      a = Symbol::constant(0.0);
      a_dec = Symbol::constant(0.0);
      S = OperatorMatrix::zero(options.space);
    }
    const double psi1 = group_lp_norm(psi, options.gq, options.cutoff, 1.0);
    const double psi2 = group_lp_norm(psi, options.gq, options.cutoff, 2.0);
    const double psi_inf = group_lp_norm(psi, options.gq, options.cutoff, inf);

    const double conv_sup = sup_over(conv_fun_fun(psi, a, options.gq, options.cutoff), options.z_grid);
    push(s, "classical_p1", conv_sup, psi1 * a.sup_bound);

    const double dec_sup = sup_over(conv_fun_fun(psi, a_dec, options.gq, options.cutoff), options.z_grid);
    push(s, "classical_p2", dec_sup, psi2 * lambda_lp_norm(a_dec, options.gq.base, options.cutoff, 2.0));
    push(s, "classical_pinf", dec_sup, psi_inf * lambda_lp_norm(a_dec, options.gq.base, options.cutoff, 1.0));

    const double lhs_op = op_norm(conv_groupfun_op(psi, S, options.gq, options.cutoff));
    push(s, "qha_item1", lhs_op, psi1 * op_norm(S));
    push(s, "qha_item2", lhs_op, psi_inf * trace_norm(S));
  }
  return report;
}

}  // namespace qha
