#include "qha/localization.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "qha/errors.hpp"
#include "qha/representation.hpp"

namespace qha {

namespace {

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidParameter("radius r must lie in [0, 1)");
}

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidParameter("beta must lie in (0, 1)");
}

void check_cutoff(double cutoff) {
  if (!(cutoff > 0.0 && cutoff < 1.0)) throw InvalidParameter("cutoff must lie in (0, 1)");
}

// Rows are kernel_vector(w)^* for the given nodes, so (rows * v)[k] = <v, K_{w_k}> = p(w_k).
Eigen::MatrixXcd evaluation_rows(const std::vector<DiskPoint>& nodes, int dim) {
  Eigen::MatrixXcd rows(static_cast<Eigen::Index>(nodes.size()), dim);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    cplx p = 1.0;
    for (int m = 0; m < dim; ++m) {
      rows(static_cast<Eigen::Index>(k), m) = std::sqrt(static_cast<double>(m + 1)) * p;
      p *= nodes[k].value();
    }
  }
  return rows;
}

// Disk rule for int f(w) (1 - |w|^2)^{-beta} dw over the whole disk, via s = (1 - |w|^2)^{1 - beta}.
SubQuadrature graded_rule(const DiskQuadrature& q, double beta) {
  const LineRule s_rule = gauss_legendre(q.radial_order(), 0.0, 1.0);
  SubQuadrature out;
  const int angles = q.angular_order();
  for (std::size_t i = 0; i < s_rule.nodes.size(); ++i) {
    const double t = 1.0 - std::pow(s_rule.nodes[i], 1.0 / (1.0 - beta));
    const double w = s_rule.weights[i] / (1.0 - beta) / angles;
    for (int j = 0; j < angles; ++j) {
      out.nodes.emplace_back(std::polar(std::sqrt(t), q.angle(j)));
      out.weights.push_back(w);
    }
  }
  return out;
}

enum class InnerRegion { mapped, filtered_inside, filtered_outside, whole };

// sum_w weight K_w K_w^* over the inner region attached to the real point rho.
Eigen::MatrixXcd inner_gram(double rho, double r, const DiskQuadrature& q, InnerRegion region, int dim) {
  const DiskPoint z(rho, 0.0);
  SubQuadrature nodes;
  switch (region) {
    case InnerRegion::mapped: nodes = region_nodes(z, r, q, true); break;
    case InnerRegion::filtered_inside: nodes = filtered_inside_nodes(z, r, q); break;
    case InnerRegion::filtered_outside: nodes = region_nodes(z, r, q, false); break;
    case InnerRegion::whole: nodes = SubQuadrature{q.nodes(), q.weights()}; break;
  }
  if (nodes.nodes.empty()) return Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::MatrixXcd rows = evaluation_rows(nodes.nodes, dim);
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(nodes.weights.data(), nodes.weights.size());
  return rows.adjoint() * w.asDiagonal() * rows;
}

// int_{|z| < cutoff} M_z S K_z K_z^* dz with M_z the inner Gram matrix of the chosen region.
// The outer rule is rotation invariant, so M_z = U M_rho U^* with U = diag(e^{-i m theta}).
OperatorMatrix kernel_double_integral(const OperatorMatrix& S, double r, const DiskQuadrature& q, double cutoff,
                                      InnerRegion region) {
  check_radius(r);
  check_cutoff(cutoff);
  const int dim = S.space().dim();
  const DiskQuadrature outer = q.scaled(cutoff);
  const int angles = outer.angular_order();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < outer.radial_order(); ++i) {
    const double rho = outer.ring_radius(i);
    const Eigen::MatrixXcd gram = inner_gram(rho, r, q, region, dim);
    const double w = outer.ring_weight(i) / angles;
    for (int j = 0; j < angles; ++j) {
      const double theta = outer.angle(j);
      Eigen::VectorXcd phase(dim);
      for (int m = 0; m < dim; ++m) phase(m) = std::polar(1.0, -m * theta);
      const Eigen::VectorXcd kz = kernel_vector(DiskPoint(std::polar(rho, theta)), S.space()).coeffs();
      const Eigen::VectorXcd v = S.entries() * kz;
      const Eigen::VectorXcd y = phase.cwiseProduct(gram * phase.conjugate().cwiseProduct(v));
      acc.noalias() += w * y * kz.adjoint();
    }
  }
  return OperatorMatrix(std::move(acc));
}

}  // namespace

std::vector<DiskPoint> default_z_grid() { return polar_grid(12, 16, 0.95); }

double i_functional(const OperatorMatrix& S, double r, double beta, const std::vector<DiskPoint>& z_grid,
                    const DiskQuadrature& q) {
  check_radius(r);
  check_beta(beta);
  if (z_grid.empty()) throw InvalidParameter("z_grid must be nonempty");
  const int dim = S.space().dim();
  const SubQuadrature whole = graded_rule(q, beta);
  const Eigen::MatrixXcd whole_rows = evaluation_rows(whole.nodes, dim);

  double best = 0.0;
  for (const DiskPoint& z : z_grid) {
    const Eigen::VectorXcd v = S.entries() * kernel_vector(z, S.space()).coeffs();
    const Eigen::VectorXd whole_abs = (whole_rows * v).cwiseAbs();
    double total = 0.0;
    for (std::size_t k = 0; k < whole.weights.size(); ++k) total += whole.weights[k] * whole_abs(k);

    double inside = 0.0;
    const SubQuadrature local = region_nodes(z, r, q, true);
    if (!local.nodes.empty()) {
      const Eigen::VectorXd local_abs = (evaluation_rows(local.nodes, dim) * v).cwiseAbs();
      for (std::size_t k = 0; k < local.weights.size(); ++k) {
        inside += local.weights[k] * local_abs(k) * std::pow(1.0 - local.nodes[k].norm(), -beta);
      }
    }
    const double value = std::pow(1.0 - z.norm(), beta) * (total - inside);
    if (!std::isfinite(value)) throw IntegrationError("non-finite value in i_functional");
    best = std::max(best, value);
  }
  return best;
}

LocalizationProfile localization_profile(const OperatorMatrix& S, double beta, const std::vector<double>& r_grid,
                                         const std::vector<DiskPoint>& z_grid, const DiskQuadrature& q) {
  check_beta(beta);
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    check_radius(r_grid[i]);
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw InvalidParameter("r_grid must be strictly increasing");
  }
  LocalizationProfile p;
  p.beta = beta;
  p.r_grid = r_grid;
  const OperatorMatrix adj = S.adjoint();
  for (double r : r_grid) {
    p.i_values.push_back(i_functional(S, r, beta, z_grid, q));
    p.i_adjoint_values.push_back(i_functional(adj, r, beta, z_grid, q));
    p.bound_values.push_back(p.i_values.back() * p.i_adjoint_values.back());
  }
  return p;
}

OperatorMatrix s_br(const OperatorMatrix& S, double r, const DiskQuadrature& q, double cutoff) {
  return kernel_double_integral(S, r, q, cutoff, InnerRegion::mapped);
}

OperatorMatrix s_br_filtered(const OperatorMatrix& S, double r, const DiskQuadrature& q, double cutoff) {
  return kernel_double_integral(S, r, q, cutoff, InnerRegion::filtered_inside);
}

OperatorMatrix s_complement_filtered(const OperatorMatrix& S, double r, const DiskQuadrature& q, double cutoff) {
  return kernel_double_integral(S, r, q, cutoff, InnerRegion::filtered_outside);
}

OperatorMatrix s_g(const OperatorMatrix& S, const DiskQuadrature& q, double cutoff) {
  return kernel_double_integral(S, 0.0, q, cutoff, InnerRegion::whole);
}

OperatorMatrix s_br_via_convolutions(const OperatorMatrix& S, double r, const GroupQuadrature& gq, double cutoff,
                                     const DiskQuadrature& outer) {
  check_radius(r);
  check_cutoff(cutoff);
  const int dim = S.space().dim();
  if (r == 0.0) return OperatorMatrix::zero(S.space());

  const DiskQuadrature zq = outer.scaled(r);
  std::vector<cplx> zs;
  std::vector<double> zscale;  // lambda weight times (1 - |z|^2) from k_z
  for (std::size_t n = 0; n < zq.size(); ++n) {
    const DiskPoint z = zq.nodes()[n];
    zs.push_back(z.value());
    zscale.push_back(zq.weights()[n] / (1.0 - z.norm()));
  }

  const double s_norm = op_norm(S);
  const double limit = s_norm * (1.0 + 1e-9) + 1e-12;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd x(dim);
  Eigen::VectorXcd sum(dim);
  for (const GroupNode& node : group_nodes(gq, cutoff)) {
    const GroupElement& h = node.element;
    const Eigen::VectorXcd v = pi_apply_one(h, S.space()).coeffs();
    const Eigen::VectorXcd sv = S.entries() * v;
    const cplx a = h.a();
    const cplx b = h.b();
    sum.setZero();
    for (std::size_t n = 0; n < zs.size(); ++n) {
      // x = (1 - |z|^2) conj(j(h, z)) K_{h.z} = pi(h) k_z
      const cplx den = std::conj(b) * zs[n] + std::conj(a);
      const cplx image = (a * zs[n] + b) / den;
      const cplx factor = 1.0 / (std::conj(den) * std::conj(den));
      const cplx ci = std::conj(image);
      cplx p = factor;
      for (int m = 0; m < dim; ++m) {
        x(m) = std::sqrt(static_cast<double>(m + 1)) * p;
        p *= ci;
      }
      // a_{S,z}(h) = <S pi(h) 1, pi(h) k_z> (1 - |z|^2)-scaled below
      const cplx coeff = x.dot(sv) * (1.0 - std::norm(zs[n]));
      if (std::abs(coeff) > limit) {
        std::ostringstream os;
        os.precision(17);
        os << "|a_{S,z}(h)| = " << std::abs(coeff) << " exceeds ||S|| = " << s_norm;
        throw NumericalError(os.str());
      }
      sum.noalias() += (zscale[n] * coeff) * x;
    }
    acc.noalias() += node.weight * sum * v.adjoint();
  }
  return OperatorMatrix(std::move(acc));
}

std::pair<double, double> continuity_modulus_check(const OperatorMatrix& S, const GroupElement& g,
                                                   const GroupElement& h, const GroupQuadrature& gq, double cutoff) {
  const TruncatedSpace space = S.space();
  const int dim = space.dim();
  const auto nodes = group_nodes(gq, cutoff);

  // sum_x (y y^*) S (v v^*) with v = pi(x) 1 and y = P pi(x g) 1.
  std::vector<Eigen::VectorXcd> vs;
  for (const GroupNode& node : nodes) vs.push_back(pi_apply_one(node.element, space).coeffs());
  auto convolve = [&](const GroupElement& base) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      const Eigen::VectorXcd y = pi_apply_one(nodes[n].element * base, space).coeffs();
      const cplx coeff = nodes[n].weight * y.dot(S.entries() * vs[n]);
      acc.noalias() += coeff * y * vs[n].adjoint();
    }
    return acc;
  };
  const double lhs = op_norm(Eigen::MatrixXcd(convolve(g) - convolve(h)));

  const DiskPoint origin(0.0, 0.0);
  const cplx jg = cocycle(g, origin);
  const cplx jh = cocycle(h, origin);
  const cplx g0 = act(g, origin).value();
  const cplx h0 = act(h, origin).value();
  const cplx pairing = std::conj(jg) * jh / std::pow(1.0 - std::conj(g0) * h0, 2);
  const double dist = std::sqrt(std::max(0.0, 2.0 - 2.0 * pairing.real()));
  return {lhs, 2.0 * op_norm(S) * dist};
}

std::pair<double, double> finite_measure_check(const OperatorMatrix& S, double r, const DiskQuadrature& q,
                                               double cutoff) {
  return {op_norm(s_br(S, r, q, cutoff)), op_norm(S) * r * r / (1.0 - r * r)};
}

ConvergenceTable convergence_experiment(const OperatorMatrix& S, const LocalizationProfile& profile,
                                        const DiskQuadrature& q, double cutoff) {
  const std::size_t n = profile.r_grid.size();
  if (profile.i_values.size() != n || profile.i_adjoint_values.size() != n || profile.bound_values.size() != n) {
    throw InvalidParameter("localization profile is not populated");
  }
  ConvergenceTable table;
  for (std::size_t i = 0; i < n; ++i) {
    ConvergenceRow row;
    row.r = profile.r_grid[i];
    row.err_opnorm = op_norm(S - s_br(S, row.r, q, cutoff));
    row.i_s = profile.i_values[i];
    row.i_sstar = profile.i_adjoint_values[i];
    row.bound = profile.bound_values[i];
    row.bound_ok = row.err_opnorm <= row.bound + kConvergenceSlack;
    table.push_back(row);
  }
  return table;
}

void write_csv(std::ostream& os, const ConvergenceTable& table) {
  const auto old = os.precision(17);
  os << "r,err_opnorm,i_s,i_sstar,bound,bound_ok\n";
  for (const ConvergenceRow& row : table) {
    os << row.r << ',' << row.err_opnorm << ',' << row.i_s << ',' << row.i_sstar << ',' << row.bound << ','
       << (row.bound_ok ? "true" : "false") << '\n';
  }
  os.precision(old);
}

}  // namespace qha
