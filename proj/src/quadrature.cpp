#include "qha/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "qha/errors.hpp"

namespace qha {

namespace {

void check_finite(cplx value, DiskPoint where) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite integrand value at node " << where.value();
    throw IntegrationError(os.str());
  }
}

void check_cutoff(double cutoff) {
  if (!(cutoff > 0.0 && cutoff < 1.0)) {
    std::ostringstream os;
    os << "cutoff radius " << cutoff << " must lie in (0, 1)";
    throw InvalidParameter(os.str());
  }
}

}  // namespace

LineRule gauss_legendre(int order, double lo, double hi) {
  if (order <= 0) throw InvalidParameter("Gauss-Legendre order must be positive");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(order)),
      &gsl_integration_glfixed_table_free);
  if (!table) throw NumericalError("failed to allocate Gauss-Legendre table");

  LineRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    gsl_integration_glfixed_point(lo, hi, static_cast<std::size_t>(i), &rule.nodes[i], &rule.weights[i],
                                  table.get());
  }
  // GSL does not promise an ordering; sort so node layout is canonical.
  std::vector<int> idx(order);
  for (int i = 0; i < order; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return rule.nodes[x] < rule.nodes[y]; });
  LineRule sorted;
  for (int i : idx) {
    sorted.nodes.push_back(rule.nodes[i]);
    sorted.weights.push_back(rule.weights[i]);
  }
  return sorted;
}

DiskQuadrature::DiskQuadrature(int radial_order, int angular_order, double radius)
    : radial_order_(radial_order), angular_order_(angular_order), radius_(radius) {
  if (radial_order <= 0 || angular_order <= 0) {
    throw InvalidParameter("quadrature orders must be positive");
  }
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw InvalidParameter("quadrature radius must lie in (0, 1]");
  }
  const LineRule t_rule = gauss_legendre(radial_order, 0.0, radius * radius);
  nodes_.reserve(static_cast<std::size_t>(radial_order) * angular_order);
  weights_.reserve(nodes_.capacity());
  for (int i = 0; i < radial_order; ++i) {
    const double r = std::sqrt(t_rule.nodes[i]);
    ring_radius_.push_back(r);
    ring_weight_.push_back(t_rule.weights[i]);
    const double w = t_rule.weights[i] / angular_order;
    for (int j = 0; j < angular_order; ++j) {
      nodes_.emplace_back(std::polar(r, angle(j)));
      weights_.push_back(w);
    }
  }
}

double DiskQuadrature::angle(int j) const { return 2.0 * std::numbers::pi * j / angular_order_; }

double GroupQuadrature::circle_angle(int c) const { return std::numbers::pi * c / circle_order; }

std::vector<GroupNode> group_nodes(const GroupQuadrature& gq, double cutoff) {
  check_cutoff(cutoff);
  if (gq.circle_order <= 0) throw InvalidParameter("circle order must be positive");
  const DiskQuadrature disk = gq.base.scaled(cutoff);
  std::vector<GroupNode> out;
  out.reserve(disk.size() * gq.circle_order);
  for (std::size_t n = 0; n < disk.size(); ++n) {
    const DiskPoint z = disk.nodes()[n];
    const double lam = disk.weights()[n] / std::pow(1.0 - z.norm(), 2) / gq.circle_order;
    const GroupElement t = lift_tau(z);
    for (int c = 0; c < gq.circle_order; ++c) {
      const RotationElement k{gq.circle_angle(c)};
      out.push_back(GroupNode{t * k.embed(), z, k, lam});
    }
  }
  return out;
}

double SubQuadrature::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

cplx integrate_disk(const DiskFunction& f, const DiskQuadrature& q) {
  cplx sum = 0.0;
  for (std::size_t n = 0; n < q.size(); ++n) {
    const cplx v = f(q.nodes()[n]);
    check_finite(v, q.nodes()[n]);
    sum += q.weights()[n] * v;
  }
  return sum;
}

cplx integrate_lambda(const DiskFunction& f, const DiskQuadrature& q, double cutoff_radius) {
  check_cutoff(cutoff_radius);
  const DiskQuadrature scaled = q.scaled(cutoff_radius);
  cplx sum = 0.0;
  for (std::size_t n = 0; n < scaled.size(); ++n) {
    const DiskPoint z = scaled.nodes()[n];
    const cplx v = f(z);
    check_finite(v, z);
    sum += scaled.weights()[n] / std::pow(1.0 - z.norm(), 2) * v;
  }
  return sum;
}

cplx integrate_group(const GroupFunctionEvaluator& F, const GroupQuadrature& gq, double cutoff_radius) {
  cplx sum = 0.0;
  for (const GroupNode& node : group_nodes(gq, cutoff_radius)) {
    const cplx v = F(node.element);
    check_finite(v, node.point);
    sum += node.weight * v;
  }
  return sum;
}

SubQuadrature region_nodes(DiskPoint z, double r, const DiskQuadrature& q, bool inside) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidParameter("region radius must lie in [0, 1)");
  SubQuadrature out;
  if (inside) {
    if (r == 0.0) return out;
    const DiskQuadrature local = q.scaled(r);
    const double scale = std::pow(1.0 - z.norm(), 2);
    out.nodes.reserve(local.size());
    out.weights.reserve(local.size());
    for (std::size_t n = 0; n < local.size(); ++n) {
      const cplx u = local.nodes()[n].value();
      const double den = std::norm(1.0 - std::conj(z.value()) * u);
      out.nodes.emplace_back(tau(z.value(), u));
      out.weights.push_back(local.weights()[n] * scale / (den * den));
    }
    return out;
  }
  for (std::size_t n = 0; n < q.size(); ++n) {
    if (pseudo_dist(z, q.nodes()[n]) >= r) {
      out.nodes.push_back(q.nodes()[n]);
      out.weights.push_back(q.weights()[n]);
    }
  }
  return out;
}

SubQuadrature filtered_inside_nodes(DiskPoint z, double r, const DiskQuadrature& q) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidParameter("region radius must lie in [0, 1)");
  SubQuadrature out;
  for (std::size_t n = 0; n < q.size(); ++n) {
    if (pseudo_dist(z, q.nodes()[n]) < r) {
      out.nodes.push_back(q.nodes()[n]);
      out.weights.push_back(q.weights()[n]);
    }
  }
  return out;
}

}  // namespace qha
