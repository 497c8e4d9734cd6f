#pragma once

// Deterministic quadrature on the unit disk and on SU(1,1).
//
// The disk rule is tensor Gauss-Legendre in t = |z|^2 times the uniform
// trapezoid rule in the angle, so weights are for the normalized area
// measure dz = dt dtheta / (2 pi). Disk integrals over |z| < R use the same
// rule mapped onto t in [0, R^2]. The group rule factors the Haar measure as
// d lambda(z) on the disk times the probability measure on K, with
// g = lift_tau(z) * embed(phi).

#include <functional>
#include <vector>

#include "qha/geometry.hpp"

namespace qha {

inline constexpr int kDefaultRadialOrder = 64;
inline constexpr int kDefaultAngularOrder = 128;
inline constexpr int kDefaultCircleOrder = 32;

/// Gauss-Legendre nodes and weights on [lo, hi], ascending.
struct LineRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
LineRule gauss_legendre(int order, double lo, double hi);

class DiskQuadrature {
 public:
  /// Rule on |z| < radius. Throws InvalidParameter for non-positive orders or radius outside (0, 1].
  DiskQuadrature(int radial_order = kDefaultRadialOrder, int angular_order = kDefaultAngularOrder,
                 double radius = 1.0);

  int radial_order() const noexcept { return radial_order_; }
  int angular_order() const noexcept { return angular_order_; }
  double radius() const noexcept { return radius_; }

  /// Nodes are stored ring by ring: index = ring * angular_order + angle.
  const std::vector<DiskPoint>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// |z| of ring i and the total weight carried by that ring.
  double ring_radius(int ring) const { return ring_radius_[ring]; }
  double ring_weight(int ring) const { return ring_weight_[ring]; }
  /// Angle of column j, 2 pi j / angular_order.
  double angle(int j) const;

  /// Same orders on a smaller disk.
  DiskQuadrature scaled(double radius) const { return {radial_order_, angular_order_, radius}; }

 private:
  int radial_order_;
  int angular_order_;
  double radius_;
  std::vector<double> ring_radius_;
  std::vector<double> ring_weight_;
  std::vector<DiskPoint> nodes_;
  std::vector<double> weights_;
};

struct GroupQuadrature {
  DiskQuadrature base;
  int circle_order = kDefaultCircleOrder;

  /// Circle angle phi_c = pi c / circle_order; weights 1 / circle_order.
  double circle_angle(int c) const;
};

/// One node of the group rule together with its factorization.
struct GroupNode {
  GroupElement element;  // lift_tau(point) * embed(rotation)
  DiskPoint point;
  RotationElement rotation;
  double weight;  // lambda weight times the circle weight
};

/// Node set of the group rule restricted to |g . 0| < cutoff. Throws InvalidParameter if
/// cutoff is not in (0, 1).
std::vector<GroupNode> group_nodes(const GroupQuadrature& gq, double cutoff);

/// A weighted node list, as produced by region_nodes.
struct SubQuadrature {
  std::vector<DiskPoint> nodes;
  std::vector<double> weights;

  double total_weight() const;
};

using DiskFunction = std::function<cplx(DiskPoint)>;
using GroupFunctionEvaluator = std::function<cplx(const GroupElement&)>;

/// Weighted sum over the disk rule. Throws IntegrationError on a non-finite value.
cplx integrate_disk(const DiskFunction& f, const DiskQuadrature& q);

/// Integral of f(z) (1 - |z|^2)^{-2} dz over |z| < cutoff_radius. The tail beyond the
/// cutoff is the caller's responsibility.
cplx integrate_lambda(const DiskFunction& f, const DiskQuadrature& q, double cutoff_radius);

/// Haar integral of F over { g : |g . 0| < cutoff_radius }.
cplx integrate_group(const GroupFunctionEvaluator& F, const GroupQuadrature& gq, double cutoff_radius);

/// Nodes for the pseudohyperbolic disk D_r(z) (inside) or its complement (outside).
///
/// Inside nodes are the rule on |u| < r transported by w = tau_z(u), with the Jacobian
/// (1 - |z|^2)^2 / |1 - conj(z) u|^4 folded into the weights. Outside nodes are the
/// global nodes with pseudo_dist(node, z) >= r and unchanged weights.
SubQuadrature region_nodes(DiskPoint z, double r, const DiskQuadrature& q, bool inside);

/// Same as region_nodes(..., inside = false) but selecting the global nodes with
/// pseudo_dist(node, z) < r, so that the two filtered sets partition the rule.
SubQuadrature filtered_inside_nodes(DiskPoint z, double r, const DiskQuadrature& q);

}  // namespace qha
