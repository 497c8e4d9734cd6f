#include "qha/representation.hpp"

#include <cmath>
#include <vector>

#include "qha/errors.hpp"

namespace qha {

Eigen::MatrixXcd pi_block(const GroupElement& g, int rows, int cols) {
  if (rows <= 0 || cols <= 0) throw InvalidParameter("pi_block needs positive dimensions");
  const cplx a = g.a();
  const cplx inv_a2 = 1.0 / (a * a);
  const cplx ratio = std::conj(g.b()) / a;
  const cplx shift = -g.b() / a;  // constant term of g^{-1}(w)

  Eigen::VectorXcd f(rows);  // Taylor coefficients of (a - conj(b) w)^{-2} (g^{-1} w)^l
  cplx power = 1.0;
  for (int k = 0; k < rows; ++k) {
    f(k) = inv_a2 * static_cast<double>(k + 1) * power;
    power *= ratio;
  }

  Eigen::VectorXd inv_sqrt(rows);
  for (int m = 0; m < rows; ++m) inv_sqrt(m) = 1.0 / std::sqrt(static_cast<double>(m + 1));

  Eigen::MatrixXcd out(rows, cols);
  for (int l = 0; l < cols; ++l) {
    out.col(l) = std::sqrt(static_cast<double>(l + 1)) * f.cwiseProduct(inv_sqrt.cast<cplx>());
    if (l + 1 == cols) break;
    // f <- f * g^{-1}(w); the non-constant coefficients of g^{-1} are inv_a2 ratio^{k-1}.
    cplx running = 0.0;
    for (int m = 0; m < rows; ++m) {
      const cplx fm = f(m);
      f(m) = shift * fm + inv_a2 * running;
      running = ratio * running + fm;
    }
  }
  return out;
}

RepresentationMatrix pi_matrix(const GroupElement& g, TruncatedSpace space) {
  return {g, OperatorMatrix(pi_block(g, space.dim(), space.dim()))};
}

RepresentationMatrix pi_matrix_quadrature(const GroupElement& g, TruncatedSpace space, const DiskQuadrature& q) {
  const GroupElement inv = g.inverse();
  const auto n = static_cast<Eigen::Index>(q.size());
  Eigen::MatrixXcd moved(n, space.dim());
  Eigen::MatrixXcd basis(n, space.dim());
  Eigen::VectorXd weights(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const DiskPoint w = q.nodes()[k];
    const cplx factor = cocycle(inv, w);
    const cplx image = act(inv, w).value();
    cplx p_image = 1.0;
    cplx p_w = 1.0;
    for (int m = 0; m < space.dim(); ++m) {
      const double c = std::sqrt(static_cast<double>(m + 1));
      moved(k, m) = factor * c * p_image;
      basis(k, m) = c * p_w;
      p_image *= image;
      p_w *= w.value();
    }
    weights(k) = q.weights()[k];
  }
  return {g, OperatorMatrix(basis.adjoint() * weights.cast<cplx>().asDiagonal() * moved)};
}

SpaceVector pi_apply_normalized_kernel(const GroupElement& g, DiskPoint z, TruncatedSpace space) {
  const cplx factor = (1.0 - z.norm()) * std::conj(cocycle(g, z));
  return SpaceVector(factor * kernel_vector(act(g, z), space).coeffs());
}

SpaceVector pi_apply_one(const GroupElement& g, TruncatedSpace space) {
  const DiskPoint origin(0.0, 0.0);
  return SpaceVector(std::conj(cocycle(g, origin)) * kernel_vector(act(g, origin), space).coeffs());
}

OperatorMatrix alpha(const GroupElement& g, const OperatorMatrix& S) {
  const Eigen::MatrixXcd m = pi_block(g, S.space().dim(), S.space().dim());
  return OperatorMatrix(m * S.entries() * m.adjoint());
}

cplx matrix_coefficient(const SpaceVector& f1, const SpaceVector& f2, const GroupElement& g) {
  return inner(f1, pi_matrix(g, f2.space()).matrix.apply(f2));
}

namespace {

// Diagonal of pi(embed(phi)): e^{-2 i phi (m+1)}.
Eigen::VectorXcd rotation_diagonal(double phi, int dim) {
  Eigen::VectorXcd d(dim);
  for (int m = 0; m < dim; ++m) d(m) = std::polar(1.0, -2.0 * phi * (m + 1));
  return d;
}

// sum over circle nodes of pi_{f1,f2} conj(pi_{f3,f4}) at g = lift_tau(u) embed(phi_c), times 1/C.
cplx circle_average(const Eigen::MatrixXcd& block, const std::vector<Eigen::VectorXcd>& rotations,
                    const SpaceVector& f1, const SpaceVector& f2, const SpaceVector& f3, const SpaceVector& f4) {
  cplx sum = 0.0;
  for (const auto& d : rotations) {
    const Eigen::VectorXcd p2 = block * d.cwiseProduct(f2.coeffs());
    const Eigen::VectorXcd p4 = block * d.cwiseProduct(f4.coeffs());
    const cplx c12 = p2.dot(f1.coeffs());  // <f1, pi(g) f2>
    const cplx c34 = p4.dot(f3.coeffs());
    sum += c12 * std::conj(c34);
  }
  return sum / static_cast<double>(rotations.size());
}

}  // namespace

SchurEstimate schur_pairing(const SpaceVector& f1, const SpaceVector& f2, const SpaceVector& f3,
                            const SpaceVector& f4, const GroupQuadrature& gq, double cutoff) {
  const TruncatedSpace space = f1.space();
  if (!(f2.space() == space && f3.space() == space && f4.space() == space)) {
    throw DimensionMismatch("schur_pairing: vectors live in different truncations");
  }
  if (!(cutoff > 0.0 && cutoff < 1.0)) throw InvalidParameter("schur_pairing: cutoff must lie in (0, 1)");
  if (gq.circle_order <= 0) throw InvalidParameter("circle order must be positive");

  std::vector<Eigen::VectorXcd> rotations;
  for (int c = 0; c < gq.circle_order; ++c) rotations.push_back(rotation_diagonal(gq.circle_angle(c), space.dim()));

  const DiskQuadrature disk = gq.base.scaled(cutoff);
  cplx truncated = 0.0;
  for (std::size_t n = 0; n < disk.size(); ++n) {
    const DiskPoint u = disk.nodes()[n];
    const Eigen::MatrixXcd block = pi_block(lift_tau(u), space.dim(), space.dim());
    const double lam = disk.weights()[n] / std::pow(1.0 - u.norm(), 2);
    truncated += lam * circle_average(block, rotations, f1, f2, f3, f4);
  }

  cplx ring = 0.0;
  const int angles = gq.base.angular_order();
  for (int j = 0; j < angles; ++j) {
    const DiskPoint u(std::polar(cutoff, gq.base.angle(j)));
    ring += circle_average(pi_block(lift_tau(u), space.dim(), space.dim()), rotations, f1, f2, f3, f4);
  }
  ring /= static_cast<double>(angles);
  const double edge = 1.0 - cutoff * cutoff;
  return {truncated, ring / edge};
}

double unitarity_defect(const GroupElement& g, TruncatedSpace space) {
  return unitarity_defect_on_window(g, space, space);
}

double unitarity_defect_on_window(const GroupElement& g, TruncatedSpace space, TruncatedSpace window) {
  if (window.dim() > space.dim()) throw DimensionMismatch("window larger than the truncation");
  const Eigen::MatrixXcd m = pi_block(g, space.dim(), space.dim());
  const Eigen::MatrixXcd defect = m.adjoint() * m - Eigen::MatrixXcd::Identity(space.dim(), space.dim());
  return op_norm(Eigen::MatrixXcd(defect.topLeftCorner(window.dim(), window.dim())));
}

double homomorphism_defect(const GroupElement& g, const GroupElement& h, TruncatedSpace space) {
  return homomorphism_defect_on_window(g, h, space, space);
}

double homomorphism_defect_on_window(const GroupElement& g, const GroupElement& h, TruncatedSpace space,
                                     TruncatedSpace window) {
  if (window.dim() > space.dim()) throw DimensionMismatch("window larger than the truncation");
  const int n = space.dim();
  const Eigen::MatrixXcd diff = pi_block(g * h, n, n) - pi_block(g, n, n) * pi_block(h, n, n);
  return op_norm(Eigen::MatrixXcd(diff.topLeftCorner(window.dim(), window.dim())));
}

}  // namespace qha
