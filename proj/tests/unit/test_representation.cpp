#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qha/errors.hpp"
#include "qha/representation.hpp"

using namespace qha;

namespace {

// pi(tau_z) e_m (w) = (-1)^{m+1} (1 - |z|^2) sqrt(m+1) (w - z)^m (1 - conj(z) w)^{-m-2}
cplx moved_basis(cplx z, int m, cplx w) {
  const double sign = (m + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * (1.0 - std::norm(z)) * std::sqrt(m + 1.0) * std::pow(w - z, m) *
         std::pow(1.0 - std::conj(z) * w, -m - 2);
}

}  // namespace

TEST_SUITE("representation") {
  TEST_CASE("identity and rotations") {
    const TruncatedSpace space(6);
    CHECK((pi_matrix(GroupElement::identity(), space).matrix - OperatorMatrix::identity(space)).max_abs() < 1e-15);
    const double phi = 0.37;
    const OperatorMatrix r = pi_matrix(RotationElement{phi}.embed(), space).matrix;
    for (int m = 0; m < space.dim(); ++m) {
      for (int l = 0; l < space.dim(); ++l) {
        const cplx expected = m == l ? std::polar(1.0, -2.0 * phi * (m + 1)) : 0.0;
        CHECK(std::abs(r(m, l) - expected) < 1e-14);
      }
    }
  }

  TEST_CASE("columns of pi(tau_z) match the closed form") {
    const DiskPoint z(0.25, -0.2);
    const Eigen::MatrixXcd block = pi_block(lift_tau(z), 90, 6);
    for (int m = 0; m < 6; ++m) {
      const SpaceVector column(block.col(m));
      for (cplx w : {cplx(0.1, 0.2), cplx(-0.4, 0.1), cplx(0.0, -0.45)}) {
        CHECK(std::abs(column.eval(w) - moved_basis(z.value(), m, w)) < 1e-12);
      }
    }
  }

  TEST_CASE("series route agrees with the quadrature oracle") {
    std::mt19937_64 rng(3);
    const TruncatedSpace space(12);
    for (int s = 0; s < 3; ++s) {
      const GroupElement g = test::random_element(rng, 0.5);
      const double diff = (pi_matrix(g, space).matrix - pi_matrix_quadrature(g, space, DiskQuadrature()).matrix).max_abs();
      CHECK(diff < 1e-8);
    }
    // far from the identity the moved basis concentrates near the circle and needs a finer angle rule
    const GroupElement far = lift_tau(DiskPoint(0.0, 0.9));
    const double diff =
        (pi_matrix(far, space).matrix - pi_matrix_quadrature(far, space, DiskQuadrature(64, 512)).matrix).max_abs();
    CHECK(diff < 1e-8);
  }

  TEST_CASE("cocycle formulas for the constant and the kernels") {
    std::mt19937_64 rng(5);
    const TruncatedSpace space(10);
    const TruncatedSpace wide(160);
    for (int s = 0; s < 10; ++s) {
      const GroupElement g = test::random_element(rng, 0.5);
      const Eigen::VectorXcd col = pi_matrix(g, space).matrix.entries().col(0);
      CHECK((col - pi_apply_one(g, space).coeffs()).norm() < 1e-13);

      const DiskPoint z = test::random_point(rng, 0.5);
      const Eigen::VectorXcd moved =
          pi_block(g, wide.dim(), wide.dim()) * normalized_kernel_vector(z, wide).coeffs();
      const Eigen::VectorXcd closed = pi_apply_normalized_kernel(g, z, space).coeffs();
      CHECK((moved.head(space.dim()) - closed).norm() < 1e-10);
    }
  }

  TEST_CASE("alpha and matrix coefficients") {
    const TruncatedSpace space(8);
    const GroupElement g = lift_tau(DiskPoint(0.3, 0.3)) * RotationElement{0.2}.embed();
    const SpaceVector v = pi_apply_one(g, space);
    CHECK((alpha(g, test::phi(space)) - rank_one(v, v)).max_abs() < 1e-14);
    const SpaceVector one = SpaceVector::basis(space, 0);
    CHECK(std::abs(matrix_coefficient(one, one, g) - cocycle(g, DiskPoint(0.0, 0.0))) < 1e-15);
  }

  TEST_CASE("Schur pairing gives the formal dimension") {
    const TruncatedSpace space(8);
    const SpaceVector one = SpaceVector::basis(space, 0);
    const GroupQuadrature gq{DiskQuadrature(32, 32), 8};
    const SchurEstimate d = schur_pairing(one, one, one, one, gq, 0.99);
    CHECK(std::abs(d.truncated - 0.99 * 0.99) < 1e-3);
    CHECK(std::abs(d.value() - 1.0) < 1e-3);
    const SpaceVector zero = SpaceVector::zero(space);
    CHECK(std::abs(schur_pairing(zero, one, one, one, gq, 0.99).value()) == 0.0);
    CHECK_THROWS_AS(schur_pairing(one, SpaceVector::basis(TruncatedSpace(3), 0), one, one, gq, 0.99),
                    DimensionMismatch);
    CHECK_THROWS_AS(schur_pairing(one, one, one, one, gq, 1.0), InvalidParameter);
  }

  TEST_CASE("truncation defects") {
    const GroupElement g = lift_tau(DiskPoint(0.35, -0.2));
    const GroupElement h = lift_tau(DiskPoint(-0.1, 0.3)) * RotationElement{0.5}.embed();
    const TruncatedSpace window(4);
    // On a fixed low-degree window both defects vanish as N grows.
    CHECK(unitarity_defect_on_window(g, TruncatedSpace(32), window) <
          unitarity_defect_on_window(g, TruncatedSpace(8), window));
    CHECK(unitarity_defect_on_window(g, TruncatedSpace(40), window) < 1e-10);
    CHECK(homomorphism_defect_on_window(g, h, TruncatedSpace(40), window) < 1e-8);
    // The full compressed matrix stays far from unitary: the top degrees leak out.
    CHECK(unitarity_defect(g, TruncatedSpace(32)) > 0.1);
    CHECK(unitarity_defect(GroupElement::identity(), TruncatedSpace(8)) < 1e-15);
    CHECK_THROWS_AS(unitarity_defect_on_window(g, TruncatedSpace(2), window), DimensionMismatch);
  }
}
