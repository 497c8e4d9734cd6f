#pragma once

// The discrete series representation pi(g) f = j(g^{-1}, .) (f o g^{-1}) of
// SU(1,1) on the Bergman space, compressed to a truncated space.

#include <Eigen/Dense>

#include "qha/bergman.hpp"
#include "qha/geometry.hpp"
#include "qha/quadrature.hpp"

namespace qha {

struct RepresentationMatrix {
  GroupElement g;
  OperatorMatrix matrix;
};

/// Rows [0, rows) and columns [0, cols) of pi(g) in the e_m basis.
///
/// Column l is the Taylor expansion of sqrt(l+1) (conj(a) w - b)^l (a - conj(b) w)^{-l-2}
/// divided row-wise by sqrt(m+1); each column follows from the previous one by
/// multiplication with the Möbius map g^{-1}(w), an O(rows) recurrence because
/// the Taylor coefficients of that map are geometric.
Eigen::MatrixXcd pi_block(const GroupElement& g, int rows, int cols);

/// P pi(g) P on the truncated space.
RepresentationMatrix pi_matrix(const GroupElement& g, TruncatedSpace space);

/// Independent route: entries <pi(g) e_l, e_m> by disk quadrature of
/// cocycle(g^{-1}, w) e_l(g^{-1} w) conj(e_m(w)).
RepresentationMatrix pi_matrix_quadrature(const GroupElement& g, TruncatedSpace space, const DiskQuadrature& q);

/// P pi(g) k_z without truncating k_z first, using pi(g) K_z = conj(j(g, z)) K_{g.z}.
SpaceVector pi_apply_normalized_kernel(const GroupElement& g, DiskPoint z, TruncatedSpace space);

/// P pi(g) 1 = conj(j(g, 0)) K_{g.0}.
SpaceVector pi_apply_one(const GroupElement& g, TruncatedSpace space);

/// pi(g) S pi(g)^*.
OperatorMatrix alpha(const GroupElement& g, const OperatorMatrix& S);

/// <f1, pi(g) f2>.
cplx matrix_coefficient(const SpaceVector& f1, const SpaceVector& f2, const GroupElement& g);

/// Group integral of pi_{f1,f2}(g) conj(pi_{f3,f4}(g)).
///
/// `truncated` is the quadrature over |g.0| < cutoff. `tail` estimates the
/// remaining annulus as (1 - cutoff^2) times the dz-density of the integrand
/// sampled on the ring |g.0| = cutoff.
struct SchurEstimate {
  cplx truncated;
  cplx tail;

  cplx value() const { return truncated + tail; }
};

SchurEstimate schur_pairing(const SpaceVector& f1, const SpaceVector& f2, const SpaceVector& f3,
                            const SpaceVector& f4, const GroupQuadrature& gq, double cutoff);

/// || M^* M - I || for M = P pi(g) P.
double unitarity_defect(const GroupElement& g, TruncatedSpace space);

/// || Q (M^* M - I) Q || where Q projects onto degrees <= window.degree().
double unitarity_defect_on_window(const GroupElement& g, TruncatedSpace space, TruncatedSpace window);

/// || P pi(gh) P - (P pi(g) P)(P pi(h) P) ||, optionally restricted to a window as above.
double homomorphism_defect(const GroupElement& g, const GroupElement& h, TruncatedSpace space);
double homomorphism_defect_on_window(const GroupElement& g, const GroupElement& h, TruncatedSpace space,
                                     TruncatedSpace window);

}  // namespace qha
