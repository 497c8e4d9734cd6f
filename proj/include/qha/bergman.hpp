#pragma once

// The Bergman space of the unit disk truncated to polynomials of degree <= N.
//
// Coordinates are taken in the orthonormal basis e_m(w) = sqrt(m+1) w^m. An
// operator S is stored as the matrix with entries [m, l] = <S e_l, e_m>, so
// column l is the image of e_l.

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <string>

#include "qha/geometry.hpp"
#include "qha/quadrature.hpp"

namespace qha {

class TruncatedSpace {
 public:
  /// Throws InvalidParameter for a negative degree.
  explicit TruncatedSpace(int degree);

  int degree() const noexcept { return degree_; }
  int dim() const noexcept { return degree_ + 1; }

  friend bool operator==(TruncatedSpace, TruncatedSpace) = default;

 private:
  int degree_;
};

class SpaceVector {
 public:
  explicit SpaceVector(Eigen::VectorXcd coeffs);
  static SpaceVector zero(TruncatedSpace space);
  /// The basis vector e_m.
  static SpaceVector basis(TruncatedSpace space, int m);

  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  TruncatedSpace space() const { return TruncatedSpace(static_cast<int>(coeffs_.size()) - 1); }
  double norm() const { return coeffs_.norm(); }

  /// sum_m coeffs[m] e_m(w).
  cplx eval(cplx w) const;

 private:
  Eigen::VectorXcd coeffs_;
};

class OperatorMatrix {
 public:
  /// Throws DimensionMismatch unless the matrix is square and non-empty.
  explicit OperatorMatrix(Eigen::MatrixXcd entries);
  static OperatorMatrix zero(TruncatedSpace space);
  static OperatorMatrix identity(TruncatedSpace space);

  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  TruncatedSpace space() const { return TruncatedSpace(static_cast<int>(entries_.rows()) - 1); }
  cplx operator()(int m, int l) const { return entries_(m, l); }

  OperatorMatrix adjoint() const { return OperatorMatrix(entries_.adjoint()); }
  SpaceVector apply(const SpaceVector& v) const;

  /// Leading (degree+1) x (degree+1) block, i.e. P S P for a smaller truncation.
  OperatorMatrix compressed(TruncatedSpace smaller) const;

  friend OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y);
  friend OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y);
  friend OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y);
  friend OperatorMatrix operator*(cplx c, const OperatorMatrix& x);

  /// Largest entrywise modulus.
  double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

 private:
  Eigen::MatrixXcd entries_;
};

/// A bounded function on the disk with a declared bound on its supremum.
struct Symbol {
  std::function<cplx(DiskPoint)> evaluator;
  double sup_bound = 0.0;

  cplx operator()(DiskPoint z) const { return evaluator(z); }

  static Symbol constant(cplx c);
};

/// Truncated reproducing kernel: coeffs[m] = sqrt(m+1) conj(z)^m.
SpaceVector kernel_vector(DiskPoint z, TruncatedSpace space);

/// (1 - |z|^2) kernel_vector(z); normalized with the untruncated norm of K_z.
SpaceVector normalized_kernel_vector(DiskPoint z, TruncatedSpace space);

/// sum_m f[m] conj(g[m]).
cplx inner(const SpaceVector& f, const SpaceVector& g);

/// <a e_l, e_m> by the disk rule. Throws InvalidParameter if |a| exceeds a.sup_bound at a node.
OperatorMatrix toeplitz_matrix(const Symbol& a, TruncatedSpace space, const DiskQuadrature& q);

/// (f (x) g) h = <h, g> f.
OperatorMatrix rank_one(const SpaceVector& f, const SpaceVector& g);

/// <S k_z, k_z> with the untruncated normalization.
cplx berezin(const OperatorMatrix& S, DiskPoint z);

/// Largest singular value. Throws NumericalError on non-finite input.
double op_norm(const OperatorMatrix& S);
/// Sum of singular values.
double trace_norm(const OperatorMatrix& S);
/// Same, for rectangular or intermediate Eigen matrices.
double op_norm(const Eigen::MatrixXcd& m);

/// CSV layout: one line per matrix row, each entry written as "re,im" with 17
/// significant digits, no header.
void write_csv(std::ostream& os, const OperatorMatrix& S);
/// Throws InvalidParameter on malformed input.
OperatorMatrix read_csv(std::istream& is);

}  // namespace qha
