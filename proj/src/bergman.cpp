#include "qha/bergman.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "qha/errors.hpp"

namespace qha {

namespace {

void require_same_dim(Eigen::Index x, Eigen::Index y, const char* what) {
  if (x != y) {
    std::ostringstream os;
    os << what << ": dimension " << x << " vs " << y;
    throw DimensionMismatch(os.str());
  }
}

Eigen::JacobiSVD<Eigen::MatrixXcd> checked_svd(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) {
    std::ostringstream os;
    os << "SVD of a " << m.rows() << "x" << m.cols() << " matrix with non-finite entries";
    throw NumericalError(os.str());
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  if (svd.info() != Eigen::Success) {
    std::ostringstream os;
    os << "SVD did not converge for a " << m.rows() << "x" << m.cols()
       << " matrix, max |entry| = " << m.cwiseAbs().maxCoeff();
    throw NumericalError(os.str());
  }
  return svd;
}

}  // namespace

TruncatedSpace::TruncatedSpace(int degree) : degree_(degree) {
  if (degree < 0) throw InvalidParameter("truncation degree must be non-negative");
}

SpaceVector::SpaceVector(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) throw DimensionMismatch("empty space vector");
}

SpaceVector SpaceVector::zero(TruncatedSpace space) { return SpaceVector(Eigen::VectorXcd::Zero(space.dim())); }

SpaceVector SpaceVector::basis(TruncatedSpace space, int m) {
  if (m < 0 || m > space.degree()) throw InvalidParameter("basis index outside the truncation");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space.dim());
  v(m) = 1.0;
  return SpaceVector(std::move(v));
}

cplx SpaceVector::eval(cplx w) const {
  cplx sum = 0.0;
  cplx power = 1.0;
  for (Eigen::Index m = 0; m < coeffs_.size(); ++m) {
    sum += coeffs_(m) * std::sqrt(static_cast<double>(m + 1)) * power;
    power *= w;
  }
  return sum;
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw DimensionMismatch("operator matrix must be square and non-empty");
  }
}

OperatorMatrix OperatorMatrix::zero(TruncatedSpace space) {
  return OperatorMatrix(Eigen::MatrixXcd::Zero(space.dim(), space.dim()));
}

OperatorMatrix OperatorMatrix::identity(TruncatedSpace space) {
  return OperatorMatrix(Eigen::MatrixXcd::Identity(space.dim(), space.dim()));
}

SpaceVector OperatorMatrix::apply(const SpaceVector& v) const {
  require_same_dim(entries_.cols(), v.coeffs().size(), "apply");
  return SpaceVector(entries_ * v.coeffs());
}

OperatorMatrix OperatorMatrix::compressed(TruncatedSpace smaller) const {
  if (smaller.dim() > entries_.rows()) throw DimensionMismatch("cannot compress to a larger space");
  return OperatorMatrix(entries_.topLeftCorner(smaller.dim(), smaller.dim()));
}

OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_dim(x.entries_.rows(), y.entries_.rows(), "operator sum");
  return OperatorMatrix(x.entries_ + y.entries_);
}

OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_dim(x.entries_.rows(), y.entries_.rows(), "operator difference");
  return OperatorMatrix(x.entries_ - y.entries_);
}

OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_dim(x.entries_.rows(), y.entries_.rows(), "operator product");
  return OperatorMatrix(x.entries_ * y.entries_);
}

OperatorMatrix operator*(cplx c, const OperatorMatrix& x) { return OperatorMatrix(c * x.entries_); }

Symbol Symbol::constant(cplx c) {
  return Symbol{[c](DiskPoint) { return c; }, std::abs(c)};
}

SpaceVector kernel_vector(DiskPoint z, TruncatedSpace space) {
  Eigen::VectorXcd v(space.dim());
  const cplx zc = std::conj(z.value());
  cplx power = 1.0;
  for (int m = 0; m < space.dim(); ++m) {
    v(m) = std::sqrt(static_cast<double>(m + 1)) * power;
    power *= zc;
  }
  return SpaceVector(std::move(v));
}

SpaceVector normalized_kernel_vector(DiskPoint z, TruncatedSpace space) {
  return SpaceVector((1.0 - z.norm()) * kernel_vector(z, space).coeffs());
}

cplx inner(const SpaceVector& f, const SpaceVector& g) {
  require_same_dim(f.coeffs().size(), g.coeffs().size(), "inner product");
  // Eigen's dot conjugates its first argument.
  return g.coeffs().dot(f.coeffs());
}

OperatorMatrix toeplitz_matrix(const Symbol& a, TruncatedSpace space, const DiskQuadrature& q) {
  const Eigen::Index n = static_cast<Eigen::Index>(q.size());
  Eigen::MatrixXcd basis(n, space.dim());
  Eigen::VectorXcd weighted(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const DiskPoint w = q.nodes()[k];
    const cplx value = a(w);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      std::ostringstream os;
      os.precision(17);
      os << "symbol is not finite at node " << w.value();
      throw IntegrationError(os.str());
    }
    if (std::abs(value) > a.sup_bound * (1.0 + 1e-12) + 1e-300) {
      std::ostringstream os;
      os.precision(17);
      os << "symbol value " << std::abs(value) << " at " << w.value() << " exceeds declared bound "
         << a.sup_bound;
      throw InvalidParameter(os.str());
    }
    weighted(k) = q.weights()[k] * value;
    cplx power = 1.0;
    for (int m = 0; m < space.dim(); ++m) {
      basis(k, m) = std::sqrt(static_cast<double>(m + 1)) * power;
      power *= w.value();
    }
  }
  return OperatorMatrix(basis.adjoint() * weighted.asDiagonal() * basis);
}

OperatorMatrix rank_one(const SpaceVector& f, const SpaceVector& g) {
  require_same_dim(f.coeffs().size(), g.coeffs().size(), "rank_one");
  return OperatorMatrix(f.coeffs() * g.coeffs().adjoint());
}

cplx berezin(const OperatorMatrix& S, DiskPoint z) {
  const SpaceVector k = normalized_kernel_vector(z, S.space());
  return inner(S.apply(k), k);
}

double op_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return checked_svd(m).singularValues()(0);
}

double op_norm(const OperatorMatrix& S) { return op_norm(S.entries()); }

double trace_norm(const OperatorMatrix& S) { return checked_svd(S.entries()).singularValues().sum(); }

void write_csv(std::ostream& os, const OperatorMatrix& S) {
  const auto& e = S.entries();
  const auto old_precision = os.precision(17);
  for (Eigen::Index m = 0; m < e.rows(); ++m) {
    for (Eigen::Index l = 0; l < e.cols(); ++l) {
      if (l > 0) os << ',';
      os << e(m, l).real() << ',' << e(m, l).imag();
    }
    os << '\n';
  }
  os.precision(old_precision);
}

OperatorMatrix read_csv(std::istream& is) {
  std::vector<std::vector<cplx>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw InvalidParameter("operator CSV: cannot parse field '" + cell + "'");
      }
      if (used != cell.size()) throw InvalidParameter("operator CSV: trailing characters in '" + cell + "'");
      fields.push_back(v);
    }
    if (fields.size() % 2 != 0) throw InvalidParameter("operator CSV: odd number of fields in a row");
    std::vector<cplx> row;
    for (std::size_t i = 0; i < fields.size(); i += 2) row.emplace_back(fields[i], fields[i + 1]);
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) throw InvalidParameter("operator CSV: matrix is not square");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return OperatorMatrix(std::move(m));
}

}  // namespace qha
