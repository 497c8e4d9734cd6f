#pragma once

// Möbius geometry of the unit disk and the group SU(1,1).
//
// A group element is stored as the matrix [[a, b], [conj(b), conj(a)]] with
// |a|^2 - |b|^2 = 1. It acts on the disk by z -> (a z + b) / (conj(b) z + conj(a)).

#include <complex>
#include <utility>

namespace qha {

using cplx = std::complex<double>;

/// Points closer than this to the unit circle are rejected.
inline constexpr double kBoundaryGuard = 1e-12;

/// A point of the open unit disk.
class DiskPoint {
 public:
  /// Throws InvalidParameter if |value| >= 1 - kBoundaryGuard or value is not finite.
  explicit DiskPoint(cplx value);
  DiskPoint(double re, double im) : DiskPoint(cplx(re, im)) {}

  cplx value() const noexcept { return value_; }
  double abs() const noexcept { return std::abs(value_); }
  double norm() const noexcept { return std::norm(value_); }  // |z|^2

 private:
  cplx value_;
};

class GroupElement;

/// Element of K = U(1) embedded as diag(e^{i phi}, e^{-i phi}); acts as z -> e^{2 i phi} z.
/// The action has period pi in phi.
struct RotationElement {
  double phi = 0.0;

  GroupElement embed() const;
};

class GroupElement {
 public:
  /// Identity matrix.
  GroupElement() = default;

  /// Validates |a|^2 - |b|^2 = 1 (relative tolerance 1e-12); throws InvalidParameter otherwise.
  static GroupElement from_entries(cplx a, cplx b);
  static GroupElement identity() { return GroupElement(); }

  cplx a() const noexcept { return a_; }
  cplx b() const noexcept { return b_; }

  /// |a|^2 - |b|^2, equal to 1 for a valid element.
  double determinant() const noexcept { return std::norm(a_) - std::norm(b_); }

  GroupElement inverse() const noexcept { return GroupElement(std::conj(a_), -b_); }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) noexcept;

  /// Largest entrywise difference of the two matrices.
  double distance(const GroupElement& other) const noexcept;

 private:
  GroupElement(cplx a, cplx b) noexcept : a_(a), b_(b) {}

  cplx a_{1.0, 0.0};
  cplx b_{0.0, 0.0};

  friend GroupElement lift_tau(DiskPoint w);
  friend GroupElement RotationElement::embed() const;
};

/// Fractional linear action g . z. Throws DegenerateInput if the denominator vanishes.
DiskPoint act(const GroupElement& g, DiskPoint z);

/// j(g, z) = (conj(b) z + conj(a))^{-2}.
cplx cocycle(const GroupElement& g, DiskPoint z);

/// The involution tau_w(z) = (w - z) / (1 - conj(w) z) evaluated on raw values.
cplx tau(cplx w, cplx z);

/// SU(1,1) lift of tau_w: a = -i / sqrt(1 - |w|^2), b = i w / sqrt(1 - |w|^2).
GroupElement lift_tau(DiskPoint w);

inline GroupElement embed(RotationElement k) { return k.embed(); }

/// Splits g = lift_tau(g . 0) * embed(k). The returned phi lies in (-pi, pi].
std::pair<DiskPoint, RotationElement> decompose(const GroupElement& g);

/// Pseudohyperbolic distance |tau_z(w)|.
double pseudo_dist(DiskPoint z, DiskPoint w);

/// | |(h^{-1} g) . 0| - |tau_{h.0}(g.0)| |, which vanishes for all g, h.
double abs_value_identity_check(const GroupElement& g, const GroupElement& h);

}  // namespace qha
