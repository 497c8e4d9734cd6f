#include "qha/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qha/errors.hpp"

namespace qha {

namespace {

constexpr double kDenominatorFloor = 1e-300;

cplx checked_denominator(cplx d) {
  if (!(std::abs(d) >= kDenominatorFloor)) {
    throw DegenerateInput("Möbius denominator vanishes; group element is not in SU(1,1)");
  }
  return d;
}

}  // namespace

DiskPoint::DiskPoint(cplx value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
      std::abs(value) >= 1.0 - kBoundaryGuard) {
    std::ostringstream os;
    os.precision(17);
    os << "point " << value << " is not strictly inside the unit disk";
    throw InvalidParameter(os.str());
  }
}

GroupElement GroupElement::from_entries(cplx a, cplx b) {
  const double det = std::norm(a) - std::norm(b);
  if (!std::isfinite(det) || std::abs(det - 1.0) > 1e-12 * std::max(1.0, std::norm(a))) {
    std::ostringstream os;
    os.precision(17);
    os << "|a|^2 - |b|^2 = " << det << " (expected 1)";
    throw InvalidParameter(os.str());
  }
  return GroupElement(a, b);
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) noexcept {
  return GroupElement(g.a_ * h.a_ + g.b_ * std::conj(h.b_), g.a_ * h.b_ + g.b_ * std::conj(h.a_));
}

double GroupElement::distance(const GroupElement& other) const noexcept {
  return std::max(std::abs(a_ - other.a_), std::abs(b_ - other.b_));
}

GroupElement RotationElement::embed() const {
  return GroupElement(std::polar(1.0, phi), cplx(0.0, 0.0));
}

DiskPoint act(const GroupElement& g, DiskPoint z) {
  const cplx den = checked_denominator(std::conj(g.b()) * z.value() + std::conj(g.a()));
  return DiskPoint((g.a() * z.value() + g.b()) / den);
}

cplx cocycle(const GroupElement& g, DiskPoint z) {
  const cplx den = checked_denominator(std::conj(g.b()) * z.value() + std::conj(g.a()));
  return 1.0 / (den * den);
}

cplx tau(cplx w, cplx z) { return (w - z) / (1.0 - std::conj(w) * z); }

GroupElement lift_tau(DiskPoint w) {
  const double s = std::sqrt(1.0 - w.norm());
  const cplx i(0.0, 1.0);
  return GroupElement(-i / s, i * w.value() / s);
}

std::pair<DiskPoint, RotationElement> decompose(const GroupElement& g) {
  const DiskPoint z(g.b() / std::conj(g.a()));
  const GroupElement k = lift_tau(z).inverse() * g;
  // k fixes the origin, so its off-diagonal entry vanishes and |k.a()| = 1.
  return {z, RotationElement{std::arg(k.a())}};
}

double pseudo_dist(DiskPoint z, DiskPoint w) { return std::abs(tau(z.value(), w.value())); }

double abs_value_identity_check(const GroupElement& g, const GroupElement& h) {
  const DiskPoint origin(0.0, 0.0);
  const double lhs = act(h.inverse() * g, origin).abs();
  const double rhs = std::abs(tau(act(h, origin).value(), act(g, origin).value()));
  return std::abs(lhs - rhs);
}

}  // namespace qha
