#pragma once

#include <random>

#include "qha/bergman.hpp"
#include "qha/geometry.hpp"

namespace qha::test {

inline OperatorMatrix phi(TruncatedSpace space) {
  const SpaceVector one = SpaceVector::basis(space, 0);
  return rank_one(one, one);
}

inline DiskPoint random_point(std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = max_radius * std::sqrt(u(rng));
  return DiskPoint(std::polar(r, 2.0 * 3.14159265358979323846 * u(rng)));
}

inline GroupElement random_element(std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> u(0.0, 3.14159265358979323846);
  return lift_tau(random_point(rng, max_radius)) * RotationElement{u(rng)}.embed();
}

}  // namespace qha::test
