#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qha/errors.hpp"
#include "qha/geometry.hpp"

using namespace qha;

TEST_SUITE("geometry") {
  TEST_CASE("disk points must lie strictly inside the disk") {
    CHECK_NOTHROW(DiskPoint(0.5, -0.5));
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), InvalidParameter);
    CHECK_THROWS_AS(DiskPoint(0.0, 1.0 - 1e-13), InvalidParameter);
    CHECK_THROWS_AS(DiskPoint(std::nan(""), 0.0), InvalidParameter);
  }

  TEST_CASE("group elements are validated on construction") {
    CHECK_NOTHROW(GroupElement::from_entries(std::sqrt(2.0), 1.0));
    CHECK_THROWS_AS(GroupElement::from_entries(1.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(GroupElement::from_entries(2.0, 0.0), InvalidParameter);
  }

  TEST_CASE("identity and rotations") {
    const DiskPoint z(0.3, 0.4);
    CHECK(std::abs(act(GroupElement::identity(), z).value() - z.value()) == 0.0);
    const double phi = 0.7;
    const cplx rotated = act(RotationElement{phi}.embed(), z).value();
    CHECK(std::abs(rotated - std::polar(1.0, 2.0 * phi) * z.value()) < 1e-15);
    CHECK(std::abs(act(RotationElement{std::numbers::pi}.embed(), z).value() - z.value()) < 1e-15);
  }

  TEST_CASE("lift_tau realizes the involution") {
    const DiskPoint w(-0.2, 0.6);
    const DiskPoint z(0.1, 0.3);
    const GroupElement t = lift_tau(w);
    CHECK(std::abs(t.determinant() - 1.0) < 1e-14);
    CHECK(std::abs(act(t, DiskPoint(0.0, 0.0)).value() - w.value()) < 1e-15);
    CHECK(std::abs(act(t, z).value() - tau(w.value(), z.value())) < 1e-15);
    CHECK(std::abs(tau(w.value(), w.value())) < 1e-16);
    CHECK(std::abs(tau(w.value(), tau(w.value(), z.value())) - z.value()) < 1e-15);
  }

  TEST_CASE("group law and inverse") {
    std::mt19937_64 rng(7);
    for (int s = 0; s < 100; ++s) {
      const GroupElement g = test::random_element(rng, 0.9);
      const GroupElement h = test::random_element(rng, 0.9);
      const DiskPoint z = test::random_point(rng, 0.9);
      CHECK((g * g.inverse()).distance(GroupElement::identity()) < 1e-12);
      CHECK(std::abs(act(g * h, z).value() - act(g, act(h, z)).value()) < 1e-13);
    }
  }

  TEST_CASE("cocycle identities") {
    std::mt19937_64 rng(11);
    const DiskPoint origin(0.0, 0.0);
    for (int s = 0; s < 200; ++s) {
      const GroupElement g = test::random_element(rng, 0.9);
      const GroupElement h = test::random_element(rng, 0.9);
      const DiskPoint z = test::random_point(rng, 0.9);
      const cplx rhs = cocycle(g, act(h, z)) * cocycle(h, z);
      CHECK(std::abs(cocycle(g * h, z) - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      CHECK(std::abs(std::abs(cocycle(g, origin)) - (1.0 - act(g, origin).norm())) < 1e-13);
    }
  }

  TEST_CASE("decompose round trip") {
    std::mt19937_64 rng(13);
    for (int s = 0; s < 100; ++s) {
      const GroupElement g = test::random_element(rng, 0.95);
      const auto [z, k] = decompose(g);
      CHECK(std::abs(z.value() - act(g, DiskPoint(0.0, 0.0)).value()) < 1e-13);
      CHECK((lift_tau(z) * k.embed()).distance(g) < 1e-12);
    }
  }

  TEST_CASE("decompose of a rotation lands at the origin") {
    const RotationElement k{0.4};
    const auto [z, k2] = decompose(k.embed());
    CHECK(z.abs() == 0.0);
    // lift_tau(0) is itself a rotation, so the returned angle absorbs it.
    CHECK((lift_tau(z) * k2.embed()).distance(k.embed()) < 1e-15);
  }

  TEST_CASE("pseudohyperbolic distance is invariant") {
    std::mt19937_64 rng(17);
    for (int s = 0; s < 100; ++s) {
      const GroupElement g = test::random_element(rng, 0.8);
      const DiskPoint z = test::random_point(rng, 0.8);
      const DiskPoint w = test::random_point(rng, 0.8);
      CHECK(std::abs(pseudo_dist(z, w) - pseudo_dist(w, z)) < 1e-15);
      CHECK(std::abs(pseudo_dist(act(g, z), act(g, w)) - pseudo_dist(z, w)) < 1e-12);
      CHECK(abs_value_identity_check(g, test::random_element(rng, 0.8)) < 1e-12);
    }
    CHECK(pseudo_dist(DiskPoint(0.3, 0.1), DiskPoint(0.3, 0.1)) == 0.0);
  }
}
