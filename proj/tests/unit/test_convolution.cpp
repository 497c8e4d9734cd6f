#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "qha/convolution.hpp"
#include "qha/errors.hpp"
#include "qha/suites.hpp"

using namespace qha;

TEST_SUITE("convolution") {
  TEST_CASE("function convolution against constants") {
    const GroupQuadrature gq{DiskQuadrature(32, 16), 4};
    const GroupFunction indicator{[](const GroupElement& g) {
                                    return cplx(std::norm(g.b()) / std::norm(g.a()) < 0.25 ? 1.0 : 0.0);
                                  },
                                  1.0, std::nullopt};
    const Symbol c = conv_fun_fun(indicator, Symbol::constant(1.0), gq, 0.5);
    CHECK(std::abs(c(DiskPoint(0.2, 0.3)) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(c(DiskPoint(0.0, 0.0)) - 1.0 / 3.0) < 1e-12);
    const Symbol z = conv_fun_fun(GroupFunction::zero(), Symbol::constant(1.0), gq, 0.5);
    CHECK(std::abs(z(DiskPoint(0.1, 0.1))) == 0.0);
  }

  TEST_CASE("radial bump and its norms") {
    const GroupFunction psi = radial_bump(0.4, 2, cplx(0.0, 1.5));
    const GroupQuadrature gq{DiskQuadrature(64, 8), 4};
    CHECK(psi.sup_bound == doctest::Approx(1.5));
    CHECK(std::abs(psi(GroupElement::identity()) - cplx(0.0, 1.5)) < 1e-15);
    CHECK(std::abs(psi(lift_tau(DiskPoint(0.5, 0.0)))) == 0.0);
    CHECK(group_lp_norm(psi, gq, 0.4, 1.0) == doctest::Approx(*psi.integrable_bound).epsilon(1e-12));
    CHECK(group_lp_norm(psi, gq, 0.4, std::numeric_limits<double>::infinity()) <= 1.5);
    CHECK_THROWS_AS(radial_bump(1.0, 2, 1.0), InvalidParameter);
    CHECK_THROWS_AS(group_lp_norm(psi, gq, 0.4, 0.5), InvalidParameter);
  }

  TEST_CASE("Toeplitz operators are convolutions with Phi") {
    const TruncatedSpace space(8);
    const GroupQuadrature gq{DiskQuadrature(32, 64), 8};
    const OperatorMatrix Phi = test::phi(space);
    for (const NamedSymbol& s : symbol_battery()) {
      CHECK((toeplitz_matrix(s.symbol, space, gq.base) - conv_symbol_op(s.symbol, Phi, gq)).max_abs() < 1e-12);
    }
    CHECK(conv_symbol_op(Symbol::constant(0.0), Phi, gq).max_abs() == 0.0);
    CHECK((conv_symbol_op(Symbol::constant(1.0), Phi, gq) - OperatorMatrix::identity(space)).max_abs() < 1e-12);
  }

  TEST_CASE("symbol convolution only sees the K-average") {
    const TruncatedSpace space(5);
    const GroupQuadrature gq{DiskQuadrature(16, 32), 8};
    SampleGenerator gen(9);
    const OperatorMatrix S = gen.operator_matrix(space);
    const Symbol a = gen.trig_symbol();
    const OperatorMatrix x = conv_symbol_op(a, S, gq);
    CHECK((x - conv_symbol_op(a, k_average(S, gq), gq)).max_abs() < 1e-12);
    // linearity
    const OperatorMatrix T = gen.operator_matrix(space);
    const OperatorMatrix sum = conv_symbol_op(a, S + cplx(2.0) * T, gq);
    CHECK((sum - x - cplx(2.0) * conv_symbol_op(a, T, gq)).max_abs() < 1e-12);
    // K-average keeps only the diagonal when the circle rule is fine enough
    const OperatorMatrix avg = k_average(S, gq);
    for (int m = 0; m < space.dim(); ++m) {
      for (int l = 0; l < space.dim(); ++l) {
        CHECK(std::abs(avg(m, l) - (m == l ? S(m, l) : cplx(0.0))) < 1e-14);
      }
    }
  }

  TEST_CASE("group convolution of a Toeplitz operator") {
    const TruncatedSpace out(4);
    const TruncatedSpace wide(30);
    const GroupQuadrature gq{DiskQuadrature(16, 32), 4};
    const DiskQuadrature tq(24, 48);
    SampleGenerator gen(21);
    const GroupFunction psi = gen.bump();
    const Symbol a = gen.trig_symbol();
    const OperatorMatrix lhs = conv_groupfun_op(psi, toeplitz_matrix(a, wide, tq), gq, 0.5, out);
    const OperatorMatrix rhs = toeplitz_matrix(conv_fun_fun(psi, a, gq, 0.5), out, tq);
    CHECK(op_norm(lhs - rhs) < 1e-8);
    CHECK(conv_groupfun_op(GroupFunction::zero(), toeplitz_matrix(a, out, tq), gq, 0.5).max_abs() == 0.0);
    CHECK_THROWS_AS(conv_groupfun_op(psi, OperatorMatrix::identity(out), gq, 0.5, wide), DimensionMismatch);
  }

  TEST_CASE("invariant-measure norms of symbols") {
    const DiskQuadrature q(32, 16);
    const Symbol a{[](DiskPoint z) { return cplx(1.0 - z.norm()); }, 1.0};
    // int_{|z|<R} (1-|z|^2)^2 d lambda = R^2
    CHECK(lambda_lp_norm(a, q, 0.9, 2.0) == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(lambda_lp_norm(a, q, 0.9, std::numeric_limits<double>::infinity()) <= 1.0);
    CHECK(sup_over(a, {DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)}) == 1.0);
  }

  TEST_CASE("polar grid and seeded generators") {
    CHECK(polar_grid(12, 16, 0.95).size() == 1u + 11u * 16u);
    CHECK(polar_grid(1, 16, 0.95).size() == 1u);
    CHECK_THROWS_AS(polar_grid(0, 4, 0.5), InvalidParameter);
    SampleGenerator a(5);
    SampleGenerator b(5);
    CHECK((a.operator_matrix(TruncatedSpace(3)) - b.operator_matrix(TruncatedSpace(3))).max_abs() == 0.0);
    CHECK(a.group_element(0.5).distance(b.group_element(0.5)) == 0.0);
  }

  TEST_CASE("Young report") {
    YoungOptions options;
    options.samples = 0;
    CHECK(young_report(options).rows.empty());

    options.samples = 2;
    options.zero_inputs = true;
    const YoungReport zero = young_report(options);
    CHECK(zero.rows.size() == 10u);
    for (const YoungRow& r : zero.rows) {
      CHECK(r.lhs == 0.0);
      CHECK(r.rhs == 0.0);
    }
    CHECK(zero.violations() == 0);

    options.zero_inputs = false;
    options.samples = 3;
    options.space = TruncatedSpace(5);
    CHECK(young_report(options).violations() == 0);
  }
}
