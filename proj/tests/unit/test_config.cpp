#include <doctest.h>

#include <sstream>

#include "qha/config.hpp"
#include "qha/suites.hpp"

using namespace qha;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("empty file gives the defaults") {
    const RunConfig c = parse("");
    CHECK(c.truncation_degree == 16);
    CHECK(c.radial_order == 64);
    CHECK(c.angular_order == 128);
    CHECK(c.circle_order == 32);
    CHECK(c.cutoff == 0.999);
    CHECK(c.beta == 0.5);
    CHECK(c.seed == 42u);
    CHECK(c.r_grid == std::vector<double>{0.5, 0.7, 0.9});
  }

  TEST_CASE("values, comments and whitespace") {
    const RunConfig c = parse("# comment\ntruncation_degree = 8\n  beta=0.25   # trailing\n\nr_grid = 0.1, 0.2\n");
    CHECK(c.truncation_degree == 8);
    CHECK(c.beta == 0.25);
    CHECK(c.r_grid == std::vector<double>{0.1, 0.2});
  }

  TEST_CASE("invalid configurations") {
    CHECK_THROWS_AS(parse("beta = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse("r_grid = 0.9,0.5\n"), ConfigError);
    CHECK_THROWS_AS(parse("r_grid = 0.5,1.0\n"), ConfigError);
    CHECK_THROWS_AS(parse("cutoff = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("truncation_degree = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse("truncation_degree = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(parse("colour = red\n"), ConfigError);
    CHECK_THROWS_AS(parse("seed = 1\nseed = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse("just words\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/qha.cfg"), ConfigError);
  }

  TEST_CASE("suites are deterministic") {
    RunConfig c;
    c.truncation_degree = 6;
    const SuiteResult a = run_suite("identities", c);
    const SuiteResult b = run_suite("identities", c);
    CHECK(a.csv == b.csv);
    CHECK(a.passed());
    CHECK_THROWS_AS(run_suite("nonsense", c), InvalidParameter);
  }

  TEST_CASE("convergence plot") {
    const ConvergenceTable table{{0.5, 0.8, 1.0, 1.0, 1.0, true}, {0.9, 0.4, 0.5, 0.5, 0.25, false}};
    const std::string svg = convergence_svg(table);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg == convergence_svg(table));
  }
}
