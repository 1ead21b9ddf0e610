#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lambertx/compare.hpp"
#include "lambertx/errors.hpp"
#include "lambertx/oracle.hpp"

using namespace lambertx;
using namespace lambertx::oracle;
using Catch::Approx;

TEST_CASE("ScalarFnSpec evaluates the three gap functions", "[oracle]") {
  CHECK(ScalarFnSpec::w_residual(0.5)(1.0) == Approx(std::exp(1.0) - 0.5));
  CHECK(ScalarFnSpec::diagonal_gap(2.0)(3.0) == Approx(5.0));
  CHECK(ScalarFnSpec::full_gap(2.0)(4.0) == Approx(14.0));
}

TEST_CASE("scan_sign_changes", "[oracle]") {
  SECTION("two roots of w e^w = -0.25") {
    const auto scan = scan_sign_changes(ScalarFnSpec::w_residual(-0.25), -10, 2, 10000);
    REQUIRE(scan.brackets.size() == 2);
    CHECK(scan.brackets[0].lo < scan.brackets[1].lo);
    CHECK(scan.skipped_panels == 0);
  }
  SECTION("one root of w e^w = 2.5") {
    CHECK(scan_sign_changes(ScalarFnSpec::w_residual(2.5), -10, 2, 10000).brackets.size() == 1);
  }
  SECTION("no diagonal root for b = 3") {
    CHECK(scan_sign_changes(ScalarFnSpec::diagonal_gap(3), 0.001, 50, 10000).brackets.empty());
  }
  SECTION("exact zero on a node gives a degenerate bracket") {
    // w e^w = 0 has its root at w = 0, which is the middle node.
    const auto scan = scan_sign_changes(ScalarFnSpec::w_residual(0.0), -1, 1, 4);
    REQUIRE(scan.brackets.size() == 1);
    CHECK(scan.brackets[0].lo == 0.0);
    CHECK(scan.brackets[0].hi == 0.0);
  }
  SECTION("non-finite values skip panels") {
    const auto scan = scan_sign_changes(ScalarFnSpec::w_residual(1.0), 0.0, 1000.0, 10);
    CHECK(scan.skipped_panels > 0);
    CHECK(scan.brackets.size() == 1);
  }
  SECTION("malformed input") {
    CHECK_THROWS_AS(scan_sign_changes(ScalarFnSpec::w_residual(1), 1, 0, 10), DomainError);
    CHECK_THROWS_AS(scan_sign_changes(ScalarFnSpec::w_residual(1), 0, 1, 1), DomainError);
    CHECK_THROWS_AS(scan_sign_changes(ScalarFnSpec::full_gap(2), 0, 1, 10), DomainError);
    CHECK_THROWS_AS(scan_sign_changes(ScalarFnSpec::full_gap(1), 0.1, 1, 10), DomainError);
  }
}

TEST_CASE("bisect", "[oracle]") {
  SECTION("near the branch point") {
    const auto f = ScalarFnSpec::w_residual(-1.0 / std::exp(1.0) + 1e-6);
    const double r = bisect(f, {-1.0, 0.0, f(-1.0), f(0.0)}, 1e-12);
    // Frozen from this routine; the 40-digit root is -0.99767016627198888.
    CHECK(r == Approx(-0.9976701662719889).margin(1e-12));
  }
  SECTION("b = 1.3 diagonal roots") {
    const auto g = ScalarFnSpec::diagonal_gap(1.3);
    CHECK(bisect(g, {1.4, 1.6, g(1.4), g(1.6)}, 1e-12) == Approx(1.47).margin(0.005));
    CHECK(bisect(g, {7.8, 8.0, g(7.8), g(8.0)}, 1e-12) == Approx(7.86).margin(0.005));
    CHECK(bisect(g, {7.8, 8.0, g(7.8), g(8.0)}, 1e-12) ==
          Approx(7.8570653511643174568).margin(1e-11));
  }
  SECTION("invalid brackets") {
    const auto g = ScalarFnSpec::diagonal_gap(1.3);
    CHECK_THROWS_AS(bisect(g, {2.0, 3.0, g(2.0), g(3.0)}, 1e-12), DomainError);
    CHECK_THROWS_AS(bisect(g, {3.0, 2.0, 1.0, -1.0}, 1e-12), DomainError);
    CHECK_THROWS_AS(bisect(g, {1.4, 1.6, g(1.4), g(1.6)}, 0.0), DomainError);
  }
  SECTION("degenerate bracket returns its node") {
    const auto f = ScalarFnSpec::w_residual(0.0);
    CHECK(bisect(f, {0.0, 0.0, 0.0, 0.0}, 1e-12) == 0.0);
  }
}

TEST_CASE("bracket soundness", "[oracle][property]") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double b = 0.1 + unit(rng) * 1.3;
    if (std::abs(b - 1.0) < 1e-3) continue;
    const auto spec = ScalarFnSpec::full_gap(b);
    for (const RootBracket& br : scan_sign_changes(spec, 1e-9, 60, 2000).brackets) {
      const double r = bisect(spec, br, 1e-12);
      REQUIRE(r >= br.lo);
      REQUIRE(r <= br.hi);
      REQUIRE(std::abs(spec(r)) <= std::abs(br.f_lo));
      REQUIRE(std::abs(spec(r)) <= std::abs(br.f_hi));
    }
  }
}

TEST_CASE("all_intersections_numeric", "[oracle]") {
  const auto r13 = all_intersections_numeric(1.3, 20, 20000, 1e-10);
  REQUIRE(r13.size() == 2);
  CHECK(r13[0] == Approx(1.47).margin(0.005));
  CHECK(r13[1] == Approx(7.86).margin(0.005));

  const auto r08 = all_intersections_numeric(0.8, 5, 20000, 1e-10);
  REQUIRE(r08.size() == 1);
  CHECK(r08[0] == Approx(0.83).margin(0.005));

  CHECK(all_intersections_numeric(constants::kE, 50, 20000, 1e-10).empty());
  CHECK_THROWS_AS(all_intersections_numeric(1.3, 0.0, 100, 1e-10), DomainError);
}

TEST_CASE("resolution monotonicity", "[oracle][property]") {
  const double tb = std::exp(1.0 / constants::kE);
  for (double b : {0.8, 1.3, tb - 0.01, tb + 0.01}) {
    std::size_t prev = 0;
    for (std::size_t n : {1000u, 2000u, 4000u, 8000u, 16000u, 32000u}) {
      const std::size_t count = all_intersections_numeric(b, 50, n, 1e-12).size();
      INFO("b = " << b << ", n = " << n);
      CHECK(count >= prev);
      prev = count;
    }
  }
}

TEST_CASE("tangency shows up as a grid minimum, not a bracket", "[oracle]") {
  const double tb = std::exp(1.0 / constants::kE);
  const auto spec = ScalarFnSpec::full_gap(tb);
  const GridMinimum m = min_abs_on_grid(spec, 2.0, 3.5, 15000);
  CHECK(m.abs_value <= 1e-6);
  CHECK(m.x == Approx(constants::kE).margin(1e-3));
}

TEST_CASE("compare_with_closed_form", "[oracle][compare]") {
  SECTION("b = 1.3") {
    const auto v = compare_with_closed_form(Base(1.3));
    CHECK(v.pairs.size() == 2);
    CHECK(v.max_delta <= 1e-8);
    CHECK_FALSE(v.count_mismatch);
    CHECK(v.x_max == 50.0);
    CHECK(compare_with_closed_form(Base(1.1)).x_max > 50.0);
  }
  SECTION("b = 2") {
    const auto v = compare_with_closed_form(Base(2.0));
    CHECK(v.oracle_roots.empty());
    CHECK(v.closed_form_roots.empty());
    CHECK_FALSE(v.count_mismatch);
    CHECK(v.x_max == 50.0);
  }
  SECTION("b = 0.8") {
    const auto v = compare_with_closed_form(Base(0.8));
    REQUIRE(v.pairs.size() == 1);
    CHECK(v.pairs[0].delta <= 1e-8);
    CHECK_FALSE(v.count_mismatch);
  }
  SECTION("mismatch is reported, not thrown") {
    // Off-diagonal intersections appear below b = e^(-e).
    const auto v = compare_with_closed_form(Base(0.01), 5.0, 200000);
    CHECK(v.pairs.size() == 1);
    CHECK(v.pairs[0].delta <= 1e-8);
    CHECK(v.count_mismatch);
    CHECK(v.unmatched_oracle.size() == 2);
  }
}

TEST_CASE("regime agreement for random bases", "[oracle][compare][property]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double tb = std::exp(1.0 / constants::kE);
  for (int i = 0; i < 50; ++i) {
    const double two = 1.0 + 1e-3 + unit(rng) * (tb - 1.0 - 2e-3);
    const auto v2 = compare_with_closed_form(Base(two));
    INFO("b = " << two);
    CHECK_FALSE(v2.count_mismatch);
    CHECK(v2.max_delta <= 1e-8);

    const double none = tb + 1e-3 + unit(rng) * 10.0;
    CHECK_FALSE(compare_with_closed_form(Base(none)).count_mismatch);

    const double below = std::exp(-std::exp(1.0)) + unit(rng) * (1.0 - 1e-3 - std::exp(-std::exp(1.0)));
    const auto v1 = compare_with_closed_form(Base(below));
    INFO("b = " << below);
    REQUIRE(v1.pairs.size() == 1);
    CHECK(v1.pairs[0].delta <= 1e-8);
  }
}
