#include "doctest.h"
#include "gsvkit/error.hpp"
#include "gsvkit/global.hpp"
#include "gsvkit/text.hpp"
#include "helpers.hpp"

using namespace gsvkit;

TEST_CASE("theorem3_rhs") {
  CHECK(theorem3_rhs(1, 6) == -18);
  for (unsigned long n = 1; n <= 6; ++n) CHECK(theorem3_rhs(n, 1) == Integer(n + 1));
  CHECK(theorem3_rhs(2, 2) == 4);
  CHECK(theorem3_rhs(2, 3) == 9);
  for (unsigned long n = 1; n <= 8; ++n)
    for (unsigned long d = 1; d <= 12; ++d) CHECK(theorem3_rhs(n, d) == binomial_chern_number(n, d));
  CHECK_THROWS_AS(theorem3_rhs(0, 3), Error);
  CHECK_THROWS_AS(theorem3_rhs(1, 0), Error);
}

TEST_CASE("corollary1_bound") {
  CHECK(corollary1_bound(1, 6) == 7);
  CHECK(corollary1_bound(1, 1) == 2);
  CHECK(corollary1_bound(3, 3) == 10);
  CHECK_THROWS_AS(corollary1_bound(2, 3), Error);
}

TEST_CASE("corollary bound and Chern number differ by the polar correction for odd n") {
  // (n+1) - sum_{l<=n} (1-d)^l - [sum_{l<=n+1} 1 - (1-d)^l] = (1-d)^{n+1}.
  for (unsigned long n = 1; n <= 7; n += 2)
    for (unsigned long d = 1; d <= 10; ++d) {
      Integer power = 1;
      for (unsigned long l = 0; l <= n; ++l) power *= Integer(1) - Integer(d);
      CHECK(corollary1_bound(n, d) - theorem3_rhs(n, d) == power);
    }
}

TEST_CASE("polar_degree") {
  CHECK(polar_degree(1, 6, 18).value == 7);
  CHECK(polar_degree(1, 2, 0).value == 1);
  CHECK(polar_degree(1, 1, 0).value == 0);
  CHECK_FALSE(polar_degree(1, 1, 0).inconsistent);
  CHECK(polar_degree(1, 3, 5).inconsistent);
}

TEST_CASE("localize moves the point to the origin") {
  const Variables h({"X", "Y", "Z"});
  const Polynomial F = parse_poly("X^6 + Y^6 + Z^6 - 2X^3Y^3 - 2Y^3Z^3 - 2Z^3X^3", h);
  std::vector<Rational> pt{Rational(0), Rational(1)};
  const Polynomial f = localize(F, 1, pt);
  CHECK(evaluate_at_origin(f) == 0);
  CHECK(evaluate_at_origin(partial_derivative(f, 0)) == 0);
  CHECK(evaluate_at_origin(partial_derivative(f, 1)) == 0);
  CHECK(HypersurfaceGerm(f).mu() == Dimension(2));
  CHECK_THROWS_AS(localize(parse_poly("X + Y^2", h), 0, pt), Error);
  CHECK_THROWS_AS(localize(F, 3, pt), Error);
}

TEST_CASE("global_obstruction_report") {
  SUBCASE("smooth conic") {
    const GlobalObstruction r = global_obstruction_report({1, 2, {}});
    CHECK(r.rhs == 2);
    CHECK(r.sum_bound == 0);
    CHECK_FALSE(r.vector_field_excluded);
  }
  SUBCASE("cubic surface with one A1 point") {
    ProjectiveHypersurfaceData data{2, 3, {{"A1", HypersurfaceGerm(P("x^2 + y^2 + z^2"))}}};
    const GlobalObstruction r = global_obstruction_report(data);
    CHECK(r.sum_bound == 2);
    CHECK(r.rhs == 9);
    CHECK_FALSE(r.cor1_bound.has_value());
    CHECK_FALSE(r.vector_field_excluded);
  }
  SUBCASE("unverified and non-isolated points") {
    ProjectiveHypersurfaceData bad{1, 3, {{"p", HypersurfaceGerm(P("x + y^2", XY))}}};
    try {
      global_obstruction_report(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.reason() == Reason::unverified_singular_point);
    }
    ProjectiveHypersurfaceData line{1, 3, {{"p", HypersurfaceGerm(P("x^2*y", XY))}}};
    try {
      global_obstruction_report(line);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.reason() == Reason::non_isolated_germ);
    }
  }
}

TEST_CASE("curve_check") {
  CurveReport cusp = curve_check({0, {{2, 1}}});
  CHECK(cusp.chi == 2);
  CHECK(cusp.total_index == 0);
  CHECK(cusp.admits_field_possible);
  CHECK(cusp.rational_two_points);
  CurveReport elliptic = curve_check({1, {{1, 2}}});
  CHECK(elliptic.chi == -1);
  CHECK_FALSE(elliptic.admits_field_possible);
  CurveReport nodes = curve_check({0, {{1, 2}, {1, 2}, {1, 2}}});
  CHECK(nodes.chi == -1);
  CHECK_FALSE(nodes.admits_field_possible);
  CHECK_FALSE(curve_check({0, {{2, 1}, {2, 1}, {2, 1}}}).admits_field_possible);
  CHECK_THROWS_AS(curve_check({0, {}}), Error);
  CHECK_THROWS_AS(curve_check({0, {{1, 0}}}), Error);
}

TEST_CASE("curve total index decreases with mu") {
  for (std::uint64_t mu = 1; mu < 10; ++mu) {
    CurveData c{0, {{mu, 1}, {3, 2}}};
    CurveData bigger{0, {{mu + 2, 1}, {3, 2}}};
    CHECK(curve_check(c).total_index - curve_check(bigger).total_index == 2);
  }
}

TEST_CASE("surface_chi_check") {
  SurfaceReport a = surface_chi_check(0, 0, 0);
  CHECK(a.chi_O == 1);
  CHECK(a.c2_integral == 12);
  CHECK(a.theorem5_consistent);
  SurfaceReport b = surface_chi_check(2, 0, 0);
  CHECK(b.c2_integral == -12);
  CHECK(b.theorem5_consistent);
  CHECK_FALSE(b.positive_index_certificate);
  SurfaceReport c = surface_chi_check(1, 1, 3);
  CHECK(c.chi_O == 1);
  CHECK(c.c2_integral == 9);
  CHECK(c.theorem5_consistent);
  // With Kvir2 >= 0, c2 > 0 already forces g >= q.
  for (int q = 0; q < 5; ++q)
    for (int g = 0; g < 5; ++g)
      for (int k = -6; k < 30; k += 3) {
        const SurfaceReport r = surface_chi_check(q, g, k);
        CHECK(r.c2_integral == 12 * (1 - q + g) - k);
        if (k >= 0) CHECK(r.theorem5_consistent);
      }
  CHECK_THROWS_AS(surface_chi_check(-1, 0, 0), Error);
}
