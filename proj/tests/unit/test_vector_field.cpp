#include <random>

#include "doctest.h"
#include "gsvkit/error.hpp"
#include "gsvkit/germ.hpp"
#include "gsvkit/text.hpp"
#include "gsvkit/vector_field.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gsvkit;

namespace {

VectorFieldGerm V(std::initializer_list<const char*> comps, const Variables& vars = XYZ) {
  std::vector<Polynomial> ps;
  for (auto c : comps) ps.push_back(P(c, vars));
  return VectorFieldGerm(std::move(ps));
}

VectorFieldGerm worked_example_field() {
  return V({kWorkedGerm, "2z", "-(7y^6 + 5x*y^4)"});
}

void check_cofactor(const VectorFieldGerm& v, const HypersurfaceGerm& g, const Cofactor& k) {
  CHECK(evaluate_at_origin(k.unit) != 0);
  CHECK(k.unit * apply(v, g.f()) == k.numerator * g.f());
}

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(V({"x", "y"}, XY), P("x*y", XY)) == P("2x*y", XY));
  const Polynomial f = P(kWorkedGerm);
  CHECK(apply(worked_example_field(), f) == partial_derivative(f, 0) * f);
  CHECK(apply(worked_example_field(), P("7")).is_zero());
  CHECK_THROWS_AS(apply(V({"x", "y"}, XY), f), Error);
}

TEST_CASE("tangency cofactors") {
  const HypersurfaceGerm g(P(kWorkedGerm));
  Cofactor k = tangency_cofactor(worked_example_field(), g);
  CHECK(k.numerator == P("3x^2 + y^5"));
  CHECK(k.unit == P("1"));

  const HypersurfaceGerm cusp(P("x^3 + y^5", XY));
  Cofactor e = tangency_cofactor(V({"1/3x", "1/5y"}, XY), cusp);
  CHECK(e.numerator == P("1", XY));
  CHECK(e.unit == P("1", XY));

  CHECK_THROWS_AS(tangency_cofactor(V({"1", "0"}, XY), cusp), Error);
  try {
    tangency_cofactor(V({"1", "0"}, XY), cusp);
  } catch (const Error& err) {
    CHECK(err.reason() == Reason::not_tangent);
  }
}

TEST_CASE("a cofactor with a nontrivial unit") {
  // f = x^2 (1 - x) and v(f) = 2x^2 - 3x^3, so k = (2 - 3x) / (1 - x).
  const HypersurfaceGerm g(P("x^2 - x^3", XY));
  const VectorFieldGerm v = V({"x", "0"}, XY);
  Cofactor k = tangency_cofactor(v, g);
  check_cofactor(v, g, k);
  CHECK(k.unit != P("1", XY));
}

TEST_CASE("trivial tangent family") {
  const HypersurfaceGerm g(P(kWorkedGerm));
  auto fam = trivial_tangent_fields(g);
  CHECK(fam.size() == 6);
  for (const auto& v : fam) check_cofactor(v, g, tangency_cofactor(v, g));
  // f e_x + h_yz reproduces the worked example's field.
  CHECK(fam[0] + hamiltonian_field(g, 1, 2) == worked_example_field());

  const HypersurfaceGerm q(P("x^2 + y^2", XY));
  const VectorFieldGerm h = hamiltonian_field(q, 0, 1);
  CHECK(h == V({"2y", "-2x"}, XY));
  CHECK(apply(h, q.f()).is_zero());
  CHECK(tangency_cofactor(h, q).numerator.is_zero());
}

TEST_CASE("nondegeneracy and isolated zero dimension") {
  CHECK(nondegenerate_at_origin(V({"x", "y", "z"})));
  CHECK_FALSE(nondegenerate_at_origin(V({"x^2", "y"}, XY)));
  CHECK(nondegenerate_at_origin(V({"1/2x", "1/2y", "1/2z"})));
  CHECK(isolated_zero_dimension(worked_example_field()) == Dimension(18));
  CHECK(isolated_zero_dimension(V({"x", "y", "z"})) == Dimension(1));
  CHECK(isolated_zero_dimension(V({"x^2", "y^3"}, XY)) == Dimension(6));
  CHECK_THROWS_AS(nondegenerate_at_origin(V({"1 + x", "y"}, XY)), Error);
  CHECK_THROWS_AS(isolated_zero_dimension(V({"1 + x", "y"}, XY)), Error);
  CHECK(determinant({{Rational(2), Rational(1)}, {Rational(4), Rational(2)}}) == 0);
  CHECK(determinant({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == -1);
}

TEST_CASE("closure, scaling and nondegeneracy properties on random combinations") {
  const HypersurfaceGerm g(P(kWorkedGerm));
  const auto fam = trivial_tangent_fields(g);
  std::vector<Cofactor> ks;
  for (const auto& v : fam) ks.push_back(tangency_cofactor(v, g));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, fam.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t i = pick(rng), j = pick(rng);
    const Polynomial p = oracle::random_poly(rng, 3, 0, 2, 2), q = oracle::random_poly(rng, 3, 0, 2, 2);
    const VectorFieldGerm w = p * fam[i] + q * fam[j];
    Cofactor k = tangency_cofactor(w, g);
    check_cofactor(w, g, k);
    // Units are 1 for this family, so the cofactor combines linearly.
    CHECK(k.numerator == p * ks[i].numerator + q * ks[j].numerator);
  }
  for (int trial = 0; trial < 20; ++trial) {
    VectorFieldGerm w(std::vector<Polynomial>(3, Polynomial(3)));
    for (const auto& v : fam) w = w + oracle::random_dense_poly(rng, 3, 2, 0.35) * v;
    if (!w.vanishes_at_origin()) continue;
    const Dimension d = isolated_zero_dimension(w);
    CHECK(isolated_zero_dimension(Rational(-3, 7) * w) == d);
    CHECK(nondegenerate_at_origin(w) == (d == Dimension(1)));
  }
  std::mt19937_64 rng2(37);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> comps;
    for (int c = 0; c < 3; ++c) comps.push_back(oracle::random_poly(rng2, 3, 1, 3, 3));
    VectorFieldGerm v(comps);
    CHECK(nondegenerate_at_origin(v) == (isolated_zero_dimension(v) == Dimension(1)));
  }
}
