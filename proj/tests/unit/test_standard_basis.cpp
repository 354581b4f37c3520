#include <random>

#include "doctest.h"
#include "gsvkit/standard_basis.hpp"
#include "gsvkit/text.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gsvkit;

namespace {

Ideal I2(std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g, XY));
  return Ideal(2, ps);
}

Ideal I3(std::vector<Polynomial> gens) { return Ideal(3, std::move(gens)); }

std::vector<Polynomial> jacobian_and_f(const Polynomial& f) {
  std::vector<Polynomial> out{f};
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

}  // namespace

TEST_CASE("local_normal_form examples") {
  const auto local = MonomialOrder::local();
  SUBCASE("x against x") {
    std::vector<Polynomial> g{P("x", XY)};
    NormalForm nf = local_normal_form(P("x", XY), g, local);
    CHECK(nf.remainder.is_zero());
    CHECK(nf.unit == P("1", XY));
  }
  SUBCASE("x against x - x^2 needs the unit 1 - x") {
    std::vector<Polynomial> g{P("x - x^2", XY)};
    NormalForm nf = local_normal_form(P("x", XY), g, local, {.track_quotients = true});
    CHECK(nf.remainder.is_zero());
    CHECK(nf.unit == P("1 - x", XY));
    REQUIRE(nf.quotients.size() == 1);
    CHECK(nf.unit * P("x", XY) == nf.quotients[0] * g[0] + nf.remainder);
  }
  SUBCASE("y against x") {
    std::vector<Polynomial> g{P("x", XY)};
    NormalForm nf = local_normal_form(P("y", XY), g, local);
    CHECK(nf.remainder == P("y", XY));
    CHECK(nf.unit == P("1", XY));
  }
}

TEST_CASE("standard_basis examples") {
  StandardBasis a = standard_basis(I2({"x", "y"}));
  CHECK(a.basis() == std::vector<Polynomial>{P("x", XY), P("y", XY)});
  StandardBasis b = standard_basis(I2({"x^2", "y^3"}));
  CHECK(b.basis().size() == 2);
  CHECK(quotient_dimension(b) == Dimension(6));
  StandardBasis t = standard_basis(I3(jacobian_and_f(P(kWorkedGerm))));
  CHECK(standard_monomials(t).size() == 11);
}

TEST_CASE("quotient_dimension examples") {
  CHECK(quotient_dimension(I2({"x", "y"})) == Dimension(1));
  CHECK(quotient_dimension(I2({"x^2", "y^3"})) == Dimension(6));
  CHECK(quotient_dimension(I2({"x"})) == Dimension::infinite());
  CHECK(quotient_dimension(Ideal(2, {})) == Dimension::infinite());
  CHECK(quotient_dimension(I2({"1 + x", "y^7"})) == Dimension(0));
  CHECK(Dimension::infinite().str() == "INFINITE");
  // Units are invisible locally but not globally.
  CHECK(quotient_dimension(I2({"x - x^2", "y"})) == Dimension(1));
  CHECK(quotient_dimension(I2({"x - x^2", "y"}), MonomialOrder::global_degrevlex()) == Dimension(2));
}

TEST_CASE("ideal_membership examples") {
  CHECK(ideal_membership(P("x", XY), I2({"x - x^2"})));
  CHECK_FALSE(ideal_membership(P("1", XY), I2({"x", "y"})));
  CHECK(ideal_membership(P("x^3 + y^5", XY), I2({"3x^2", "5y^4"})));
  CHECK_FALSE(ideal_membership(P(kWorkedGerm), I3({P("3x^2 + y^5"), P("7y^6 + 5x*y^4"), P("2z")})));
}

TEST_CASE("staircase counts agree with brute-force enumeration on random monomial ideals") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> e(0, 5), pure(1, 6), extra(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Exponent> gens;
    std::vector<std::uint32_t> side(3);
    for (std::size_t i = 0; i < 3; ++i) {
      Exponent p(3);
      p[i] = side[i] = pure(rng);
      gens.push_back(p);
    }
    for (std::uint32_t k = extra(rng); k > 0; --k) gens.push_back(Exponent{e(rng), e(rng), e(rng)});
    const std::uint64_t expected = oracle::box_staircase(gens, side);
    CHECK(staircase_count(gens, 3) == Dimension(expected));
    CHECK(brute_force_staircase_count(gens, 3) == Dimension(expected));

    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(Polynomial::monomial(g));
    CHECK(quotient_dimension(I3(ps)) == Dimension(expected));
  }
  // Missing pure power.
  std::vector<Exponent> gens{{2, 0, 0}, {0, 3, 0}, {1, 1, 1}};
  CHECK(staircase_count(gens, 3) == Dimension::infinite());
}

TEST_CASE("local dimensions agree with the truncation oracle") {
  std::mt19937_64 rng(5);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(trial % 3 == 0 ? oracle::random_poly(rng, 3, 1, 4, 3) : oracle::random_dense_poly(rng, 3, 3, 0.2, 3, 1));
    Dimension d = quotient_dimension(I3(gens));
    auto ref = oracle::local_colength(gens, 3, 10);
    if (ref) {
      ++compared;
      CHECK(d == Dimension(*ref));
    } else {
      CHECK_FALSE(d.finite());
    }
  }
  CHECK(compared > 20);
  // The worked example's Tjurina ideal.
  CHECK(oracle::local_colength(jacobian_and_f(P(kWorkedGerm)), 3) == std::optional<std::uint64_t>(11));
}

TEST_CASE("membership is sound on random combinations") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_poly(rng, 3, 1, 3, 3));
    Polynomial p(3);
    for (const auto& g : gens) p += oracle::random_poly(rng, 3, 0, 2, 3) * g;
    CHECK(ideal_membership(p, I3(gens)));
  }
}

TEST_CASE("normal form contract") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, 1, 3, 3));
    const StandardBasis sb = standard_basis(I3(gens));
    const Polynomial p = oracle::random_poly(rng, 3, 0, 5, 4);
    NormalForm nf = local_normal_form(p, sb.basis(), MonomialOrder::local(), {.track_quotients = true});
    CHECK(evaluate_at_origin(nf.unit) != 0);
    if (!nf.remainder.is_zero()) {
      const Exponent lead = nf.remainder.leading_term(MonomialOrder::local()).exponent;
      for (const auto& l : sb.leading_exponents()) CHECK_FALSE(l.divides(lead));
    }
    if (nf.fully_reduced)
      for (const auto& t : nf.remainder.terms())
        for (const auto& l : sb.leading_exponents()) CHECK_FALSE(l.divides(t.exponent));
    if (nf.exact) {
      Polynomial rhs = nf.remainder;
      for (std::size_t i = 0; i < nf.quotients.size(); ++i) rhs += nf.quotients[i] * sb.basis()[i];
      CHECK(nf.unit * p == rhs);
    }
    // Re-reduction: u p - r lies in the ideal.
    CHECK(ideal_membership(nf.unit * p - nf.remainder, sb));
  }
}

TEST_CASE("every generator reduces to zero against its standard basis") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, 1, 4, 3));
    const StandardBasis sb = standard_basis(I3(gens));
    for (const auto& g : gens) CHECK(local_normal_form(g, sb.basis(), sb.order()).remainder.is_zero());
  }
}

TEST_CASE("local and global dimensions agree for homogeneous generators") {
  std::mt19937_64 rng(19);
  int finite = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<std::uint32_t> deg(1, 3);
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t d = deg(rng);
      gens.push_back(oracle::random_poly(rng, 3, d, d, 4));
    }
    const Dimension local = quotient_dimension(I3(gens));
    const Dimension global = quotient_dimension(I3(gens), MonomialOrder::global_degrevlex());
    if (global.finite()) {
      ++finite;
      CHECK(local == global);
    }
  }
  CHECK(finite > 10);
}

TEST_CASE("weighted order gives the same local dimensions") {
  std::mt19937_64 rng(23);
  const auto weighted = MonomialOrder::weighted({3, 2, 5});
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, 1, 4, 3));
    CHECK(quotient_dimension(I3(gens)) == quotient_dimension(I3(gens), weighted));
  }
}

TEST_CASE("high staircases and non-isolated ideals") {
  // Staircase top far above the generator degrees.
  CHECK(quotient_dimension(I2({"x^2 + y^11", "x*y"})) == Dimension(13));
  CHECK(quotient_dimension(I2({"x - y^2", "y^19 + x^10"})) == Dimension(19));
  const std::vector<Polynomial> mixed{P("x^3 + y^5 + x^2*y^4", XY), P("x*y^4 - y^9", XY)};
  const auto expected = oracle::local_colength(mixed, 2, 30);
  REQUIRE(expected.has_value());
  CHECK(quotient_dimension(Ideal(2, mixed)) == Dimension(*expected));

  CHECK(quotient_dimension(I2({"x*y", "x^2 + x*y^3"})) == Dimension::infinite());
  CHECK(quotient_dimension(I3({P("x*y"), P("x*z"), P("x^2 + y^3*x")})) == Dimension::infinite());
  CHECK(quotient_dimension(I3({P("z*(x + y^2)"), P("z*(y - x^3)"), P("x*y - z^2")})) == Dimension::infinite());
  const Polynomial g = P("x^2 + y^3 + z^5 + x*y*z");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(P("x") * partial_derivative(g, i));
  CHECK(quotient_dimension(I3(gens)) == Dimension::infinite());
}
