#include "gsvkit/gsv.hpp"

#include <array>
#include <stdexcept>

#include "gsvkit/error.hpp"
#include "gsvkit/parallel.hpp"

namespace gsvkit {

namespace {

std::int64_t sign(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

// Isolated, non-smooth singularity with n >= 1; returns (mu, tau).
std::pair<std::uint64_t, std::uint64_t> require_isolated(const HypersurfaceGerm& g) {
  if (g.nvars() < 2) throw Error(Reason::unsupported_dimension, "need n >= 1 (at least two variables)");
  Dimension mu = g.mu();
  if (!mu.finite()) throw Error(Reason::non_isolated_germ, "singularity is not isolated (mu infinite)");
  if (mu.value() == 0) throw Error(Reason::smooth_germ, "germ is smooth at the origin (mu = 0)");
  return {mu.value(), g.tau().value()};
}

std::uint64_t finite_or_throw(const Dimension& d, const char* what) {
  if (!d.finite())
    throw Error(Reason::non_isolated_restriction, std::string("dim O/<") + what + "> is infinite");
  return d.value();
}

}  // namespace

GsvReport gsv_index(const VectorFieldGerm& v, const HypersurfaceGerm& g) {
  auto [mu, tau] = require_isolated(g);
  if (v.nvars() != g.nvars()) throw Error(Reason::arity_mismatch, "field and germ arity differ");
  if (!v.vanishes_at_origin())
    throw Error(Reason::field_not_vanishing, "vector field does not vanish at the origin");
  const Cofactor k = tangency_cofactor(v, g);

  GsvReport r;
  r.mu = mu;
  r.tau = tau;
  const std::size_t n = g.n();
  r.parity = n % 2 == 0 ? Parity::even : Parity::odd;
  r.irreducibility_unchecked = n == 1;
  const std::size_t nv = g.nvars();

  if (r.parity == Parity::odd) {
    std::vector<Polynomial> gens{g.f()};
    gens.insert(gens.end(), v.components().begin(), v.components().end());
    const auto d = finite_or_throw(quotient_dimension(Ideal(nv, std::move(gens)), g.order()), "f, v");
    r.dimensions.emplace_back("f+v", d);
    r.index = std::int64_t(d) - std::int64_t(tau);
  } else {
    // <k, v> = <a, v> locally since k = a/u with u a unit.
    std::vector<Polynomial> with_k{k.numerator};
    with_k.insert(with_k.end(), v.components().begin(), v.components().end());
    const std::array<Ideal, 2> ideals{Ideal(nv, v.components()), Ideal(nv, std::move(with_k))};
    std::array<Dimension, 2> dims{Dimension::infinite(), Dimension::infinite()};
    parallel_for(2, [&](std::size_t i) { dims[i] = quotient_dimension(ideals[i], g.order()); });
    const auto dv = finite_or_throw(dims[0], "v");
    const auto dk = dims[1].value();  // <k,v> contains <v>
    r.dimensions.emplace_back("v", dv);
    r.dimensions.emplace_back("k+v", dk);
    r.index = std::int64_t(dv) - std::int64_t(dk) + std::int64_t(tau);
  }

  r.bound = 1 + sign(n) * std::int64_t(tau);
  r.minimal = r.index == r.bound;
  r.nondegenerate_extension = nondegenerate_at_origin(v);
  r.weighted_homogeneous_equiv = mu == tau;
  return r;
}

std::int64_t min_index_bound(const HypersurfaceGerm& g) {
  auto [mu, tau] = require_isolated(g);
  return 1 + sign(g.n()) * std::int64_t(tau);
}

MinimalityCertificate minimality_certificate(const VectorFieldGerm& v, const HypersurfaceGerm& g) {
  const GsvReport r = gsv_index(v, g);
  MinimalityCertificate c;
  c.index_minimal = r.index == r.bound;
  c.extension_nondegenerate = determinant(linear_part(v)) != 0;
  c.consistent = c.index_minimal == c.extension_nondegenerate;
#ifdef GSVKIT_STRICT_CERTIFICATES
  if (!c.consistent) throw std::logic_error("minimality certificate inconsistent");
#endif
  return c;
}

SpecialIndices special_index_formulas(const HypersurfaceGerm& g) {
  if (g.nvars() < 2) throw Error(Reason::unsupported_dimension, "need n >= 1 (at least two variables)");
  Dimension mu = g.mu();
  if (!mu.finite()) throw Error(Reason::non_isolated_germ, "singularity is not isolated (mu infinite)");
  const auto m = std::int64_t(mu.value());
  return {1 + sign(g.n()) * m, 1 - m};
}

}  // namespace gsvkit
