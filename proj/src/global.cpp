#include "gsvkit/global.hpp"

#include <stdexcept>

#include "gsvkit/error.hpp"
#include "gsvkit/parallel.hpp"

namespace gsvkit {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void require_positive(unsigned long n, unsigned long d) {
  if (n < 1 || d < 1) throw Error(Reason::invalid_data, "need n >= 1 and d >= 1");
}

}  // namespace

Integer binomial_chern_number(unsigned long n, unsigned long d) {
  require_positive(n, d);
  Integer sum = 0;
  for (unsigned long l = 0; l <= n; ++l) {
    Integer term = binomial(n + 2, n - l) * ipow(d, l + 1);
    if (l % 2) sum -= term; else sum += term;
  }
  return sum;
}

Integer theorem3_rhs(unsigned long n, unsigned long d) {
  require_positive(n, d);
  const Integer base = Integer(1) - Integer(d);
  Integer sum = 0;
  for (unsigned long l = 1; l <= n + 1; ++l) sum += 1 - ipow(base, l);
  if (sum != binomial_chern_number(n, d)) throw std::logic_error("Chern number forms disagree");
  return sum;
}

Integer corollary1_bound(unsigned long n, unsigned long d) {
  require_positive(n, d);
  if (n % 2 == 0) throw Error(Reason::even_dimension, "the corollary bound needs odd n");
  const Integer base = Integer(1) - Integer(d);
  Integer sum = 0;
  for (unsigned long l = 1; l <= n; ++l) sum += ipow(base, l);
  return Integer(n + 1) - sum;
}

PolarDegree polar_degree(unsigned long n, unsigned long d, const Integer& total_mu) {
  require_positive(n, d);
  PolarDegree p;
  p.value = ipow(Integer(d) - 1, n + 1) - total_mu;
  p.inconsistent = p.value < 0;
  return p;
}

Polynomial localize(const Polynomial& homogeneous, std::size_t chart, std::span<const Rational> coords) {
  const std::size_t nv = homogeneous.nvars();
  if (chart >= nv) throw Error(Reason::index_out_of_range, "chart index out of range");
  if (coords.size() + 1 != nv) throw Error(Reason::arity_mismatch, "need one coordinate per affine variable");
  if (!homogeneous.is_homogeneous()) throw Error(Reason::invalid_data, "polynomial is not homogeneous");
  const std::size_t local = nv - 1;
  std::vector<Polynomial> images;
  for (std::size_t i = 0, a = 0; i < nv; ++i) {
    if (i == chart) {
      images.push_back(Polynomial::constant(local, 1));
    } else {
      images.push_back(Polynomial::variable(local, a) + Polynomial::constant(local, coords[a]));
      ++a;
    }
  }
  return compose(homogeneous, images);
}

GlobalObstruction global_obstruction_report(const ProjectiveHypersurfaceData& data) {
  require_positive(data.n, data.d);
  const std::size_t count = data.points.size();
  for (const auto& p : data.points) {
    if (p.germ.nvars() != data.n + 1)
      throw Error(Reason::arity_mismatch, "point '" + p.label + "' has the wrong number of variables");
    for (const auto& partial : p.germ.gradient())
      if (evaluate_at_origin(partial) != 0)
        throw Error(Reason::unverified_singular_point, "point '" + p.label + "' is not a singular point");
  }

  GlobalObstruction r;
  r.points.resize(count);
  parallel_for(count, [&](std::size_t i) {
    const auto& p = data.points[i];
    Dimension mu = p.germ.mu();
    if (!mu.finite()) throw Error(Reason::non_isolated_germ, "point '" + p.label + "' is not isolated");
    r.points[i] = {p.label, mu.value(), p.germ.tau().value()};
  });

  const bool even = data.n % 2 == 0;
  r.rhs = theorem3_rhs(data.n, data.d);
  r.sum_bound = 0;
  r.total_mu = 0;
  for (const auto& p : r.points) {
    r.sum_bound += even ? Integer(1 + Integer(p.tau)) : Integer(1 - Integer(p.tau));
    r.total_mu += Integer(p.mu);
  }
  r.sing_count = count;
  r.vector_field_excluded = r.rhs < r.sum_bound;
  if (!even) {
    r.cor1_bound = corollary1_bound(data.n, data.d);
    if (Integer(count) > *r.cor1_bound) r.vector_field_excluded = true;
  }
  r.polar = polar_degree(data.n, data.d, r.total_mu);
  return r;
}

CurveReport curve_check(const CurveData& c) {
  if (c.points.empty()) throw Error(Reason::invalid_data, "curve data needs at least one singular point");
  CurveReport r;
  Integer branch_excess = 0, total_mu = 0;
  for (const auto& p : c.points) {
    if (p.branches < 1) throw Error(Reason::invalid_data, "branch counts must be at least 1");
    branch_excess += Integer(p.branches - 1);
    total_mu += Integer(p.mu);
  }
  r.chi = Integer(2) - 2 * Integer(c.genus) - branch_excess;
  r.total_index = r.chi - total_mu;
  r.admits_field_possible = Integer(c.points.size()) <= r.chi;
  r.rational_two_points = c.genus == 0 && c.points.size() <= 2;
  return r;
}

SurfaceReport surface_chi_check(const Integer& q, const Integer& g, const Integer& kvir2) {
  if (q < 0 || g < 0) throw Error(Reason::invalid_data, "irregularity and genus are nonnegative");
  SurfaceReport r;
  r.chi_O = 1 - q + g;
  r.c2_integral = 12 * r.chi_O - kvir2;
  r.positive_index_certificate = r.c2_integral > 0;
  r.theorem5_consistent = !(r.c2_integral > 0 && kvir2 >= 0) || g >= q;
  return r;
}

}  // namespace gsvkit
