#include "gsvkit/vector_field.hpp"

#include <algorithm>

#include "gsvkit/error.hpp"

namespace gsvkit {

VectorFieldGerm::VectorFieldGerm(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(Reason::invalid_data, "vector field needs components");
  for (const auto& c : components_)
    if (c.nvars() != components_.size())
      throw Error(Reason::arity_mismatch, "vector field needs one component per variable");
  vanishes_ = std::all_of(components_.begin(), components_.end(),
                          [](const Polynomial& c) { return c.constant_term() == 0; });
}

VectorFieldGerm VectorFieldGerm::operator+(const VectorFieldGerm& o) const {
  if (o.nvars() != nvars()) throw Error(Reason::arity_mismatch, "fields of different arity");
  std::vector<Polynomial> c = components_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.components_[i];
  return VectorFieldGerm(std::move(c));
}

VectorFieldGerm operator*(const Polynomial& p, const VectorFieldGerm& v) {
  std::vector<Polynomial> c;
  for (const auto& comp : v.components_) c.push_back(p * comp);
  return VectorFieldGerm(std::move(c));
}

VectorFieldGerm operator*(const Rational& s, const VectorFieldGerm& v) {
  std::vector<Polynomial> c;
  for (const auto& comp : v.components_) c.push_back(comp * s);
  return VectorFieldGerm(std::move(c));
}

Polynomial apply(const VectorFieldGerm& v, const Polynomial& p) {
  if (p.nvars() != v.nvars()) throw Error(Reason::arity_mismatch, "field and function arity differ");
  Polynomial r(p.nvars());
  for (std::size_t i = 0; i < v.nvars(); ++i) {
    Polynomial d = partial_derivative(p, i);
    if (!d.is_zero()) r += v[i] * d;
  }
  return r;
}

Cofactor tangency_cofactor(const VectorFieldGerm& v, const HypersurfaceGerm& g) {
  const Polynomial vf = apply(v, g.f());
  if (g.f().is_zero()) throw Error(Reason::invalid_data, "f is zero");
  NormalFormOptions opts;
  opts.track_quotients = true;
  opts.reduce_tail = false;
  const Polynomial gens[] = {g.f()};
  NormalForm nf = local_normal_form(vf, gens, g.order(), opts);
  if (!nf.remainder.is_zero())
    throw Error(Reason::not_tangent, "v(f) is not a multiple of f near the origin (remainder has " +
                                         std::to_string(nf.remainder.size()) + " terms)");
  return Cofactor{std::move(nf.quotients.front()), std::move(nf.unit)};
}

VectorFieldGerm hamiltonian_field(const HypersurfaceGerm& g, std::size_t i, std::size_t j) {
  const std::size_t n = g.nvars();
  if (i >= n || j >= n || i == j) throw Error(Reason::index_out_of_range, "bad Hamiltonian indices");
  std::vector<Polynomial> c(n, Polynomial(n));
  c[i] = g.gradient()[j];
  c[j] = -g.gradient()[i];
  return VectorFieldGerm(std::move(c));
}

std::vector<VectorFieldGerm> trivial_tangent_fields(const HypersurfaceGerm& g) {
  const std::size_t n = g.nvars();
  std::vector<VectorFieldGerm> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> c(n, Polynomial(n));
    c[i] = g.f();
    out.emplace_back(std::move(c));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(hamiltonian_field(g, i, j));
  return out;
}

std::vector<std::vector<Rational>> linear_part(const VectorFieldGerm& v) {
  const std::size_t n = v.nvars();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : v[i].terms())
      if (t.exponent.degree() == 1)
        for (std::size_t j = 0; j < n; ++j)
          if (t.exponent[j] == 1) m[i][j] = t.coeff;
  return m;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

namespace {

void require_zero(const VectorFieldGerm& v) {
  if (!v.vanishes_at_origin())
    throw Error(Reason::field_not_vanishing, "vector field does not vanish at the origin");
}

}  // namespace

bool nondegenerate_at_origin(const VectorFieldGerm& v) {
  require_zero(v);
  return determinant(linear_part(v)) != 0;
}

Dimension isolated_zero_dimension(const VectorFieldGerm& v, const MonomialOrder& order) {
  require_zero(v);
  return quotient_dimension(Ideal(v.nvars(), v.components()), order);
}

}  // namespace gsvkit
