#include "gsvkit/germ.hpp"

#include "gsvkit/error.hpp"
#include "gsvkit/vector_field.hpp"

namespace gsvkit {

HypersurfaceGerm::HypersurfaceGerm(Polynomial f, MonomialOrder order)
    : f_(std::move(f)), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
  if (f_.nvars() == 0) throw Error(Reason::invalid_data, "a germ needs at least one variable");
  if (evaluate_at_origin(f_) != 0) throw Error(Reason::invalid_data, "f does not vanish at the origin");
  if (!order_.is_local()) throw Error(Reason::invalid_data, "germ invariants need a local order");
  for (std::size_t i = 0; i < f_.nvars(); ++i) gradient_.push_back(partial_derivative(f_, i));
}

Dimension HypersurfaceGerm::mu() const {
  std::call_once(cache_->mu_once, [&] {
    cache_->mu = quotient_dimension(Ideal(nvars(), gradient_), order_);
  });
  return *cache_->mu;
}

Dimension HypersurfaceGerm::tau() const {
  std::call_once(cache_->tau_once, [&] {
    std::vector<Polynomial> gens{f_};
    gens.insert(gens.end(), gradient_.begin(), gradient_.end());
    cache_->tau = quotient_dimension(Ideal(nvars(), std::move(gens)), order_);
  });
  return *cache_->tau;
}

Dimension milnor_number(const HypersurfaceGerm& g) { return g.mu(); }

Dimension tjurina_number(const HypersurfaceGerm& g) { return g.tau(); }

GermClass classify_germ(const HypersurfaceGerm& g) {
  GermClass c;
  const Dimension mu = g.mu();
  c.smooth = mu == Dimension(0);
  c.isolated_singularity = mu.finite();
  c.weighted_homogeneous_equiv = mu.finite() && g.tau() == mu;
  return c;
}

VectorFieldGerm euler_field(const HypersurfaceGerm& g, const std::vector<Rational>& weights) {
  if (weights.size() != g.nvars())
    throw Error(Reason::arity_mismatch, "need one weight per variable");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw Error(Reason::invalid_data, "weights must be positive");
    comps.push_back(Polynomial::variable(g.nvars(), i) * weights[i]);
  }
  VectorFieldGerm e(std::move(comps));
  if (apply(e, g.f()) != g.f())
    throw Error(Reason::not_quasi_homogeneous, "f is not quasi-homogeneous for these weights");
  return e;
}

}  // namespace gsvkit
