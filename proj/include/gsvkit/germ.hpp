#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gsvkit/polynomial.hpp"
#include "gsvkit/standard_basis.hpp"

namespace gsvkit {

class VectorFieldGerm;

/// The germ at the origin of V = {f = 0} in C^{n+1}. Copies share the
/// lazily computed Milnor and Tjurina numbers.
class HypersurfaceGerm {
 public:
  /// Requires f(0) = 0 and at least one variable.
  explicit HypersurfaceGerm(Polynomial f, MonomialOrder order = MonomialOrder::local());

  const Polynomial& f() const noexcept { return f_; }
  std::size_t nvars() const noexcept { return f_.nvars(); }
  /// Dimension of V.
  std::size_t n() const noexcept { return f_.nvars() - 1; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Partial derivatives of f.
  const std::vector<Polynomial>& gradient() const noexcept { return gradient_; }

  Dimension mu() const;
  Dimension tau() const;

 private:
  struct Cache {
    std::once_flag mu_once, tau_once;
    std::optional<Dimension> mu, tau;
  };

  Polynomial f_;
  MonomialOrder order_;
  std::vector<Polynomial> gradient_;
  std::shared_ptr<Cache> cache_;
};

struct GermClass {
  bool smooth = false;
  bool isolated_singularity = false;
  /// Meaningful only for isolated singularities (mu == tau).
  bool weighted_homogeneous_equiv = false;

  friend bool operator==(const GermClass&, const GermClass&) = default;
};

/// dim O/J(f): 0 iff smooth, INFINITE iff the singularity is not isolated.
Dimension milnor_number(const HypersurfaceGerm& g);
/// dim O/<f, J(f)>.
Dimension tjurina_number(const HypersurfaceGerm& g);
/// Uses the mu = tau characterization for weighted homogeneity.
GermClass classify_germ(const HypersurfaceGerm& g);

/// The field sum w_i z_i d/dz_i when it satisfies E(f) = f exactly;
/// throws Reason::not_quasi_homogeneous otherwise.
VectorFieldGerm euler_field(const HypersurfaceGerm& g, const std::vector<Rational>& weights);

}  // namespace gsvkit
