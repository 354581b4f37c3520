#pragma once

#include <vector>

#include "gsvkit/germ.hpp"
#include "gsvkit/polynomial.hpp"
#include "gsvkit/standard_basis.hpp"

namespace gsvkit {

/// Ambient representative v = sum v_i d/dz_i of a vector field germ.
class VectorFieldGerm {
 public:
  explicit VectorFieldGerm(std::vector<Polynomial> components);

  std::size_t nvars() const noexcept { return components_.size(); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  bool vanishes_at_origin() const noexcept { return vanishes_; }

  VectorFieldGerm operator+(const VectorFieldGerm& o) const;
  /// Multiplication by a function germ.
  friend VectorFieldGerm operator*(const Polynomial& p, const VectorFieldGerm& v);
  friend VectorFieldGerm operator*(const Rational& c, const VectorFieldGerm& v);

  friend bool operator==(const VectorFieldGerm&, const VectorFieldGerm&) = default;

 private:
  std::vector<Polynomial> components_;
  bool vanishes_;
};

/// k = numerator / unit with unit * v(f) = numerator * f.
struct Cofactor {
  Polynomial numerator;
  Polynomial unit;
};

/// v(p) = sum v_i dp/dz_i.
Polynomial apply(const VectorFieldGerm& v, const Polynomial& p);

/// Cofactor of a tangent field, via the local normal form of v(f) against
/// <f>. Throws Reason::not_tangent when v(f) is not in <f> locally.
Cofactor tangency_cofactor(const VectorFieldGerm& v, const HypersurfaceGerm& g);

/// f e_i for each i, then the Hamiltonian fields
/// h_ij = (df/dz_j) e_i - (df/dz_i) e_j for i < j.
std::vector<VectorFieldGerm> trivial_tangent_fields(const HypersurfaceGerm& g);

/// Hamiltonian field h_ij of the trivial family.
VectorFieldGerm hamiltonian_field(const HypersurfaceGerm& g, std::size_t i, std::size_t j);

/// Matrix [dv_i/dz_j (0)].
std::vector<std::vector<Rational>> linear_part(const VectorFieldGerm& v);

/// Exact determinant by fraction-free elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

/// det of the linear part != 0. Requires v(0) = 0.
bool nondegenerate_at_origin(const VectorFieldGerm& v);

/// dim O/<v_1, ..., v_{n+1}>. Requires v(0) = 0.
Dimension isolated_zero_dimension(const VectorFieldGerm& v,
                                  const MonomialOrder& order = MonomialOrder::local());

}  // namespace gsvkit
