#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsvkit/germ.hpp"
#include "gsvkit/vector_field.hpp"

namespace gsvkit {

enum class Parity { odd, even };

/// Outcome of the homological index computation for one tangent field.
struct GsvReport {
  std::int64_t index = 0;
  /// 1 + (-1)^n tau.
  std::int64_t bound = 0;
  std::uint64_t mu = 0;
  std::uint64_t tau = 0;
  bool minimal = false;
  /// Linear part of the ambient representative is invertible.
  bool nondegenerate_extension = false;
  bool weighted_homogeneous_equiv = false;
  Parity parity = Parity::odd;
  /// Every quotient dimension that entered the index, by name:
  /// "f+v" for odd n, "v" and "k+v" for even n.
  std::vector<std::pair<std::string, std::uint64_t>> dimensions;
  /// For curves (n = 1) irreducibility of V is assumed, never checked.
  bool irreducibility_unchecked = false;

  friend bool operator==(const GsvReport&, const GsvReport&) = default;
};

/// GSV index of v restricted to V:
///   odd n:  dim O/<f, v> - tau
///   even n: dim O/<v> - dim O/<k, v> + tau
/// with k the tangency cofactor. Throws smooth_germ, non_isolated_germ,
/// field_not_vanishing, not_tangent, non_isolated_restriction or
/// unsupported_dimension (n = 0).
GsvReport gsv_index(const VectorFieldGerm& v, const HypersurfaceGerm& g);

/// 1 + (-1)^n tau; requires an isolated, non-smooth singularity.
std::int64_t min_index_bound(const HypersurfaceGerm& g);

struct MinimalityCertificate {
  bool index_minimal = false;
  bool extension_nondegenerate = false;
  /// The two sides agree. A false value is an engine bug.
  bool consistent = false;

  friend bool operator==(const MinimalityCertificate&, const MinimalityCertificate&) = default;
};

/// Computes index == bound and nondegeneracy of the linear part
/// independently. Built with GSVKIT_STRICT_CERTIFICATES, an inconsistent
/// result throws std::logic_error.
MinimalityCertificate minimality_certificate(const VectorFieldGerm& v, const HypersurfaceGerm& g);

struct SpecialIndices {
  /// 1 + (-1)^n mu: radial field on a homogeneous germ.
  std::int64_t radial_index = 0;
  /// 1 - mu: field transversal to the link.
  std::int64_t transversal_index = 0;
};

SpecialIndices special_index_formulas(const HypersurfaceGerm& g);

}  // namespace gsvkit
