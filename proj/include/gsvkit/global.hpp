#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsvkit/germ.hpp"
#include "gsvkit/polynomial.hpp"

namespace gsvkit {

/// sum_{l=1}^{n+1} [1 - (1-d)^l], the degree-n Chern number of the virtual
/// tangent bundle of a degree-d hypersurface in P^{n+1}. Cross-checked
/// against binomial_chern_number before returning.
Integer theorem3_rhs(unsigned long n, unsigned long d);

/// sum_{l=0}^{n} C(n+2, n-l) (-1)^l d^{l+1}.
Integer binomial_chern_number(unsigned long n, unsigned long d);

/// (n+1) - sum_{l=1}^{n} (1-d)^l; n must be odd.
Integer corollary1_bound(unsigned long n, unsigned long d);

struct PolarDegree {
  Integer value;
  /// Negative value: the Milnor numbers cannot belong to one hypersurface.
  bool inconsistent = false;
};

/// (d-1)^{n+1} - total_mu.
PolarDegree polar_degree(unsigned long n, unsigned long d, const Integer& total_mu);

/// Affine germ of the homogeneous polynomial F at a point of the chart
/// {X_chart = 1}. `coords` lists the remaining coordinates in variable
/// order; the result is translated so the point sits at the origin.
Polynomial localize(const Polynomial& homogeneous, std::size_t chart, std::span<const Rational> coords);

struct SingularPoint {
  std::string label;
  HypersurfaceGerm germ;
};

struct ProjectiveHypersurfaceData {
  unsigned long n = 1;
  unsigned long d = 1;
  std::vector<SingularPoint> points;
};

struct PointInvariants {
  std::string label;
  std::uint64_t mu = 0;
  std::uint64_t tau = 0;
};

struct GlobalObstruction {
  Integer rhs;
  /// sum over points of 1 + (-1)^n tau_p, a lower bound for sum K.
  Integer sum_bound;
  std::size_t sing_count = 0;
  std::optional<Integer> cor1_bound;
  bool vector_field_excluded = false;
  Integer total_mu;
  PolarDegree polar;
  std::vector<PointInvariants> points;
};

/// Verifies every point (f(0) = 0, grad f(0) = 0, mu finite) and evaluates
/// the Chern-number and corollary obstructions. Throws
/// unverified_singular_point or non_isolated_germ.
GlobalObstruction global_obstruction_report(const ProjectiveHypersurfaceData& data);

struct CurvePoint {
  std::uint64_t mu = 0;
  std::uint64_t branches = 1;
};

struct CurveData {
  std::uint64_t genus = 0;
  std::vector<CurvePoint> points;
};

struct CurveReport {
  Integer chi;
  /// Sum of GSV and Poincare-Hopf indices: chi - sum mu.
  Integer total_index;
  bool admits_field_possible = false;
  bool rational_two_points = false;
};

CurveReport curve_check(const CurveData& c);

struct SurfaceReport {
  Integer chi_O;
  Integer c2_integral;
  bool theorem5_consistent = true;
  /// c2 > 0, so positive indices could account for it.
  bool positive_index_certificate = false;
};

SurfaceReport surface_chi_check(const Integer& q, const Integer& g, const Integer& kvir2);

}  // namespace gsvkit
