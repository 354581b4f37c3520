#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsvkit/polynomial.hpp"

namespace gsvkit {

/// A nonnegative integer or INFINITE.
class Dimension {
 public:
  constexpr explicit Dimension(std::uint64_t v) : value_(v) {}
  static constexpr Dimension infinite() { return Dimension(); }

  constexpr bool finite() const noexcept { return value_.has_value(); }
  /// Throws when infinite.
  std::uint64_t value() const;
  std::string str() const;

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  constexpr Dimension() = default;
  std::optional<std::uint64_t> value_;
};

class Ideal {
 public:
  /// Zero generators are dropped; all generators must have `nvars` variables.
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

 private:
  std::size_t nvars_;
  std::vector<Polynomial> gens_;
};

struct NormalFormOptions {
  /// Record combiners q_i with u*p = sum q_i g_i + remainder.
  bool track_quotients = false;
  /// Reduce tail monomials as well as the leading one.
  bool reduce_tail = true;
};

struct NormalForm {
  Polynomial remainder;
  /// Unit u with u(0) != 0.
  Polynomial unit;
  /// One per input generator when tracked and exact, else empty.
  std::vector<Polynomial> quotients;
  /// False when tail reduction stopped early; the leading monomial of the
  /// remainder is always irreducible.
  bool fully_reduced = true;
  /// False when the identity u*p = sum q_i g_i + r holds only modulo a power
  /// of the maximal ideal contained in <G>.
  bool exact = true;
};

/// Mora normal form in the localization at the origin: there is a unit u
/// with u*p - remainder in <G>, and the leading monomial of the remainder is
/// not divisible by any leading monomial of G. With reduce_tail the tail is
/// reduced too; when <LM(G)> has finite colength d this uses m^d in <G>.
NormalForm local_normal_form(const Polynomial& p, std::span<const Polynomial> generators,
                             const MonomialOrder& order, const NormalFormOptions& options = {});

class StandardBasis {
 public:
  StandardBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial> basis);

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<Exponent>& leading_exponents() const noexcept { return leading_; }

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<Exponent> leading_;
};

/// Standard basis of I under `order`. For local orders this is Mora's
/// tangent cone algorithm; for the global order it reduces to Buchberger.
StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::local());

/// Number of monomials outside the monomial ideal spanned by `leading`;
/// INFINITE unless every variable has a pure power among them.
Dimension staircase_count(std::span<const Exponent> leading, std::size_t nvars);

/// Same count by visiting every monomial of the bounding box of pure powers.
/// Used as an independent check; nullopt when the box exceeds `box_limit`.
std::optional<Dimension> brute_force_staircase_count(std::span<const Exponent> leading, std::size_t nvars,
                                                     std::uint64_t box_limit = 50'000'000);

/// The monomials outside the leading ideal (empty when infinite).
std::vector<Exponent> standard_monomials(const StandardBasis& sb);

/// dim_C O/I (local orders) or dim_C Q[z]/I (global order).
Dimension quotient_dimension(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::local());
Dimension quotient_dimension(const StandardBasis& sb);

/// Membership of p in I localized at the origin.
bool ideal_membership(const Polynomial& p, const Ideal& ideal,
                      const MonomialOrder& order = MonomialOrder::local());
bool ideal_membership(const Polynomial& p, const StandardBasis& sb);

}  // namespace gsvkit
