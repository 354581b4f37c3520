#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gsvkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial in n+1 variables.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
  Exponent(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit Exponent(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const std::uint32_t> values() const noexcept { return e_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// True iff this monomial divides `other`.
  bool divides(const Exponent& other) const noexcept;
  bool coprime(const Exponent& other) const noexcept;

  Exponent operator+(const Exponent& o) const;
  /// Quotient of monomials; requires o.divides(*this).
  Exponent operator-(const Exponent& o) const;
  Exponent lcm(const Exponent& o) const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

/// Total orders on exponent vectors. Local orders have 1 as the largest
/// monomial and drive all computations in the local ring; the global
/// order is used for canonical storage and printing.
class MonomialOrder {
 public:
  enum class Kind { global_degrevlex, local_degrevlex, local_weighted };

  static MonomialOrder global_degrevlex() { return MonomialOrder(Kind::global_degrevlex, {}); }
  /// Anti-graded order: lower total degree is larger, ties broken by revlex.
  static MonomialOrder local() { return MonomialOrder(Kind::local_degrevlex, {}); }
  /// Anti-graded by the weighted degree sum w_i a_i, ties broken by revlex.
  static MonomialOrder weighted(std::vector<std::uint32_t> weights);

  Kind kind() const noexcept { return kind_; }
  bool is_local() const noexcept { return kind_ != Kind::global_degrevlex; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::vector<std::uint32_t> w) : kind_(k), weights_(std::move(w)) {}

  Kind kind_;
  std::vector<std::uint32_t> weights_;
};

/// Free-function form of MonomialOrder::compare; throws on length mismatch.
std::strong_ordering monomial_compare(const MonomialOrder& order, const Exponent& a,
                                      const Exponent& b);

struct Term {
  Exponent exponent;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are unique, nonzero and kept sorted in
/// descending global degrevlex order, so equal polynomials compare equal
/// term by term and print identically.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  /// Combines duplicates, drops zeros and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  long total_degree() const noexcept;
  /// Lowest total degree of a term (the order of vanishing); -1 for zero.
  long order() const noexcept;
  Rational constant_term() const;
  bool is_homogeneous() const noexcept;

  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Formal partial derivative with respect to variable i.
Polynomial partial_derivative(const Polynomial& p, std::size_t i);

/// Constant term, i.e. the value at the origin.
Rational evaluate_at_origin(const Polynomial& p);

/// Substitutes images[i] for variable i. All images share one arity,
/// which becomes the arity of the result.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images);

/// Value at a rational point.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

}  // namespace gsvkit
