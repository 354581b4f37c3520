#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsvkit/polynomial.hpp"

namespace gsvkit {

/// Ordered variable names of one problem.
class Variables {
 public:
  Variables() = default;
  explicit Variables(std::vector<std::string> names);

  /// x, y, z for up to three variables, z1 .. zN otherwise.
  static Variables defaults(std::size_t nvars);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

/// Parses `text` over `vars`. Accepts integer and rational coefficients,
/// + - * ^, parentheses and juxtaposition (`xy^5`). Adjacent letters are
/// split by longest match against the declared names.
Polynomial parse_poly(std::string_view text, const Variables& vars);

/// Canonical text: terms in descending degrevlex order, coefficient first,
/// factors juxtaposed (`3x^2y - 1/2z`). parse_poly(format_poly(p)) == p.
std::string format_poly(const Polynomial& p, const Variables& vars);

std::string format_rational(const Rational& q);
/// Accepts `int` or `int/uint`, surrounding whitespace ignored.
Rational parse_rational(std::string_view text);

}  // namespace gsvkit
