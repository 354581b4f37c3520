#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsvkit {

/// Machine-readable failure categories. The CLI reports these verbatim in
/// its `reason` field, so the spellings returned by reason_name() are stable.
enum class Reason {
  parse_error,
  unknown_variable,
  negative_exponent,
  index_out_of_range,
  arity_mismatch,
  order_mismatch,
  smooth_germ,
  non_isolated_germ,
  not_tangent,
  non_isolated_restriction,
  field_not_vanishing,
  not_quasi_homogeneous,
  unsupported_dimension,
  even_dimension,
  unverified_singular_point,
  invalid_data,
};

std::string_view reason_name(Reason r) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Parse failures carry the byte offset into the offending text.
class ParseError : public Error {
 public:
  ParseError(Reason reason, const std::string& what, std::size_t position)
      : Error(reason, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gsvkit
