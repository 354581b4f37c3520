#include "gsvkit/error.hpp"

namespace gsvkit {

std::string_view reason_name(Reason r) noexcept {
  switch (r) {
    case Reason::parse_error: return "parse-error";
    case Reason::unknown_variable: return "unknown-variable";
    case Reason::negative_exponent: return "negative-exponent";
    case Reason::index_out_of_range: return "index-out-of-range";
    case Reason::arity_mismatch: return "arity-mismatch";
    case Reason::order_mismatch: return "order-mismatch";
    case Reason::smooth_germ: return "smooth-germ";
    case Reason::non_isolated_germ: return "non-isolated-germ";
    case Reason::not_tangent: return "not-tangent";
    case Reason::non_isolated_restriction: return "non-isolated-restriction";
    case Reason::field_not_vanishing: return "field-not-vanishing";
    case Reason::not_quasi_homogeneous: return "not-quasi-homogeneous";
    case Reason::unsupported_dimension: return "unsupported-dimension";
    case Reason::even_dimension: return "even-dimension";
    case Reason::unverified_singular_point: return "unverified-singular-point";
    case Reason::invalid_data: return "invalid-data";
  }
  return "unknown";
}

}  // namespace gsvkit
