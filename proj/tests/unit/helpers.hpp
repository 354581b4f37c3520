#pragma once

#include <string>

#include "gsvkit/text.hpp"

inline gsvkit::Polynomial P(const std::string& text, const gsvkit::Variables& vars = gsvkit::Variables::defaults(3)) {
  return gsvkit::parse_poly(text, vars);
}

inline const gsvkit::Variables XY = gsvkit::Variables::defaults(2);
inline const gsvkit::Variables XYZ = gsvkit::Variables::defaults(3);

inline const char* const kWorkedGerm = "z^2 + x^3 + y^7 + x*y^5";
