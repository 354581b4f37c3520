#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsvkit/germ.hpp"
#include "gsvkit/global.hpp"
#include "gsvkit/text.hpp"
#include "gsvkit/vector_field.hpp"

namespace gsvkit {

// Problem files are line oriented:
//
//   # comment
//   vars = x, y, z
//   f = z^2 + x^3 + y^7 + x*y^5
//   v = (z^2 + x^3 + y^7 + x*y^5, 2z, -(7y^6 + 5x*y^4))
//   weights = 1/3, 1/5
//
//   [global]
//   n = 1
//   d = 6
//   hvars = X, Y, Z
//   F = X^6 + Y^6 + Z^6 - 2X^3Y^3 - 2Y^3Z^3 - 2Z^3X^3
//   point = Y : 0, 1        # chart Y = 1, remaining coordinates (X, Z)
//   vars = u, t             # names for inline germs
//   germ = 9t^2 - 4u^3      # germ already moved to the origin
//
//   [curve]
//   g = 0
//   point = 2, 1            # mu, branches
//
//   [surface]
//   q = 0
//   g = 0
//   Kvir2 = 0
//
// Keys before the first section header form the local problem. A trailing
// backslash continues a line.

struct LocalSection {
  std::optional<Variables> vars;
  std::optional<std::string> f;
  std::optional<std::vector<std::string>> v;
  std::optional<std::vector<Rational>> weights;
};

struct GlobalPointSpec {
  enum class Kind { chart, germ };
  Kind kind = Kind::chart;
  std::size_t line = 0;
  std::string chart;
  std::vector<Rational> coords;
  std::string germ;
};

struct GlobalSection {
  std::optional<unsigned long> n, d;
  std::optional<Variables> hvars;
  std::optional<std::string> homogeneous;
  std::optional<Variables> vars;
  std::vector<GlobalPointSpec> points;
};

struct CurveSection {
  std::optional<std::uint64_t> genus;
  std::vector<CurvePoint> points;
};

struct SurfaceSection {
  std::optional<Integer> q, g, kvir2;
};

struct ProblemFile {
  LocalSection local;
  std::optional<GlobalSection> global;
  std::optional<CurveSection> curve;
  std::optional<SurfaceSection> surface;
};

/// Throws Error(Reason::parse_error) naming the offending line.
ProblemFile parse_problem(std::string_view text);

/// Variables of the local problem (declared or default for f's arity).
Variables local_variables(const ProblemFile& p);
HypersurfaceGerm local_germ(const ProblemFile& p, const MonomialOrder& order);
VectorFieldGerm local_field(const ProblemFile& p);
ProjectiveHypersurfaceData global_data(const ProblemFile& p, const std::optional<MonomialOrder>& order);
CurveData curve_data(const ProblemFile& p);

}  // namespace gsvkit
