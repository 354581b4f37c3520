#include "gsvkit/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "gsvkit/error.hpp"

namespace gsvkit {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Reason::parse_error, "line " + std::to_string(line) + ": " + msg);
}

// Splits on commas outside parentheses.
std::vector<std::string> split_top(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) fail(line, "unbalanced ')'");
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail(line, "unbalanced '('");
  out.push_back(trim(cur));
  for (const auto& item : out)
    if (item.empty()) fail(line, "empty list item");
  return out;
}

Variables parse_names(std::string_view s, std::size_t line) {
  try {
    return Variables(split_top(s, line));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

Rational rational_value(std::string_view s, std::size_t line) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    fail(line, std::string("bad number '") + std::string(s) + "': " + e.what());
  }
}

Integer integer_value(std::string_view s, std::size_t line) {
  Rational q = rational_value(s, line);
  if (q.get_den() != 1) fail(line, "expected an integer");
  return q.get_num();
}

unsigned long count_value(std::string_view s, std::size_t line) {
  Integer z = integer_value(s, line);
  if (z < 0 || !z.fits_ulong_p()) fail(line, "expected a nonnegative integer");
  return z.get_ui();
}

template <class T>
void set_once(std::optional<T>& slot, T value, std::size_t line, std::string_view key) {
  if (slot) fail(line, "duplicate key '" + std::string(key) + "'");
  slot = std::move(value);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  enum class Section { local, global, curve, surface } section = Section::local;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t start_line = lineno;
    std::string line = raw.substr(0, raw.find('#'));
    while (!trim(line).empty() && trim(line).back() == '\\') {
      line = trim(line);
      line.pop_back();
      line = trim(line);
      if (!std::getline(in, raw)) fail(start_line, "continuation at end of file");
      ++lineno;
      line += " ";
      line += trim(raw.substr(0, raw.find('#')));
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(start_line, "malformed section header");
      std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (name == "global") {
        if (p.global) fail(start_line, "duplicate [global] section");
        p.global.emplace();
        section = Section::global;
      } else if (name == "curve") {
        if (p.curve) fail(start_line, "duplicate [curve] section");
        p.curve.emplace();
        section = Section::curve;
      } else if (name == "surface") {
        if (p.surface) fail(start_line, "duplicate [surface] section");
        p.surface.emplace();
        section = Section::surface;
      } else {
        fail(start_line, "unknown section [" + name + "]");
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) fail(start_line, "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.empty()) fail(start_line, "empty value for '" + key + "'");

    switch (section) {
      case Section::local: {
        auto& s = p.local;
        if (key == "vars") {
          set_once(s.vars, parse_names(value, start_line), start_line, key);
        } else if (key == "f") {
          set_once(s.f, value, start_line, key);
        } else if (key == "v") {
          if (value.front() != '(' || value.back() != ')') fail(start_line, "v must be written as (v1, ..., vn)");
          set_once(s.v, split_top(std::string_view(value).substr(1, value.size() - 2), start_line), start_line, key);
        } else if (key == "weights") {
          std::vector<Rational> w;
          for (const auto& item : split_top(value, start_line)) w.push_back(rational_value(item, start_line));
          set_once(s.weights, std::move(w), start_line, key);
        } else {
          fail(start_line, "unknown key '" + key + "'");
        }
        break;
      }
      case Section::global: {
        auto& s = *p.global;
        if (key == "n") {
          set_once(s.n, count_value(value, start_line), start_line, key);
        } else if (key == "d") {
          set_once(s.d, count_value(value, start_line), start_line, key);
        } else if (key == "hvars") {
          set_once(s.hvars, parse_names(value, start_line), start_line, key);
        } else if (key == "F") {
          set_once(s.homogeneous, value, start_line, key);
        } else if (key == "vars") {
          set_once(s.vars, parse_names(value, start_line), start_line, key);
        } else if (key == "point") {
          auto colon = value.find(':');
          if (colon == std::string::npos) fail(start_line, "expected 'point = <chart variable> : c1, c2, ...'");
          GlobalPointSpec spec;
          spec.line = start_line;
          spec.chart = trim(std::string_view(value).substr(0, colon));
          for (const auto& item : split_top(std::string_view(value).substr(colon + 1), start_line))
            spec.coords.push_back(rational_value(item, start_line));
          s.points.push_back(std::move(spec));
        } else if (key == "germ") {
          GlobalPointSpec spec;
          spec.kind = GlobalPointSpec::Kind::germ;
          spec.line = start_line;
          spec.germ = value;
          s.points.push_back(std::move(spec));
        } else {
          fail(start_line, "unknown key '" + key + "'");
        }
        break;
      }
      case Section::curve: {
        auto& s = *p.curve;
        if (key == "g") {
          set_once(s.genus, std::uint64_t(count_value(value, start_line)), start_line, key);
        } else if (key == "point") {
          auto items = split_top(value, start_line);
          if (items.size() != 2) fail(start_line, "expected 'point = mu, r'");
          CurvePoint cp{count_value(items[0], start_line), count_value(items[1], start_line)};
          if (cp.branches < 1) fail(start_line, "branch count must be at least 1");
          s.points.push_back(cp);
        } else {
          fail(start_line, "unknown key '" + key + "'");
        }
        break;
      }
      case Section::surface: {
        auto& s = *p.surface;
        if (key == "q") {
          set_once(s.q, integer_value(value, start_line), start_line, key);
        } else if (key == "g") {
          set_once(s.g, integer_value(value, start_line), start_line, key);
        } else if (key == "Kvir2") {
          set_once(s.kvir2, integer_value(value, start_line), start_line, key);
        } else {
          fail(start_line, "unknown key '" + key + "'");
        }
        break;
      }
    }
  }
  return p;
}

namespace {

// Arity implied by undeclared variables: z1..zN or x, y, z.
std::size_t infer_arity(const std::vector<std::string>& texts) {
  std::size_t xyz = 0, indexed = 0;
  for (const auto& t : texts) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      char c = t[i];
      if (c == 'z' && i + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[i + 1]))) {
        std::size_t j = i + 1;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        indexed = std::max<std::size_t>(indexed, std::stoul(t.substr(i + 1, j - i - 1)));
        i = j - 1;
      } else if (c == 'x') {
        xyz = std::max<std::size_t>(xyz, 1);
      } else if (c == 'y') {
        xyz = std::max<std::size_t>(xyz, 2);
      } else if (c == 'z') {
        xyz = std::max<std::size_t>(xyz, 3);
      }
    }
  }
  if (indexed > 0) return std::max<std::size_t>(indexed, 4);
  return std::max<std::size_t>(xyz, 1);
}

Polynomial parse_at(std::string_view text, const Variables& vars, std::size_t line, const char* what) {
  try {
    return parse_poly(text, vars);
  } catch (const ParseError& e) {
    const std::string where = line > 0 ? " (line " + std::to_string(line) + ")" : "";
    throw Error(e.reason(), std::string(what) + where + ": " + e.what());
  }
}

}  // namespace

Variables local_variables(const ProblemFile& p) {
  if (p.local.vars) return *p.local.vars;
  if (p.local.v) return Variables::defaults(p.local.v->size());
  std::vector<std::string> texts;
  if (p.local.f) texts.push_back(*p.local.f);
  return Variables::defaults(infer_arity(texts));
}

HypersurfaceGerm local_germ(const ProblemFile& p, const MonomialOrder& order) {
  if (!p.local.f) throw Error(Reason::parse_error, "problem has no 'f ='");
  const Variables vars = local_variables(p);
  Polynomial f = parse_at(*p.local.f, vars, 0, "f");
  return HypersurfaceGerm(std::move(f), order);
}

VectorFieldGerm local_field(const ProblemFile& p) {
  if (!p.local.v) throw Error(Reason::parse_error, "problem has no 'v ='");
  const Variables vars = local_variables(p);
  if (p.local.v->size() != vars.size())
    throw Error(Reason::parse_error, "v needs " + std::to_string(vars.size()) + " components");
  std::vector<Polynomial> comps;
  for (const auto& c : *p.local.v) comps.push_back(parse_at(c, vars, 0, "v"));
  return VectorFieldGerm(std::move(comps));
}

ProjectiveHypersurfaceData global_data(const ProblemFile& p, const std::optional<MonomialOrder>& order) {
  if (!p.global) throw Error(Reason::parse_error, "problem has no [global] section");
  const auto& s = *p.global;
  if (!s.n || !s.d) throw Error(Reason::parse_error, "[global] needs n and d");
  ProjectiveHypersurfaceData data;
  data.n = *s.n;
  data.d = *s.d;
  if (data.n < 1 || data.d < 1) throw Error(Reason::parse_error, "[global] needs n >= 1 and d >= 1");
  const MonomialOrder ord = order.value_or(MonomialOrder::local());

  const Variables hvars = s.hvars ? *s.hvars : Variables::defaults(data.n + 2);
  if (hvars.size() != data.n + 2) throw Error(Reason::parse_error, "hvars needs n + 2 names");
  const Variables gvars = s.vars ? *s.vars : Variables::defaults(data.n + 1);
  if (gvars.size() != data.n + 1) throw Error(Reason::parse_error, "[global] vars needs n + 1 names");

  std::optional<Polynomial> homogeneous;
  if (s.homogeneous) {
    homogeneous = parse_at(*s.homogeneous, hvars, 0, "F");
    if (!homogeneous->is_homogeneous() || homogeneous->total_degree() != long(data.d))
      throw Error(Reason::invalid_data, "F is not homogeneous of degree d");
  }

  std::size_t germ_count = 0;
  for (const auto& spec : s.points) {
    if (spec.kind == GlobalPointSpec::Kind::germ) {
      Polynomial f = parse_at(spec.germ, gvars, spec.line, "germ");
      if (evaluate_at_origin(f) != 0)
        throw Error(Reason::unverified_singular_point,
                    "germ on line " + std::to_string(spec.line) + " does not vanish at the origin");
      data.points.push_back({"germ#" + std::to_string(++germ_count), HypersurfaceGerm(std::move(f), ord)});
      continue;
    }
    if (!homogeneous) throw Error(Reason::parse_error, "line " + std::to_string(spec.line) + ": chart points need F");
    const auto& names = hvars.names();
    auto it = std::find(names.begin(), names.end(), spec.chart);
    if (it == names.end()) throw Error(Reason::parse_error, "line " + std::to_string(spec.line) + ": unknown chart variable");
    if (spec.coords.size() != data.n + 1)
      throw Error(Reason::parse_error, "line " + std::to_string(spec.line) + ": need n + 1 coordinates");
    Polynomial f = localize(*homogeneous, std::size_t(it - names.begin()), spec.coords);
    std::string label = spec.chart + ":";
    for (std::size_t i = 0; i < spec.coords.size(); ++i) label += (i ? "," : "") + format_rational(spec.coords[i]);
    if (evaluate_at_origin(f) != 0)
      throw Error(Reason::unverified_singular_point, "point " + label + " is not on V");
    data.points.push_back({label, HypersurfaceGerm(std::move(f), ord)});
  }
  return data;
}

CurveData curve_data(const ProblemFile& p) {
  if (!p.curve) throw Error(Reason::parse_error, "problem has no [curve] section");
  if (!p.curve->genus) throw Error(Reason::parse_error, "[curve] needs g");
  return CurveData{*p.curve->genus, p.curve->points};
}

}  // namespace gsvkit
