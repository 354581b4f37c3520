#include "gsvkit/cli.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "gsvkit/error.hpp"
#include "gsvkit/germ.hpp"
#include "gsvkit/global.hpp"
#include "gsvkit/gsv.hpp"
#include "gsvkit/standard_basis.hpp"
#include "gsvkit/text.hpp"
#include "gsvkit/vector_field.hpp"

#ifndef GSVKIT_VERSION
#define GSVKIT_VERSION "0.0.0"
#endif

namespace gsvkit {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::invariants, "invariants"},
    {Command::index, "index"},
    {Command::tangency, "tangency"},
    {Command::bound, "bound"},
    {Command::theorem3, "theorem3"},
    {Command::curve, "curve"},
    {Command::surface, "surface"},
}};

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json dimension_json(const Dimension& d) {
  if (d.finite()) return Json(d.value());
  return Json(d.str());
}

std::string order_name(const CliOptions& o) { return o.order.empty() ? "local" : o.order; }

// Oracle bookkeeping for --verify-oracle.
struct Oracle {
  bool enabled = false;
  std::size_t checked = 0, skipped = 0;
  std::vector<std::string> mismatches;

  void check(const std::string& name, const Ideal& ideal, const MonomialOrder& order, const Dimension& expected) {
    if (!enabled) return;
    const StandardBasis sb = standard_basis(ideal, order);
    auto brute = brute_force_staircase_count(sb.leading_exponents(), ideal.nvars());
    if (!brute) {
      ++skipped;
      return;
    }
    ++checked;
    if (*brute != expected) mismatches.push_back(name + ": " + expected.str() + " vs " + brute->str());
  }

  void write(Json& doc) const {
    if (!enabled) return;
    Json o;
    o["checked"] = checked;
    o["skipped"] = skipped;
    o["agree"] = mismatches.empty();
    if (!mismatches.empty()) o["mismatches"] = mismatches;
    doc["oracle"] = std::move(o);
  }
};

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out += prefix + ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

std::string render(const Json& doc, OutputFormat format) {
  if (format == OutputFormat::structured) return doc.dump(2) + "\n";
  std::string out;
  flatten(doc, "", out);
  return out;
}

Json header(Command command, const CliOptions& options) {
  Json doc;
  doc["tool"] = "gsvkit";
  doc["version"] = GSVKIT_VERSION;
  doc["command"] = std::string(command_name(command));
  doc["input_sha256"] = options.input_digest;
  doc["order"] = order_name(options);
  doc["status"] = "ok";
  return doc;
}

RunResult finish(Json doc, int code, std::string summary, const CliOptions& options) {
  return {code, render(doc, options.format), std::move(summary)};
}

RunResult failure(Json doc, int code, const std::string& reason, const std::string& message,
                  const CliOptions& options) {
  doc["status"] = "error";
  doc["reason"] = reason;
  doc["message"] = message;
  return finish(std::move(doc), code, "error (" + reason + "): " + message, options);
}

int code_for(Reason r) {
  switch (r) {
    case Reason::parse_error:
    case Reason::unknown_variable:
    case Reason::negative_exponent:
    case Reason::order_mismatch:
    case Reason::arity_mismatch:
      return exit_code::usage;
    default:
      return exit_code::precondition;
  }
}

Json cofactor_json(const Cofactor& k, const Variables& vars) {
  Json c;
  c["numerator"] = format_poly(k.numerator, vars);
  c["unit"] = format_poly(k.unit, vars);
  c["value_at_origin"] = format_rational(evaluate_at_origin(k.numerator) / evaluate_at_origin(k.unit));
  return c;
}

std::vector<Polynomial> with_front(Polynomial first, const std::vector<Polynomial>& rest) {
  std::vector<Polynomial> out{std::move(first)};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// The field to analyse: v from the file, else the Euler field of `weights`.
VectorFieldGerm problem_field(const ProblemFile& p, const HypersurfaceGerm& g, Json& notes) {
  if (p.local.v) return local_field(p);
  if (p.local.weights) {
    notes.push_back("v is the Euler field for the given weights");
    return euler_field(g, *p.local.weights);
  }
  throw Error(Reason::parse_error, "problem needs 'v =' or 'weights =' for this command");
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (auto [c, s] : kCommands)
    if (s == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (auto [k, s] : kCommands)
    if (k == c) return s;
  return "?";
}

bool is_local_command(Command c) {
  return c == Command::invariants || c == Command::index || c == Command::tangency || c == Command::bound;
}

MonomialOrder parse_order(std::string_view spec, std::size_t nvars) {
  if (spec.empty() || spec == "local") return MonomialOrder::local();
  constexpr std::string_view prefix = "weighted:";
  if (!spec.starts_with(prefix))
    throw Error(Reason::order_mismatch, "order must be 'local' or 'weighted:w1,...'");
  std::vector<std::uint32_t> weights;
  std::string item;
  std::istringstream in{std::string(spec.substr(prefix.size()))};
  while (std::getline(in, item, ',')) {
    Rational w;
    try {
      w = parse_rational(item);
    } catch (const Error&) {
      throw Error(Reason::order_mismatch, "bad weight '" + item + "'");
    }
    if (w.get_den() != 1 || w <= 0 || !w.get_num().fits_uint_p())
      throw Error(Reason::order_mismatch, "weights must be positive integers");
    weights.push_back(std::uint32_t(w.get_num().get_ui()));
  }
  if (weights.size() != nvars)
    throw Error(Reason::order_mismatch, "order has " + std::to_string(weights.size()) + " weights for " +
                                            std::to_string(nvars) + " variables");
  return MonomialOrder::weighted(std::move(weights));
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

RunResult run_local(const ProblemFile& p, Command command, const CliOptions& options) {
  Json doc = header(command, options);
  Json notes = Json::array();
  Oracle oracle;
  oracle.enabled = options.verify_oracle;
  std::string summary;
  try {
    const Variables vars = local_variables(p);
    const MonomialOrder order = parse_order(options.order, vars.size());
    const HypersurfaceGerm g = local_germ(p, order);
    doc["variables"] = vars.names();
    doc["f"] = format_poly(g.f(), vars);
    doc["n"] = g.n();
    if (g.n() == 1) notes.push_back("irreducibility for n=1 unchecked");

    Json result;
    switch (command) {
      case Command::invariants: {
        const Dimension mu = g.mu();
        oracle.check("mu", Ideal(g.nvars(), g.gradient()), order, mu);
        result["mu"] = dimension_json(mu);
        if (mu == Dimension(0)) {
          doc["result"] = std::move(result);
          doc["notes"] = std::move(notes);
          oracle.write(doc);
          return failure(std::move(doc), exit_code::precondition, std::string(reason_name(Reason::smooth_germ)),
                         "germ is smooth at the origin (mu = 0)", options);
        }
        if (!mu.finite()) {
          doc["result"] = std::move(result);
          doc["notes"] = std::move(notes);
          oracle.write(doc);
          return failure(std::move(doc), exit_code::precondition,
                         std::string(reason_name(Reason::non_isolated_germ)), "singularity is not isolated",
                         options);
        }
        const Dimension tau = g.tau();
        oracle.check("tau", Ideal(g.nvars(), with_front(g.f(), g.gradient())), order, tau);
        const GermClass c = classify_germ(g);
        result["tau"] = dimension_json(tau);
        result["classification"] = {{"smooth", c.smooth},
                                    {"isolated_singularity", c.isolated_singularity},
                                    {"weighted_homogeneous_equiv", c.weighted_homogeneous_equiv}};
        if (g.n() >= 1) {
          const SpecialIndices s = special_index_formulas(g);
          result["radial_index"] = s.radial_index;
          result["transversal_index"] = s.transversal_index;
        }
        if (p.local.weights) {
          try {
            const VectorFieldGerm e = euler_field(g, *p.local.weights);
            Json comps = Json::array();
            for (const auto& c : e.components()) comps.push_back(format_poly(c, vars));
            result["euler_field"] = std::move(comps);
          } catch (const Error& e) {
            if (e.reason() != Reason::not_quasi_homogeneous) throw;
            notes.push_back("f is not quasi-homogeneous for the given weights");
          }
        }
        summary = "mu = " + mu.str() + ", tau = " + tau.str() +
                  (c.weighted_homogeneous_equiv ? " (weighted homogeneous)" : "");
        break;
      }
      case Command::tangency: {
        const VectorFieldGerm v = problem_field(p, g, notes);
        if (v.nvars() != g.nvars()) throw Error(Reason::arity_mismatch, "v and f have different arity");
        const Cofactor k = tangency_cofactor(v, g);
        result["tangent"] = true;
        result["cofactor"] = cofactor_json(k, vars);
        summary = "tangent, cofactor k = (" + format_poly(k.numerator, vars) + ") / (" +
                  format_poly(k.unit, vars) + ")";
        break;
      }
      case Command::bound: {
        const std::int64_t b = min_index_bound(g);
        result["tau"] = g.tau().value();
        result["bound"] = b;
        summary = "bound 1 + (-1)^n tau = " + std::to_string(b);
        break;
      }
      case Command::index: {
        const VectorFieldGerm v = problem_field(p, g, notes);
        if (v.nvars() != g.nvars()) throw Error(Reason::arity_mismatch, "v and f have different arity");
        const GsvReport r = gsv_index(v, g);
        const Cofactor k = tangency_cofactor(v, g);
        if (oracle.enabled) {
          oracle.check("mu", Ideal(g.nvars(), g.gradient()), order, Dimension(r.mu));
          oracle.check("tau", Ideal(g.nvars(), with_front(g.f(), g.gradient())), order, Dimension(r.tau));
          for (const auto& [name, value] : r.dimensions) {
            std::vector<Polynomial> gens = v.components();
            if (name == "f+v") gens = with_front(g.f(), gens);
            if (name == "k+v") gens = with_front(k.numerator, gens);
            oracle.check(name, Ideal(g.nvars(), std::move(gens)), order, Dimension(value));
          }
        }
        result["field"] = Json::array();
        for (const auto& c : v.components()) result["field"].push_back(format_poly(c, vars));
        result["parity"] = r.parity == Parity::odd ? "odd" : "even";
        result["mu"] = r.mu;
        result["tau"] = r.tau;
        result["cofactor"] = cofactor_json(k, vars);
        Json dims;
        for (const auto& [name, value] : r.dimensions) dims[name] = value;
        result["dimensions"] = std::move(dims);
        result["index"] = r.index;
        result["bound"] = r.bound;
        result["minimal"] = r.minimal;
        result["nondegenerate_extension"] = r.nondegenerate_extension;
        result["weighted_homogeneous_equiv"] = r.weighted_homogeneous_equiv;
        result["certificate"] = {{"index_minimal", r.minimal},
                                 {"extension_nondegenerate", r.nondegenerate_extension},
                                 {"consistent", r.minimal == r.nondegenerate_extension}};
        notes.push_back("index computed for the given extension of v");
        summary = "GSV index " + std::to_string(r.index) + ", bound " + std::to_string(r.bound) +
                  (r.minimal ? ", minimal" : ", not minimal");
        break;
      }
      default:
        throw Error(Reason::parse_error, "not a local command");
    }
    doc["status"] = "ok";
    doc["result"] = std::move(result);
  } catch (const Error& e) {
    doc["notes"] = std::move(notes);
    oracle.write(doc);
    return failure(std::move(doc), code_for(e.reason()), std::string(reason_name(e.reason())), e.what(), options);
  }
  doc["notes"] = std::move(notes);
  oracle.write(doc);
  if (!oracle.mismatches.empty())
    return failure(std::move(doc), exit_code::oracle_mismatch, "oracle-mismatch",
                   "brute-force staircase count disagrees", options);
  return finish(std::move(doc), exit_code::ok, summary, options);
}

RunResult run_global(const ProblemFile& p, Command command, const CliOptions& options) {
  Json doc = header(command, options);
  Json notes = Json::array();
  Oracle oracle;
  oracle.enabled = options.verify_oracle;
  std::string summary;
  try {
    Json result;
    switch (command) {
      case Command::theorem3: {
        if (!p.global) throw Error(Reason::parse_error, "problem has no [global] section");
        std::optional<MonomialOrder> order;
        if (p.global->n) order = parse_order(options.order, *p.global->n + 1);
        const ProjectiveHypersurfaceData data = global_data(p, order);
        const GlobalObstruction r = global_obstruction_report(data);
        if (oracle.enabled)
          for (std::size_t i = 0; i < data.points.size(); ++i) {
            const auto& g = data.points[i].germ;
            oracle.check(data.points[i].label + ".mu", Ideal(g.nvars(), g.gradient()), g.order(),
                         Dimension(r.points[i].mu));
            oracle.check(data.points[i].label + ".tau", Ideal(g.nvars(), with_front(g.f(), g.gradient())),
                         g.order(), Dimension(r.points[i].tau));
          }
        result["n"] = data.n;
        result["d"] = data.d;
        result["rhs"] = integer_json(r.rhs);
        result["sum_bound"] = integer_json(r.sum_bound);
        result["sing_count"] = r.sing_count;
        result["cor1_bound"] = r.cor1_bound ? integer_json(*r.cor1_bound) : Json(nullptr);
        result["vector_field_excluded"] = r.vector_field_excluded;
        result["total_mu"] = integer_json(r.total_mu);
        result["polar_degree"] = integer_json(r.polar.value);
        result["polar_inconsistent"] = r.polar.inconsistent;
        Json pts = Json::array();
        for (const auto& pt : r.points) pts.push_back({{"label", pt.label}, {"mu", pt.mu}, {"tau", pt.tau}});
        result["points"] = std::move(pts);
        notes.push_back("sum of local indices replaced by its lower bound sum(1 + (-1)^n tau)");
        notes.push_back("singular points are verified, not searched for; the list may be incomplete");
        if (r.polar.inconsistent) notes.push_back("polar degree negative: Milnor numbers are inconsistent");
        summary = std::string(r.vector_field_excluded ? "vector field excluded" : "no obstruction found") +
                  " (rhs " + r.rhs.get_str() + ", sum bound " + r.sum_bound.get_str() + ", " +
                  std::to_string(r.sing_count) + " points" +
                  (r.cor1_bound ? ", corollary bound " + r.cor1_bound->get_str() : "") + ")";
        break;
      }
      case Command::curve: {
        const CurveData c = curve_data(p);
        const CurveReport r = curve_check(c);
        result["g"] = c.genus;
        Json pts = Json::array();
        for (const auto& pt : c.points) pts.push_back({{"mu", pt.mu}, {"branches", pt.branches}});
        result["points"] = std::move(pts);
        result["chi"] = integer_json(r.chi);
        result["total_index"] = integer_json(r.total_index);
        result["admits_field_possible"] = r.admits_field_possible;
        result["rational_two_points"] = r.rational_two_points;
        notes.push_back("genus and branch counts are taken as given");
        summary = std::string(r.admits_field_possible ? "a vector field is possible" : "no vector field") +
                  " (chi " + r.chi.get_str() + ")";
        break;
      }
      case Command::surface: {
        if (!p.surface) throw Error(Reason::parse_error, "problem has no [surface] section");
        const auto& s = *p.surface;
        if (!s.q || !s.g || !s.kvir2) throw Error(Reason::parse_error, "[surface] needs q, g and Kvir2");
        const SurfaceReport r = surface_chi_check(*s.q, *s.g, *s.kvir2);
        result["q"] = integer_json(*s.q);
        result["g"] = integer_json(*s.g);
        result["Kvir2"] = integer_json(*s.kvir2);
        result["chi_O"] = integer_json(r.chi_O);
        result["c2_integral"] = integer_json(r.c2_integral);
        result["theorem5_consistent"] = r.theorem5_consistent;
        result["positive_index_certificate"] = r.positive_index_certificate;
        if (!r.positive_index_certificate) notes.push_back("no positive-index certificate");
        summary = "c2 = " + r.c2_integral.get_str() + (r.theorem5_consistent ? ", consistent" : ", inconsistent");
        break;
      }
      default:
        throw Error(Reason::parse_error, "not a global command");
    }
    doc["status"] = "ok";
    doc["result"] = std::move(result);
  } catch (const Error& e) {
    doc["notes"] = std::move(notes);
    oracle.write(doc);
    return failure(std::move(doc), code_for(e.reason()), std::string(reason_name(e.reason())), e.what(), options);
  }
  doc["notes"] = std::move(notes);
  oracle.write(doc);
  if (!oracle.mismatches.empty())
    return failure(std::move(doc), exit_code::oracle_mismatch, "oracle-mismatch",
                   "brute-force staircase count disagrees", options);
  return finish(std::move(doc), exit_code::ok, summary, options);
}

RunResult run(std::string_view problem_text, Command command, CliOptions options) {
  options.input_digest = sha256_hex(problem_text);
  ProblemFile p;
  try {
    p = parse_problem(problem_text);
  } catch (const Error& e) {
    return failure(header(command, options), exit_code::usage, std::string(reason_name(e.reason())), e.what(),
                   options);
  }
  try {
    return is_local_command(command) ? run_local(p, command, options) : run_global(p, command, options);
  } catch (const std::exception& e) {
    return failure(header(command, options), exit_code::internal, "internal-error", e.what(), options);
  }
}

}  // namespace gsvkit
