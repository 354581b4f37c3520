#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsvkit/cli.hpp"
#include "gsvkit/error.hpp"
#include "gsvkit/germ.hpp"
#include "gsvkit/global.hpp"
#include "gsvkit/gsv.hpp"
#include "gsvkit/problem.hpp"
#include "gsvkit/standard_basis.hpp"
#include "gsvkit/text.hpp"
#include "gsvkit/vector_field.hpp"

namespace py = pybind11;
using namespace gsvkit;

namespace {

py::int_ to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

py::object to_py(const Dimension& d) {
  if (!d.finite()) return py::none();
  return py::int_(d.value());
}

// Declared names, or the defaults implied by the texts.
Variables resolve_vars(const std::optional<std::vector<std::string>>& names, const std::string& f,
                       const std::optional<std::vector<std::string>>& v = std::nullopt) {
  if (names) return Variables(*names);
  ProblemFile p;
  p.local.f = f;
  p.local.v = v;
  return local_variables(p);
}

HypersurfaceGerm make_germ(const std::string& f, const Variables& vars, const std::string& order) {
  return HypersurfaceGerm(parse_poly(f, vars), parse_order(order, vars.size()));
}

VectorFieldGerm make_field(const std::vector<std::string>& v, const Variables& vars) {
  std::vector<Polynomial> comps;
  for (const auto& c : v) comps.push_back(parse_poly(c, vars));
  return VectorFieldGerm(std::move(comps));
}

}  // namespace

PYBIND11_MODULE(_gsvkit, m) {
  m.doc() = "Exact local and global invariants of hypersurface singularities";
  m.attr("__version__") = GSVKIT_VERSION;

  static py::exception<Error> error(m, "GsvError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, py::make_tuple(std::string(reason_name(e.reason())), e.what()));
    }
  });

  m.def(
      "milnor_number",
      [](const std::string& f, std::optional<std::vector<std::string>> vars, const std::string& order) {
        const Variables vs = resolve_vars(vars, f);
        return to_py(milnor_number(make_germ(f, vs, order)));
      },
      py::arg("f"), py::arg("vars") = py::none(), py::arg("order") = "local",
      "dim O/J(f); None when the singularity is not isolated.");

  m.def(
      "tjurina_number",
      [](const std::string& f, std::optional<std::vector<std::string>> vars, const std::string& order) {
        const Variables vs = resolve_vars(vars, f);
        return to_py(tjurina_number(make_germ(f, vs, order)));
      },
      py::arg("f"), py::arg("vars") = py::none(), py::arg("order") = "local");

  m.def(
      "classify_germ",
      [](const std::string& f, std::optional<std::vector<std::string>> vars) {
        const GermClass c = classify_germ(make_germ(f, resolve_vars(vars, f), "local"));
        py::dict d;
        d["smooth"] = c.smooth;
        d["isolated_singularity"] = c.isolated_singularity;
        d["weighted_homogeneous_equiv"] = c.weighted_homogeneous_equiv;
        return d;
      },
      py::arg("f"), py::arg("vars") = py::none());

  m.def(
      "quotient_dimension",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& vars, const std::string& order) {
        const Variables vs(vars);
        std::vector<Polynomial> ps;
        for (const auto& g : gens) ps.push_back(parse_poly(g, vs));
        return to_py(quotient_dimension(Ideal(vs.size(), std::move(ps)), parse_order(order, vs.size())));
      },
      py::arg("generators"), py::arg("vars"), py::arg("order") = "local",
      "dim O/I in the local ring at the origin; None when infinite.");

  m.def(
      "tangency_cofactor",
      [](const std::string& f, const std::vector<std::string>& v, std::optional<std::vector<std::string>> vars) {
        const Variables vs = resolve_vars(vars, f, v);
        const Cofactor k = tangency_cofactor(make_field(v, vs), make_germ(f, vs, "local"));
        return py::make_tuple(format_poly(k.numerator, vs), format_poly(k.unit, vs));
      },
      py::arg("f"), py::arg("v"), py::arg("vars") = py::none(),
      "(numerator, unit) with unit * v(f) = numerator * f.");

  m.def(
      "gsv_index",
      [](const std::string& f, const std::vector<std::string>& v, std::optional<std::vector<std::string>> vars,
         const std::string& order) {
        const Variables vs = resolve_vars(vars, f, v);
        const GsvReport r = gsv_index(make_field(v, vs), make_germ(f, vs, order));
        py::dict d;
        d["index"] = r.index;
        d["bound"] = r.bound;
        d["mu"] = r.mu;
        d["tau"] = r.tau;
        d["minimal"] = r.minimal;
        d["nondegenerate_extension"] = r.nondegenerate_extension;
        d["weighted_homogeneous_equiv"] = r.weighted_homogeneous_equiv;
        d["parity"] = r.parity == Parity::odd ? "odd" : "even";
        py::dict dims;
        for (const auto& [name, value] : r.dimensions) dims[py::str(name)] = value;
        d["dimensions"] = dims;
        return d;
      },
      py::arg("f"), py::arg("v"), py::arg("vars") = py::none(), py::arg("order") = "local");

  m.def(
      "euler_field",
      [](const std::string& f, const std::vector<std::string>& weights, std::optional<std::vector<std::string>> vars) {
        const Variables vs = resolve_vars(vars, f);
        std::vector<Rational> w;
        for (const auto& s : weights) w.push_back(parse_rational(s));
        const VectorFieldGerm e = euler_field(make_germ(f, vs, "local"), w);
        std::vector<std::string> out;
        for (const auto& c : e.components()) out.push_back(format_poly(c, vs));
        return out;
      },
      py::arg("f"), py::arg("weights"), py::arg("vars") = py::none());

  m.def("theorem3_rhs", [](unsigned long n, unsigned long d) { return to_py(theorem3_rhs(n, d)); },
        py::arg("n"), py::arg("d"));
  m.def("corollary1_bound", [](unsigned long n, unsigned long d) { return to_py(corollary1_bound(n, d)); },
        py::arg("n"), py::arg("d"));

  m.def(
      "run",
      [](const std::string& text, const std::string& command, const std::string& order, bool verify_oracle,
         const std::string& format) {
        auto cmd = parse_command(command);
        if (!cmd) throw Error(Reason::parse_error, "unknown command '" + command + "'");
        CliOptions o;
        o.order = order;
        o.verify_oracle = verify_oracle;
        o.format = format == "plain" ? OutputFormat::plain : OutputFormat::structured;
        RunResult r;
        {
          py::gil_scoped_release release;
          r = run(text, *cmd, o);
        }
        return py::make_tuple(r.exit_code, r.document, r.summary);
      },
      py::arg("text"), py::arg("command"), py::arg("order") = "local", py::arg("verify_oracle") = false,
      py::arg("format") = "structured", "Runs a CLI command on problem text: (exit_code, document, summary).");
}
