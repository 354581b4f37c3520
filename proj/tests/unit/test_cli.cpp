#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gsvkit/cli.hpp"
#include "gsvkit/error.hpp"
#include "gsvkit/problem.hpp"
#include "json.hpp"

using namespace gsvkit;
using Json = nlohmann::ordered_json;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GSVKIT_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<int, Json> run_json(const std::string& text, Command c, CliOptions o = {}) {
  RunResult r = run(text, c, o);
  return {r.exit_code, Json::parse(r.document)};
}

}  // namespace

TEST_CASE("problem file parsing") {
  ProblemFile p = parse_problem(
      "# comment\n"
      "vars = x, y, z\n"
      "f = z^2 + x^3 \\\n"
      "    + y^7 + x*y^5\n"
      "v = (f1(x), 2z, -(7y^6 + 5x*y^4))   # nested parentheses\n"
      "[surface]\nq = 1\ng = 2\nKvir2 = -3\n");
  CHECK(p.local.vars->size() == 3);
  CHECK(*p.local.f == "z^2 + x^3 + y^7 + x*y^5");
  CHECK(p.local.v->size() == 3);
  CHECK(p.local.v->at(0) == "f1(x)");
  CHECK(*p.surface->kvir2 == -3);
  CHECK_FALSE(p.global.has_value());

  CHECK_THROWS_AS(parse_problem("f = x\nf = y\n"), Error);
  CHECK_THROWS_AS(parse_problem("colour = red\n"), Error);
  CHECK_THROWS_AS(parse_problem("[elsewhere]\n"), Error);
  CHECK_THROWS_AS(parse_problem("v = x, y\n"), Error);
  CHECK_THROWS_AS(parse_problem("[curve]\npoint = 1\n"), Error);
  CHECK_THROWS_AS(parse_problem("f = x \\\n"), Error);
}

TEST_CASE("default variables follow the arity") {
  CHECK(local_variables(parse_problem("f = x^3 + y^5\n")).size() == 2);
  CHECK(local_variables(parse_problem("f = x^2 + y^2 + z^2\n")).size() == 3);
  CHECK(local_variables(parse_problem("f = z1^2 + z4^2\n")).size() == 4);
  CHECK(local_variables(parse_problem("f = y^2\nv = (0, y)\n")).size() == 2);
}

TEST_CASE("worked example through the driver") {
  auto [code, doc] = run_json(fixture("worked_example.gsv"), Command::index);
  CHECK(code == 0);
  CHECK(doc["status"] == "ok");
  const Json& r = doc["result"];
  CHECK(r["index"] == 18);
  CHECK(r["bound"] == 12);
  CHECK(r["minimal"] == false);
  CHECK(r["mu"] == 12);
  CHECK(r["tau"] == 11);
  CHECK(r["cofactor"]["numerator"] == "y^5 + 3x^2");
  CHECK(r["cofactor"]["unit"] == "1");
  CHECK(r["dimensions"]["v"] == 18);
  CHECK(r["dimensions"]["k+v"] == 11);
  CHECK(doc["input_sha256"].get<std::string>().size() == 64);

  auto [c2, inv] = run_json(fixture("worked_example.gsv"), Command::invariants);
  CHECK(c2 == 0);
  CHECK(inv["result"]["classification"]["weighted_homogeneous_equiv"] == false);
  auto [c3, tan] = run_json(fixture("worked_example.gsv"), Command::tangency);
  CHECK(c3 == 0);
  CHECK(tan["result"]["tangent"] == true);
  auto [c4, bnd] = run_json(fixture("worked_example.gsv"), Command::bound);
  CHECK(c4 == 0);
  CHECK(bnd["result"]["bound"] == 12);
}

TEST_CASE("A1 surface with the Euler field is minimal") {
  auto [code, doc] = run_json(fixture("a1_surface_euler.gsv"), Command::index);
  CHECK(code == 0);
  CHECK(doc["result"]["index"] == 2);
  CHECK(doc["result"]["bound"] == 2);
  CHECK(doc["result"]["minimal"] == true);
}

TEST_CASE("smooth germ exits with a reason") {
  auto [code, doc] = run_json(fixture("smooth.gsv"), Command::invariants);
  CHECK(code == exit_code::precondition);
  CHECK(doc["reason"] == "smooth-germ");
  CHECK(doc["result"]["mu"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("f = x^3 + \n", Command::invariants, {}).exit_code == exit_code::usage);
  CHECK(run("f = x^2*y\n", Command::invariants, {}).exit_code == exit_code::precondition);
  CHECK(run("f = x^3 + y^5\nv = (y, x)\n", Command::tangency, {}).exit_code == exit_code::precondition);
  CHECK(run("f = x^3 + y^5\n", Command::index, {}).exit_code == exit_code::usage);
  CHECK(run("f = x^3 + y^5\n", Command::theorem3, {}).exit_code == exit_code::usage);
  CliOptions bad_order;
  bad_order.order = "weighted:1,2,3";
  CHECK(run("f = x^3 + y^5\n", Command::invariants, bad_order).exit_code == exit_code::usage);
  auto [code, doc] = run_json("f = x^3 + y^5\nv = (y, x)\n", Command::index);
  CHECK(doc["reason"] == "not-tangent");
  auto [c2, d2] = run_json("[global]\nn = 1\nd = 3\nvars = x, y\ngerm = x + y^2\n", Command::theorem3);
  CHECK(c2 == exit_code::precondition);
  CHECK(d2["reason"] == "unverified-singular-point");
  auto [c3, d3] = run_json("[global]\nn = 1\nd = 3\nhvars = X, Y, Z\nF = X^3 + Y^3 + Z^3\npoint = Z : 1, 1\n",
                           Command::theorem3);
  CHECK(c3 == exit_code::precondition);
  CHECK(d3["reason"] == "unverified-singular-point");
}

TEST_CASE("verdicts never change the exit code") {
  auto [c1, sextic] = run_json(fixture("sextic.gsv"), Command::theorem3);
  CHECK(c1 == 0);
  CHECK(sextic["result"]["vector_field_excluded"] == true);
  CHECK(sextic["result"]["cor1_bound"] == 7);
  CHECK(sextic["result"]["sing_count"] == 9);
  CHECK(sextic["result"]["polar_degree"] == 7);
  auto [c2, node] = run_json(fixture("curve_rational_node.gsv"), Command::curve);
  CHECK(c2 == 0);
  CHECK(node["result"]["admits_field_possible"] == true);
  CHECK(node["result"]["chi"] == 1);
  auto [c3, ell] = run_json(fixture("curve_elliptic_node.gsv"), Command::curve);
  CHECK(c3 == 0);
  CHECK(ell["result"]["admits_field_possible"] == false);
  auto [c4, surf] = run_json(fixture("surface_irregular.gsv"), Command::surface);
  CHECK(c4 == 0);
  CHECK(surf["result"]["c2_integral"] == -12);
  CHECK(surf["result"]["positive_index_certificate"] == false);
  CHECK(surf["notes"][0] == "no positive-index certificate");
}

TEST_CASE("reports are deterministic") {
  for (const char* name : {"worked_example.gsv", "sextic.gsv", "a2_curve_euler.gsv"}) {
    const std::string text = fixture(name);
    const Command c = std::string(name) == "sextic.gsv" ? Command::theorem3 : Command::index;
    CHECK(run(text, c, {}).document == run(text, c, {}).document);
    CliOptions plain;
    plain.format = OutputFormat::plain;
    CHECK(run(text, c, plain).document == run(text, c, plain).document);
  }
}

TEST_CASE("oracle verification and weighted order") {
  CliOptions o;
  o.verify_oracle = true;
  auto [code, doc] = run_json(fixture("worked_example.gsv"), Command::index, o);
  CHECK(code == 0);
  CHECK(doc["oracle"]["agree"] == true);
  CHECK(doc["oracle"]["checked"] == 4);
  o.order = "weighted:6,3,2";
  auto [c2, d2] = run_json(fixture("worked_example.gsv"), Command::index, o);
  CHECK(c2 == 0);
  CHECK(d2["order"] == "weighted:6,3,2");
  CHECK(d2["result"]["index"] == 18);
}

TEST_CASE("plain format") {
  CliOptions o;
  o.format = OutputFormat::plain;
  const std::string doc = run(fixture("surface_balanced.gsv"), Command::surface, o).document;
  CHECK(doc.find("result.c2_integral: 9\n") != std::string::npos);
  CHECK(doc.find("status: ok\n") != std::string::npos);
}

TEST_CASE("order parsing") {
  CHECK(parse_order("local", 3).is_local());
  CHECK(parse_order("weighted:1,2,3", 3).kind() == MonomialOrder::Kind::local_weighted);
  CHECK_THROWS_AS(parse_order("global", 3), Error);
  CHECK_THROWS_AS(parse_order("weighted:1,0", 2), Error);
  CHECK_THROWS_AS(parse_order("weighted:1/2,1", 2), Error);
  CHECK(parse_command("theorem3") == Command::theorem3);
  CHECK_FALSE(parse_command("nope").has_value());
  CHECK(reason_name(Reason::smooth_germ) == "smooth-germ");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
