#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gsvkit/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"GSV indices and global obstructions for hypersurface singularities"};
  app.set_version_flag("--version", std::string(GSVKIT_VERSION));

  std::string command, path, order = "local", format = "structured";
  bool verify = false;
  app.add_option("command", command, "invariants | index | tangency | bound | theorem3 | curve | surface")
      ->required();
  app.add_option("file", path, "problem file, or - for standard input")->required();
  app.add_option("--order", order, "local or weighted:w1,w2,...");
  app.add_option("--format", format, "structured or plain")->check(CLI::IsMember({"structured", "plain"}));
  app.add_flag("--verify-oracle", verify, "recount every dimension by brute-force staircase enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gsvkit::exit_code::usage;
  }

  auto cmd = gsvkit::parse_command(command);
  if (!cmd) {
    std::cerr << "gsvkit: unknown command '" << command << "'\n";
    return gsvkit::exit_code::usage;
  }

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "gsvkit: cannot read '" << path << "'\n";
      return gsvkit::exit_code::usage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  gsvkit::CliOptions options;
  options.order = order;
  options.verify_oracle = verify;
  options.format = format == "plain" ? gsvkit::OutputFormat::plain : gsvkit::OutputFormat::structured;
  const gsvkit::RunResult r = gsvkit::run(text, *cmd, options);
  std::cout << r.document;
  std::cerr << r.summary << "\n";
  return r.exit_code;
}
