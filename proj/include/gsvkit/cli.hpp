#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gsvkit/polynomial.hpp"
#include "gsvkit/problem.hpp"

namespace gsvkit {

enum class Command { invariants, index, tangency, bound, theorem3, curve, surface };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);
bool is_local_command(Command c);

enum class OutputFormat { structured, plain };

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int usage = 2;
inline constexpr int precondition = 3;
inline constexpr int oracle_mismatch = 4;
}  // namespace exit_code

struct CliOptions {
  /// `local` or `weighted:w1,w2,...`; empty means local.
  std::string order;
  bool verify_oracle = false;
  OutputFormat format = OutputFormat::structured;
  /// Hex SHA-256 of the problem text, filled in by run().
  std::string input_digest;
};

/// Parses an --order value for `nvars` variables. Throws
/// Error(Reason::order_mismatch) on a malformed value or wrong arity.
MonomialOrder parse_order(std::string_view spec, std::size_t nvars);

struct RunResult {
  int exit_code = exit_code::ok;
  /// JSON object, or `key: value` lines for the plain format.
  std::string document;
  /// Short human-readable summary.
  std::string summary;
};

RunResult run_local(const ProblemFile& problem, Command command, const CliOptions& options);
RunResult run_global(const ProblemFile& problem, Command command, const CliOptions& options);

/// Parses `problem_text` and dispatches; never throws on bad input.
RunResult run(std::string_view problem_text, Command command, CliOptions options);

std::string sha256_hex(std::string_view data);

}  // namespace gsvkit
