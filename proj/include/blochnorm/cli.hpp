#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "blochnorm/types.hpp"

namespace blochnorm::cli {

enum class Command { constants, eval, sweep, validate };
enum class Method { series, double_series, quad2d, mc };
enum class Format { csv, json };

struct RunConfig {
    Command cmd = Command::constants;
    Params p;
    double t = -1.0;  // eval only
    int grid = 101;
    std::vector<Method> methods;
    double tol = 1e-10;
    std::size_t max_terms = 1000000;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    Format format = Format::csv;
    std::string out;  // empty = stdout
};

// Exit codes: 0 success/all-pass, 1 usage error, 2 computation failure,
// 3 validation failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitValidation = 3;

// Parses argv (without the program name).  Throws CLI::ParseError via the
// return path: on usage errors writes the message to err and signals with
// has_value() == false.
struct ParseOutcome {
    bool ok = false;
    int exit_code = kExitOk;  // meaningful when !ok (0 for --help)
    RunConfig cfg;
};
ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& err);

// Executes a parsed command, writing the report to `out` (or cfg.out).
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse + run; the main() body.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blochnorm::cli
