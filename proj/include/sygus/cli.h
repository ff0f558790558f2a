#ifndef SYGUS_CLI_H
#define SYGUS_CLI_H

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sygus/ast.h"
#include "sygus/solver.h"

namespace sygus {

/** Exit codes of the `sygus` tool. */
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kIo = 4;
}  // namespace exit_code

/**
 * Applies recognized set-options keys to `cfg`. Unknown keys are reported on
 * `verbose` (when non-null) and otherwise ignored. Throws
 * SygusError(E-OPT-VALUE) for a malformed value.
 */
SolverConfig apply_set_options(const std::vector<std::pair<Symbol, std::string>>& opts, SolverConfig cfg,
                               std::ostream* verbose = nullptr);

/** Parses "c1,c2,..." into Int constants; throws SygusError(E-OPT-VALUE). */
std::vector<BigInt> parse_constant_pool(const std::string& text);

/** Runs the command line `args` (args[0] is the program name). */
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sygus

#endif  // SYGUS_CLI_H
