#include "sygus/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sygus/checker.h"
#include "sygus/diagnostic.h"
#include "sygus/parser.h"
#include "sygus/printer.h"

namespace sygus {

namespace {

template <typename T>
T parse_number(const Symbol& key, const std::string& value) {
  T out{};
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) {
    throw SygusError(code::kOptValue, {}, "option '" + key + "' expects a number, got \"" + value + "\"");
  }
  return out;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw SygusError(code::kIo, {}, "cannot open '" + path + "'");
  buf << file.rdbuf();
  if (file.bad()) throw SygusError(code::kIo, {}, "cannot read '" + path + "'");
  return buf.str();
}

int exit_for(const SygusError& e) {
  const std::string& c = e.code();
  if (c == code::kIo) return exit_code::kIo;
  if (c == code::kTheoryUnsupported || c == code::kUfUnsupportedSort || c == code::kEvalUnsupported ||
      c == code::kDivZero) {
    return exit_code::kUnsupported;
  }
  return exit_code::kInvalid;
}

struct SolveFlags {
  std::size_t max_term_size = 0;
  std::size_t grid_radius = 0;
  std::size_t random_samples = 0;
  std::size_t uf_model_count = 0;
  std::uint64_t seed = 0;
  double timeout_seconds = 0;
  std::string constant_pool;
};

}  // namespace

SolverConfig apply_set_options(const std::vector<std::pair<Symbol, std::string>>& opts, SolverConfig cfg,
                               std::ostream* verbose) {
  for (const auto& [key, value] : opts) {
    if (key == "max-term-size") {
      cfg.max_term_size = parse_number<std::size_t>(key, value);
    } else if (key == "grid-radius") {
      cfg.grid_radius = parse_number<std::size_t>(key, value);
    } else if (key == "random-samples") {
      cfg.random_samples = parse_number<std::size_t>(key, value);
    } else if (key == "uf-model-count") {
      cfg.uf_model_count = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "timeout-seconds") {
      cfg.timeout_seconds = parse_number<double>(key, value);
    } else if (verbose) {
      *verbose << "ignoring unrecognized option '" << key << "'\n";
    }
  }
  return cfg;
}

std::vector<BigInt> parse_constant_pool(const std::string& text) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    std::size_t digits = !item.empty() && item[0] == '-' ? 1 : 0;
    if (item.size() == digits || item.find_first_not_of("0123456789", digits) != std::string::npos) {
      throw SygusError(code::kOptValue, {}, "constant pool entry \"" + item + "\" is not an integer");
    }
    out.push_back(parse_decimal(item));
    start = comma + 1;
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"SyGuS front-end and enumerative solver"};
  app.footer(
      "Exit codes: 0 success, 1 (fail) printed, 2 lexical/syntax/semantic or usage error,\n"
      "            3 unsupported theory (Real/Array), 4 I/O error.");
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("--verbose,-v", verbose, "Progress and diagnostics detail on stderr");

  std::string input;
  auto* parse_cmd = app.add_subcommand("parse", "Print the AST as an S-expression dump");
  auto* check_cmd = app.add_subcommand("check", "Run the static checker; silent on success");
  auto* fmt_cmd = app.add_subcommand("fmt", "Print the program in canonical form");
  auto* solve_cmd = app.add_subcommand("solve", "Synthesize bodies for every synth-fun");
  for (auto* sub : {parse_cmd, check_cmd, fmt_cmd, solve_cmd}) {
    sub->add_option("input", input, "Input file, or - for standard input")->required();
  }

  SolveFlags flags;
  auto* o_size = solve_cmd->add_option("--max-term-size", flags.max_term_size, "Largest term size searched (12)");
  auto* o_radius = solve_cmd->add_option("--grid-radius", flags.grid_radius, "Int grid radius (5)");
  auto* o_samples = solve_cmd->add_option("--random-samples", flags.random_samples, "Random samples (256)");
  auto* o_models = solve_cmd->add_option("--uf-model-count", flags.uf_model_count, "Sampled UF models (32)");
  auto* o_seed = solve_cmd->add_option("--seed", flags.seed, "Random seed (1)");
  auto* o_timeout = solve_cmd->add_option("--timeout-seconds", flags.timeout_seconds, "Wall-clock limit (none)");
  auto* o_pool = solve_cmd->add_option("--constant-pool", flags.constant_pool, "Int constants, e.g. \"0,1,-1,2\"");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::kOk : exit_code::kInvalid;
  }

  const std::string file = input == "-" ? "<stdin>" : input;
  try {
    const std::string text = read_input(input, in);
    Program program = parse_program_text(text);
    if (parse_cmd->parsed()) {
      out << dump_program(program);
      return exit_code::kOk;
    }
    if (fmt_cmd->parsed()) {
      out << print_program(program);
      return exit_code::kOk;
    }
    CheckedProblem problem = check_program(program);
    if (check_cmd->parsed()) return exit_code::kOk;

    std::ostream* log = verbose ? &err : nullptr;
    SolverConfig cfg = apply_set_options(problem.options, SolverConfig{}, log);
    if (*o_size) cfg.max_term_size = flags.max_term_size;
    if (*o_radius) cfg.grid_radius = flags.grid_radius;
    if (*o_samples) cfg.random_samples = flags.random_samples;
    if (*o_models) cfg.uf_model_count = flags.uf_model_count;
    if (*o_seed) cfg.seed = flags.seed;
    if (*o_timeout) cfg.timeout_seconds = flags.timeout_seconds;
    if (*o_pool) cfg.constant_pool = parse_constant_pool(flags.constant_pool);
    cfg.log = log;

    SolveResult result = solve(problem, cfg);
    if (verbose) {
      err << "tuples screened " << result.stats.tuples_screened << ", verified " << result.stats.verifications
          << ", counterexamples " << result.stats.counterexamples << "\n";
    }
    switch (result.status) {
      case SolveResult::Status::Solved:
        out << print_solution(result.candidate, problem);
        return exit_code::kOk;
      case SolveResult::Status::Timeout:
        err << Diagnostic{std::string(code::kTimeout), {}, "time limit reached before a solution was found"}.render(file)
            << "\n";
        break;
      case SolveResult::Status::Exhausted:
        err << file << ": no solution with terms up to size " << cfg.max_term_size << "\n";
        break;
    }
    out << print_fail();
    return exit_code::kFail;
  } catch (const SygusError& e) {
    err << e.diagnostic().render(file) << "\n";
    return exit_for(e);
  }
}

}  // namespace sygus
