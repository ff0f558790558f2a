#ifndef SYGUS_TEST_SUPPORT_H
#define SYGUS_TEST_SUPPORT_H

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sygus/ast.h"
#include "sygus/checker.h"
#include "sygus/solver.h"

namespace testsupport {

std::string fixture_path(std::string_view name);
std::string read_fixture(std::string_view name);
std::vector<std::string> fixture_names();

sygus::CheckedProblem check_text(std::string_view text);

/** Grammar of the first synth-fun in `text`, expanded under `cfg`. */
sygus::ExpandedGrammar expanded_grammar(std::string_view text, const sygus::SolverConfig& cfg = {});

/** Diagnostic code raised by parsing and checking `text`; empty when accepted. */
std::string diagnostic_code(std::string_view text);

/** Body of the first define-fun in `text` (a solution file). */
sygus::Term answer_body(std::string_view text);

/** `text` with the first occurrence of `from` replaced; aborts the test if absent. */
std::string replace_once(std::string text, std::string_view from, std::string_view to);

// ---------------------------------------------------------------------------
// Brute-force derivation oracle
// ---------------------------------------------------------------------------

/**
 * Every closed term derivable from `start` with at most `max_size` nodes,
 * found by expanding the leftmost non-terminal of sentential forms
 * breadth-first. Shares no code with the library enumerator.
 */
std::vector<sygus::Term> oracle_derivations(const sygus::ExpandedGrammar& g, const std::string& start,
                                            std::size_t max_size);

/** A named problem whose `task`-th grammar is compared against the oracle. */
struct OracleGrammar {
  std::string name;
  std::string text;
  std::size_t task = 0;
};

/** Hand-written grammars for oracle comparison; index 8 has a unit-production cycle. */
std::vector<OracleGrammar> oracle_grammars();

/** Let-bound names of `g` that occur free in `t`. */
std::vector<std::string> free_let_names(const sygus::Term& t, const sygus::ExpandedGrammar& g);

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

/** Random parse-valid programs (not necessarily well-sorted). */
class ProgramGen {
 public:
  explicit ProgramGen(std::uint64_t seed) : rng_(seed) {}

  sygus::Program program();
  sygus::SortExpr sort(int depth = 2);
  sygus::Term term(int depth, bool grammar = false);
  sygus::Literal literal();

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::string symbol();
  std::vector<std::string> distinct_symbols(std::size_t n);
  sygus::Command command();

  std::mt19937_64 rng_;
};

/**
 * Random well-sorted Int/Bool terms over the variables x, y (Int) and p (Bool)
 * and the macros of `macro_prelude()`, with lets that shadow.
 */
class TypedTermGen {
 public:
  explicit TypedTermGen(std::uint64_t seed) : rng_(seed) {}

  static std::string macro_prelude();

  sygus::Term int_term(int depth);
  sygus::Term bool_term(int depth);

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  sygus::Term let_term(int depth, bool want_int);

  std::mt19937_64 rng_;
  std::vector<std::string> ints_ = {"x", "y"};
  std::vector<std::string> bools_ = {"p"};
};

}  // namespace testsupport

#endif  // SYGUS_TEST_SUPPORT_H
