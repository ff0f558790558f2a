#ifndef SYGUS_CHECKER_H
#define SYGUS_CHECKER_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sygus/ast.h"
#include "sygus/sort.h"
#include "sygus/theory.h"

namespace sygus {

struct Param {
  Symbol name;
  ResolvedSort sort;
  SortExpr surface;
};

struct UfDecl {
  Symbol name;
  std::vector<ResolvedSort> args;
  ResolvedSort ret;
};

struct Macro {
  Symbol name;
  std::vector<Param> params;
  ResolvedSort ret;
  SortExpr surface_ret;
  Term body;
};

struct CheckedNonTerminal {
  Symbol name;
  ResolvedSort sort;
  std::vector<GTerm> productions;
};

struct CheckedGrammar {
  std::vector<CheckedNonTerminal> nonterminals;
  /** Every let-bound name occurring in any production, with its unique sort. */
  std::vector<std::pair<Symbol, ResolvedSort>> let_vars;

  const CheckedNonTerminal* find(const Symbol& name) const;
};

struct SynthTask {
  Symbol name;
  std::vector<Param> params;
  ResolvedSort ret;
  SortExpr surface_ret;
  CheckedGrammar grammar;
};

/** A user-declared function visible to term checking. */
struct FunctionSig {
  enum class Kind { Uninterpreted, Macro, Synth };
  Kind kind = Kind::Macro;
  Symbol name;
  std::vector<ResolvedSort> args;
  ResolvedSort ret;
  /** Index into CheckedProblem::ufs, macros or tasks depending on kind. */
  std::size_t index = 0;
};

/**
 * The statically checked problem as it stood at the first check-synth:
 * universal variables, uninterpreted functions, macros, synthesis tasks and
 * the Bool-sorted constraint conjuncts.
 */
struct CheckedProblem {
  TheorySignature logic = TheorySignature::all();
  std::vector<std::pair<Symbol, ResolvedSort>> universal_vars;
  std::vector<UfDecl> ufs;
  std::vector<Macro> macros;
  std::vector<SynthTask> tasks;
  std::vector<Term> constraints;
  std::vector<std::pair<Symbol, std::string>> options;
  SortTable sorts;
  std::vector<FunctionSig> functions;

  /** Index of the task named `name`; the first match if overloaded. */
  std::optional<std::size_t> task_index(const Symbol& name) const;
};

/** Where a term appears; decides which user functions are visible. */
enum class TermContext { Constraint, MacroBody, Grammar };

struct Scope {
  const TheorySignature* theory = nullptr;
  const SortTable* sorts = nullptr;
  const std::vector<FunctionSig>* functions = nullptr;
  TermContext context = TermContext::Constraint;
  /** Visible variables, innermost last. */
  std::vector<std::pair<Symbol, ResolvedSort>> vars;
  /** Formal arguments that let-bindings must not shadow. */
  std::vector<Symbol> params;

  const ResolvedSort* find_var(const Symbol& name) const;
};

/** Scope used for constraints of `problem` (universal variables in scope). */
Scope constraint_scope(const CheckedProblem& problem);

/**
 * Bottom-up sort computation. Throws CheckError with E-UNBOUND, E-APP-SIG,
 * E-LET-SORT, E-SHADOW-ARG, E-SHADOW-SORT, E-NONLINEAR, E-ENUM-CONST,
 * E-UF-IN-MACRO or E-UF-IN-GRAMMAR.
 */
ResolvedSort type_of_term(const Term& t, Scope& scope);

/**
 * Checks the grammar of `sf` against the macros, sorts and logic already in
 * `env`. `params` and `ret` are the resolved signature of `sf`.
 */
CheckedGrammar check_grammar(const SynthFun& sf, const std::vector<Param>& params, const ResolvedSort& ret,
                             const CheckedProblem& env);

/**
 * Processes commands in order, stopping semantic checks at the first
 * check-synth. Throws CheckError on the first violated rule.
 */
CheckedProblem check_program(const Program& p);

}  // namespace sygus

#endif  // SYGUS_CHECKER_H
