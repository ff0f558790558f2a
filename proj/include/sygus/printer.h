#ifndef SYGUS_PRINTER_H
#define SYGUS_PRINTER_H

#include <string>

#include "sygus/ast.h"

namespace sygus {

struct CheckedProblem;
class Candidate;

// Canonical single-line rendering. Every printed construct re-parses to a
// structurally equal AST.

std::string print_literal(const Literal& lit);
std::string print_sort(const SortExpr& s);
std::string print_term(const Term& t);
std::string print_command(const Command& c);
/** One command per line, each terminated by a newline. */
std::string print_program(const Program& p);

/**
 * One define-fun line per synthesis task, in declaration order. Throws
 * SygusError(E-INCOMPLETE-CANDIDATE) when a task has no body.
 */
std::string print_solution(const Candidate& c, const CheckedProblem& problem);

/** Exactly "(fail)\n". */
std::string print_fail();

/** Tagged S-expression dump of the AST (the `parse` subcommand output). */
std::string dump_program(const Program& p);

}  // namespace sygus

#endif  // SYGUS_PRINTER_H
