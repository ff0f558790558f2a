#ifndef SYGUS_PARSER_H
#define SYGUS_PARSER_H

#include <span>
#include <string_view>

#include "sygus/ast.h"
#include "sygus/lexer.h"

namespace sygus {

/**
 * Recursive-descent parser over a token stream. Every entry point consumes
 * exactly one construct and throws ParseError on any deviation from the
 * command grammars; the first error aborts.
 */
class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  Program program();
  Command command();
  SortExpr sort_expr();
  Term term();
  GTerm gterm();
  SynthFun synth_fun_body(Position pos);

  bool at_end() const { return i_ >= toks_.size(); }
  /** Throws unless every token has been consumed. */
  void expect_end();

 private:
  const Token& peek(std::size_t k = 0) const;
  bool peek_is(TokenKind kind, std::size_t k = 0) const;
  bool peek_symbol(std::string_view text, std::size_t k = 0) const;
  const Token& take();
  const Token& expect(TokenKind kind, std::string_view what);
  void expect_symbol(std::string_view text);
  Symbol identifier(std::string_view what);
  [[noreturn]] void fail(std::string expected) const;
  Position error_pos() const;

  Term any_term(bool grammar);
  std::vector<SortedVar> sorted_var_list();
  NTDef nt_def();

  std::span<const Token> toks_;
  std::size_t i_ = 0;
};

Program parse_program(std::span<const Token> tokens);
SortExpr parse_sort_expr(std::span<const Token> tokens);
Term parse_term(std::span<const Token> tokens);
GTerm parse_gterm(std::span<const Token> tokens);

/** Convenience: tokenize then parse a whole program. */
Program parse_program_text(std::string_view text);
Term parse_term_text(std::string_view text);
GTerm parse_gterm_text(std::string_view text);
SortExpr parse_sort_text(std::string_view text);

}  // namespace sygus

#endif  // SYGUS_PARSER_H
