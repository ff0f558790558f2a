#ifndef SYGUS_LEXER_H
#define SYGUS_LEXER_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sygus/ast.h"

namespace sygus {

enum class TokenKind {
  LParen,
  RParen,
  Symbol,
  Int,
  Real,
  Bool,
  BitVec,
  Quoted,
  Enum,  // `S::C`, carried as one token
};

std::string_view token_kind_name(TokenKind k);

struct Token {
  TokenKind kind = TokenKind::LParen;
  /** Exact source text of the token (quotes included for Quoted). */
  std::string lexeme;
  /** Symbol text, or the contents of a quoted literal. */
  std::string text;
  /** Set for Int, Real, Bool, BitVec and Enum tokens. */
  std::optional<Literal> literal;
  Position pos;

  /** Kind and value equality; positions and lexeme spelling are ignored. */
  bool same_value(const Token& other) const;
};

/**
 * Splits `text` into tokens. Whitespace and `;` comments produce nothing.
 * A `-` directly followed by a digit starts a numeric literal; otherwise it
 * starts a symbol. Throws LexError on the first malformed token.
 */
std::vector<Token> tokenize(std::string_view text);

/** Short human description used in parse diagnostics. */
std::string describe(const Token& tok);

}  // namespace sygus

#endif  // SYGUS_LEXER_H
