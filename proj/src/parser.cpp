#include "sygus/parser.h"

#include <set>

#include "sygus/diagnostic.h"

namespace sygus {

namespace {

constexpr std::string_view kCommandNames[] = {
    "set-logic",  "define-sort", "declare-var", "declare-fun", "define-fun",
    "synth-fun",  "constraint",  "check-synth", "set-options",
};

bool is_command_name(std::string_view s) {
  for (auto n : kCommandNames) {
    if (n == s) return true;
  }
  return false;
}

TermKind shorthand_kind(std::string_view s) {
  if (s == "Constant") return TermKind::ConstantOf;
  if (s == "Variable") return TermKind::VariableOf;
  if (s == "InputVariable") return TermKind::InputVariableOf;
  if (s == "LocalVariable") return TermKind::LocalVariableOf;
  return TermKind::App;
}

}  // namespace

const Token& Parser::peek(std::size_t k) const { return toks_[i_ + k]; }

bool Parser::peek_is(TokenKind kind, std::size_t k) const {
  return i_ + k < toks_.size() && toks_[i_ + k].kind == kind;
}

bool Parser::peek_symbol(std::string_view text, std::size_t k) const {
  return peek_is(TokenKind::Symbol, k) && toks_[i_ + k].text == text;
}

Position Parser::error_pos() const {
  if (i_ < toks_.size()) return toks_[i_].pos;
  if (!toks_.empty()) return toks_.back().pos;
  return Position{1, 1};
}

void Parser::fail(std::string expected) const {
  std::string found = at_end() ? "end of input" : describe(toks_[i_]);
  throw ParseError(error_pos(), std::move(expected), std::move(found));
}

const Token& Parser::take() {
  if (at_end()) fail("more input");
  return toks_[i_++];
}

const Token& Parser::expect(TokenKind kind, std::string_view what) {
  if (!peek_is(kind)) fail(std::string(what));
  return toks_[i_++];
}

void Parser::expect_symbol(std::string_view text) {
  if (!peek_symbol(text)) fail("'" + std::string(text) + "'");
  ++i_;
}

void Parser::expect_end() {
  if (!at_end()) fail("end of input");
}

Symbol Parser::identifier(std::string_view what) {
  if (!peek_is(TokenKind::Symbol)) {
    if (peek_is(TokenKind::Bool)) throw ParseError::reserved(peek().pos, peek().text);
    fail(std::string(what));
  }
  const Token& t = toks_[i_];
  if (is_reserved_word(t.text)) throw ParseError::reserved(t.pos, t.text);
  ++i_;
  return t.text;
}

// ---------------------------------------------------------------------------

Program Parser::program() {
  Program p;
  if (at_end()) fail("a command");
  while (!at_end()) {
    Position pos = peek().pos;
    Command c = command();
    if (std::holds_alternative<SetLogic>(c) && !p.commands.empty()) {
      throw ParseError(pos, "set-logic only as the first command", "set-logic after other commands");
    }
    p.commands.push_back(std::move(c));
  }
  return p;
}

Command Parser::command() {
  Position pos = error_pos();
  expect(TokenKind::LParen, "'(' starting a command");
  if (!peek_is(TokenKind::Symbol) || !is_command_name(peek().text)) fail("a command name");
  std::string name = take().text;

  Command result;
  if (name == "set-logic") {
    result = SetLogic{identifier("logic name"), pos};
  } else if (name == "define-sort") {
    DefineSort c;
    c.pos = pos;
    c.name = identifier("sort name");
    c.body = sort_expr();
    result = std::move(c);
  } else if (name == "declare-var") {
    DeclareVar c;
    c.pos = pos;
    c.name = identifier("variable name");
    c.sort = sort_expr();
    result = std::move(c);
  } else if (name == "declare-fun") {
    DeclareFun c;
    c.pos = pos;
    c.name = identifier("function name");
    expect(TokenKind::LParen, "'(' starting argument sorts");
    while (!peek_is(TokenKind::RParen)) {
      if (at_end()) fail("a sort or ')'");
      c.arg_sorts.push_back(sort_expr());
    }
    ++i_;
    c.ret = sort_expr();
    result = std::move(c);
  } else if (name == "define-fun") {
    DefineFun c;
    c.pos = pos;
    c.name = identifier("function name");
    c.params = sorted_var_list();
    c.ret = sort_expr();
    c.body = term();
    result = std::move(c);
  } else if (name == "synth-fun") {
    result = synth_fun_body(pos);
  } else if (name == "constraint") {
    result = Constraint{term(), pos};
  } else if (name == "check-synth") {
    result = CheckSynth{pos};
  } else {
    SetOptions c;
    c.pos = pos;
    expect(TokenKind::LParen, "'(' starting option list");
    do {
      expect(TokenKind::LParen, "'(' starting an option");
      Symbol key = identifier("option name");
      const Token& value = expect(TokenKind::Quoted, "quoted option value");
      c.options.emplace_back(std::move(key), value.text);
      expect(TokenKind::RParen, "')' closing an option");
    } while (peek_is(TokenKind::LParen));
    expect(TokenKind::RParen, "')' closing option list");
    result = std::move(c);
  }
  expect(TokenKind::RParen, "')' closing " + name);
  return result;
}

std::vector<SortedVar> Parser::sorted_var_list() {
  std::vector<SortedVar> out;
  expect(TokenKind::LParen, "'(' starting parameter list");
  while (peek_is(TokenKind::LParen)) {
    Position pos = peek().pos;
    ++i_;
    SortedVar v;
    v.pos = pos;
    v.name = identifier("parameter name");
    v.sort = sort_expr();
    expect(TokenKind::RParen, "')' closing a parameter");
    out.push_back(std::move(v));
  }
  expect(TokenKind::RParen, "'(' or ')' in parameter list");
  return out;
}

SynthFun Parser::synth_fun_body(Position pos) {
  SynthFun c;
  c.pos = pos;
  c.name = identifier("function name");
  c.params = sorted_var_list();
  c.ret = sort_expr();
  expect(TokenKind::LParen, "'(' starting grammar");
  while (peek_is(TokenKind::LParen)) c.grammar.push_back(nt_def());
  if (c.grammar.empty()) fail("a non-terminal definition");
  expect(TokenKind::RParen, "')' closing grammar");
  return c;
}

NTDef Parser::nt_def() {
  NTDef nt;
  nt.pos = peek().pos;
  expect(TokenKind::LParen, "'(' starting a non-terminal");
  nt.name = identifier("non-terminal name");
  nt.sort = sort_expr();
  expect(TokenKind::LParen, "'(' starting productions");
  while (!peek_is(TokenKind::RParen)) {
    if (at_end()) fail("a production or ')'");
    nt.productions.push_back(gterm());
  }
  if (nt.productions.empty()) fail("at least one production");
  ++i_;
  expect(TokenKind::RParen, "')' closing a non-terminal");
  return nt;
}

SortExpr Parser::sort_expr() {
  if (at_end()) fail("a sort");
  const Token& t = peek();
  Position pos = t.pos;
  if (t.kind == TokenKind::Symbol) {
    if (t.text == "Int") { ++i_; return SortExpr::integer(pos); }
    if (t.text == "Bool") { ++i_; return SortExpr::boolean(pos); }
    if (t.text == "Real") { ++i_; return SortExpr::real(pos); }
    return SortExpr::named(identifier("a sort"), pos);
  }
  if (t.kind != TokenKind::LParen) fail("a sort");
  ++i_;
  SortExpr result;
  if (peek_symbol("BitVec")) {
    ++i_;
    if (!peek_is(TokenKind::Int)) fail("positive bit-vector width");
    const auto& width = std::get<IntConst>(*peek().literal).value;
    if (width < 1 || width > 0xFFFFFF) fail("positive bit-vector width");
    ++i_;
    result = SortExpr::bitvec(static_cast<std::uint32_t>(width), pos);
  } else if (peek_symbol("Enum")) {
    ++i_;
    expect(TokenKind::LParen, "'(' starting constructor list");
    std::vector<Symbol> ctors;
    do {
      ctors.push_back(identifier("constructor name"));
    } while (!peek_is(TokenKind::RParen) && !at_end());
    expect(TokenKind::RParen, "')' closing constructor list");
    result = SortExpr::enumeration(std::move(ctors), pos);
  } else if (peek_symbol("Array")) {
    ++i_;
    SortExpr domain = sort_expr();
    SortExpr range = sort_expr();
    result = SortExpr::array(std::move(domain), std::move(range), pos);
  } else {
    fail("'BitVec', 'Enum' or 'Array'");
  }
  expect(TokenKind::RParen, "')' closing a sort");
  return result;
}

Term Parser::term() { return any_term(false); }
GTerm Parser::gterm() { return any_term(true); }

Term Parser::any_term(bool grammar) {
  if (at_end()) fail("a term");
  const Token& t = peek();
  Position pos = t.pos;
  switch (t.kind) {
    case TokenKind::Int:
    case TokenKind::Real:
    case TokenKind::Bool:
    case TokenKind::BitVec:
    case TokenKind::Enum:
      ++i_;
      return Term::lit(*t.literal, pos);
    case TokenKind::Symbol:
      return Term::ref(identifier("a term"), pos);
    case TokenKind::LParen:
      break;
    default:
      fail("a term");
  }
  ++i_;
  if (peek_is(TokenKind::RParen)) fail("a function symbol (empty application)");
  if (peek_symbol("let")) {
    ++i_;
    expect(TokenKind::LParen, "'(' starting let bindings");
    std::vector<Binding> bindings;
    std::set<Symbol> seen;
    while (peek_is(TokenKind::LParen)) {
      ++i_;
      Position bpos = error_pos();
      Binding b;
      b.name = identifier("let-bound name");
      if (!seen.insert(b.name).second) {
        throw ParseError(bpos, "distinct let-bound names", "duplicate binding '" + b.name + "'");
      }
      b.sort = sort_expr();
      b.term = any_term(grammar);
      expect(TokenKind::RParen, "')' closing a let binding");
      bindings.push_back(std::move(b));
    }
    if (bindings.empty()) fail("at least one let binding");
    expect(TokenKind::RParen, "')' closing let bindings");
    Term body = any_term(grammar);
    expect(TokenKind::RParen, "')' closing let");
    return Term::let(std::move(bindings), std::move(body), pos);
  }
  if (peek_is(TokenKind::Symbol)) {
    TermKind sk = shorthand_kind(peek().text);
    if (sk != TermKind::App) {
      if (!grammar) {
        throw ParseError(peek().pos, "a term",
                         "grammar shorthand '" + peek().text + "' outside a grammar");
      }
      ++i_;
      SortExpr s = sort_expr();
      expect(TokenKind::RParen, "')' closing " + std::string(shorthand_keyword(sk)));
      return Term::shorthand(sk, std::move(s), pos);
    }
  }
  Symbol head = identifier("a function symbol");
  std::vector<Term> args;
  while (!peek_is(TokenKind::RParen)) {
    if (at_end()) fail("a term or ')'");
    args.push_back(any_term(grammar));
  }
  ++i_;
  return Term::app(std::move(head), std::move(args), pos);
}

// ---------------------------------------------------------------------------

Program parse_program(std::span<const Token> tokens) {
  Parser p(tokens);
  return p.program();
}

SortExpr parse_sort_expr(std::span<const Token> tokens) {
  Parser p(tokens);
  SortExpr s = p.sort_expr();
  p.expect_end();
  return s;
}

Term parse_term(std::span<const Token> tokens) {
  Parser p(tokens);
  Term t = p.term();
  p.expect_end();
  return t;
}

GTerm parse_gterm(std::span<const Token> tokens) {
  Parser p(tokens);
  Term t = p.gterm();
  p.expect_end();
  return t;
}

Program parse_program_text(std::string_view text) { return parse_program(tokenize(text)); }
Term parse_term_text(std::string_view text) { return parse_term(tokenize(text)); }
GTerm parse_gterm_text(std::string_view text) { return parse_gterm(tokenize(text)); }
SortExpr parse_sort_text(std::string_view text) { return parse_sort_expr(tokenize(text)); }

}  // namespace sygus
