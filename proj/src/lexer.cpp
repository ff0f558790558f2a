#include "sygus/lexer.h"

#include "sygus/diagnostic.h"

namespace sygus {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }
bool symbol_start(char c) { return is_alpha(c) || is_special_char(c); }
bool symbol_char(char c) { return is_alpha(c) || is_digit(c) || is_special_char(c); }

std::string printable(char c) {
  if (c >= 0x20 && c < 0x7f) return std::string("'") + c + "'";
  static const char* kHex = "0123456789abcdef";
  auto u = static_cast<unsigned char>(c);
  return std::string("byte 0x") + kHex[u >> 4] + kHex[u & 0xf];
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (at_end()) break;
      out.push_back(next());
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < text_.size() ? text_[i_ + k] : '\0'; }
  bool has(std::size_t k) const { return i_ + k < text_.size(); }

  Position here() const { return {line_, col_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token finish(TokenKind kind, std::size_t start, Position pos) {
    Token t;
    t.kind = kind;
    t.lexeme = std::string(text_.substr(start, i_ - start));
    t.pos = pos;
    return t;
  }

  Token next() {
    Position pos = here();
    std::size_t start = i_;
    char c = peek();
    if (c == '(') {
      advance();
      return finish(TokenKind::LParen, start, pos);
    }
    if (c == ')') {
      advance();
      return finish(TokenKind::RParen, start, pos);
    }
    if (c == '"') return quoted(start, pos);
    if (c == '#') return bitvec(start, pos);
    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) return number(start, pos);
    if (symbol_start(c)) return symbol(start, pos);
    throw LexError(pos, "unexpected character " + printable(c));
  }

  Token quoted(std::size_t start, Position pos) {
    advance();  // opening quote
    std::string body;
    while (true) {
      if (at_end()) throw LexError(pos, "unterminated quoted literal");
      char c = peek();
      if (c == '"') break;
      if (!is_alpha(c) && !is_digit(c) && c != '.') {
        throw LexError(here(), "character " + printable(c) + " not allowed in quoted literal");
      }
      body += c;
      advance();
    }
    if (body.empty()) throw LexError(pos, "empty quoted literal");
    advance();  // closing quote
    Token t = finish(TokenKind::Quoted, start, pos);
    t.text = std::move(body);
    return t;
  }

  // Literals must not run straight into identifier text (e.g. `12ab`, `#b01x`).
  void require_boundary(Position pos, std::string_view what) {
    if (at_end()) return;
    char c = peek();
    if (c == '-' && is_digit(peek(1))) return;
    if (symbol_char(c) || c == '#' || c == '"') {
      throw LexError(here(), "invalid character " + printable(c) + " in " + std::string(what));
    }
    (void)pos;
  }

  Token bitvec(std::size_t start, Position pos) {
    advance();  // '#'
    char radix = peek();
    if (radix != 'b' && radix != 'x') {
      throw LexError(pos, "expected 'b' or 'x' after '#'");
    }
    advance();
    std::string digits;
    while (!at_end() && (radix == 'b' ? (peek() == '0' || peek() == '1') : is_hex(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty()) {
      throw LexError(pos, std::string("bit-vector literal '#") + radix + "' has no digits");
    }
    require_boundary(pos, "bit-vector literal");
    Token t = finish(TokenKind::BitVec, start, pos);
    t.literal = BVConst{radix == 'b' ? BitVector::from_bits(digits) : BitVector::from_hex(digits)};
    return t;
  }

  Token number(std::size_t start, Position pos) {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    std::string whole;
    while (!at_end() && is_digit(peek())) {
      whole += peek();
      advance();
    }
    if (peek() == '.') {
      advance();
      std::string frac;
      while (!at_end() && is_digit(peek())) {
        frac += peek();
        advance();
      }
      if (frac.empty()) throw LexError(pos, "real literal needs digits after '.'");
      require_boundary(pos, "real literal");
      BigInt num = parse_decimal(whole + frac);
      BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      BigRational v(num, den);
      if (negative) v = -v;
      Token t = finish(TokenKind::Real, start, pos);
      t.literal = RealConst{v};
      return t;
    }
    require_boundary(pos, "integer literal");
    BigInt v = parse_decimal(whole);
    if (negative) v = -v;
    Token t = finish(TokenKind::Int, start, pos);
    t.literal = IntConst{v};
    return t;
  }

  Token symbol(std::size_t start, Position pos) {
    while (!at_end() && symbol_char(peek())) advance();
    std::string name(text_.substr(start, i_ - start));
    if (peek() == ':') {
      if (peek(1) != ':') throw LexError(here(), "unexpected character ':'");
      if (!symbol_start(peek(2))) {
        throw LexError(here(), "enumerated constant needs a constructor name after '::'");
      }
      advance();
      advance();
      std::size_t ctor_start = i_;
      while (!at_end() && symbol_char(peek())) advance();
      std::string ctor(text_.substr(ctor_start, i_ - ctor_start));
      if (peek() == ':') throw LexError(here(), "unexpected character ':'");
      Token t = finish(TokenKind::Enum, start, pos);
      t.literal = EnumConst{name, ctor};
      return t;
    }
    if (name == "true" || name == "false") {
      Token t = finish(TokenKind::Bool, start, pos);
      t.text = name;
      t.literal = BoolConst{name == "true"};
      return t;
    }
    Token t = finish(TokenKind::Symbol, start, pos);
    t.text = std::move(name);
    return t;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
};

}  // namespace

std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Symbol: return "symbol";
    case TokenKind::Int: return "integer literal";
    case TokenKind::Real: return "real literal";
    case TokenKind::Bool: return "boolean literal";
    case TokenKind::BitVec: return "bit-vector literal";
    case TokenKind::Quoted: return "quoted literal";
    case TokenKind::Enum: return "enumerated constant";
  }
  return "token";
}

bool Token::same_value(const Token& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case TokenKind::Symbol:
    case TokenKind::Quoted: return text == other.text;
    case TokenKind::LParen:
    case TokenKind::RParen: return true;
    default: return literal == other.literal;
  }
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::LParen:
    case TokenKind::RParen: return std::string(token_kind_name(tok.kind));
    default: return std::string(token_kind_name(tok.kind)) + " '" + tok.lexeme + "'";
  }
}

}  // namespace sygus
