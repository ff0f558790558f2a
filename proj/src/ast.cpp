#include "sygus/ast.h"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>

namespace sygus {

namespace {

constexpr std::array<std::string_view, 22> kReserved = {
    "set-logic", "define-sort", "declare-var", "declare-fun", "define-fun", "synth-fun",
    "constraint", "check-synth", "set-options", "BitVec",       "Array",      "Int",
    "Bool",       "Enum",        "Real",        "Constant",    "Variable",   "InputVariable",
    "LocalVariable", "let",      "true",        "false",
};

inline std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_literal(const Literal& lit) {
  std::size_t h = lit.index();
  std::visit(
      [&](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, IntConst>) {
          h = mix(h, boost::multiprecision::hash_value(l.value));
        } else if constexpr (std::is_same_v<L, RealConst>) {
          h = mix(h, boost::multiprecision::hash_value(numerator(l.value)));
          h = mix(h, boost::multiprecision::hash_value(denominator(l.value)));
        } else if constexpr (std::is_same_v<L, BoolConst>) {
          h = mix(h, l.value ? 1 : 0);
        } else if constexpr (std::is_same_v<L, BVConst>) {
          h = mix(h, l.bv.width);
          h = mix(h, boost::multiprecision::hash_value(l.bv.value));
        } else {
          h = mix(h, std::hash<std::string>{}(l.sort));
          h = mix(h, std::hash<std::string>{}(l.constructor));
        }
      },
      lit);
  return h;
}

}  // namespace

bool is_special_char(char c) {
  switch (c) {
    case '_': case '+': case '-': case '*': case '&': case '|': case '!': case '~':
    case '<': case '>': case '=': case '/': case '%': case '?': case '.': case '$':
    case '^':
      return true;
    default:
      return false;
  }
}

bool is_symbol_text(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text[0]) && !is_special_char(text[0])) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return alpha(c) || digit(c) || is_special_char(c); });
}

bool is_reserved_word(std::string_view text) {
  return std::find(kReserved.begin(), kReserved.end(), text) != kReserved.end();
}

// ---------------------------------------------------------------------------

BigInt parse_decimal(std::string_view text) {
  bool negative = !text.empty() && text[0] == '-';
  BigInt v = 0;
  for (char c : text.substr(negative ? 1 : 0)) v = v * 10 + (c - '0');
  return negative ? BigInt(-v) : v;
}

BitVector BitVector::from_bits(std::string_view bits) {
  BitVector bv;
  bv.width = static_cast<std::uint32_t>(bits.size());
  for (char c : bits) {
    bv.value <<= 1;
    if (c == '1') bv.value |= 1;
  }
  return bv;
}

BitVector BitVector::from_hex(std::string_view hex) {
  BitVector bv;
  bv.width = static_cast<std::uint32_t>(hex.size() * 4);
  for (char c : hex) {
    int d = 0;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else d = c - 'A' + 10;
    bv.value <<= 4;
    bv.value |= d;
  }
  return bv;
}

BitVector BitVector::wrap(std::uint32_t width, const BigInt& v) {
  BigInt modulus = BigInt(1) << width;
  BigInt r = v % modulus;
  if (r < 0) r += modulus;
  return BitVector{width, r};
}

std::string BitVector::bits() const {
  std::string out(width, '0');
  for (std::uint32_t i = 0; i < width; ++i) {
    if (bit_test(value, i)) out[width - 1 - i] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------

SortExpr SortExpr::integer(Position pos) { return SortExpr{SortKind::Int, 0, {}, {}, {}, pos}; }
SortExpr SortExpr::boolean(Position pos) { return SortExpr{SortKind::Bool, 0, {}, {}, {}, pos}; }
SortExpr SortExpr::real(Position pos) { return SortExpr{SortKind::Real, 0, {}, {}, {}, pos}; }

SortExpr SortExpr::bitvec(std::uint32_t width, Position pos) {
  return SortExpr{SortKind::BitVec, width, {}, {}, {}, pos};
}

SortExpr SortExpr::enumeration(std::vector<Symbol> constructors, Position pos) {
  return SortExpr{SortKind::Enum, 0, std::move(constructors), {}, {}, pos};
}

SortExpr SortExpr::array(SortExpr domain, SortExpr range, Position pos) {
  SortExpr s{SortKind::Array, 0, {}, {}, {}, pos};
  s.children.push_back(std::move(domain));
  s.children.push_back(std::move(range));
  return s;
}

SortExpr SortExpr::named(Symbol name, Position pos) {
  return SortExpr{SortKind::Named, 0, {}, {}, std::move(name), pos};
}

bool operator==(const SortExpr& a, const SortExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SortKind::BitVec: return a.width == b.width;
    case SortKind::Enum: return a.constructors == b.constructors;
    case SortKind::Array: return a.children == b.children;
    case SortKind::Named: return a.name == b.name;
    default: return true;
  }
}

std::size_t hash_sort(const SortExpr& s) {
  std::size_t h = static_cast<std::size_t>(s.kind) + 17;
  switch (s.kind) {
    case SortKind::BitVec: h = mix(h, s.width); break;
    case SortKind::Enum:
      for (const auto& c : s.constructors) h = mix(h, std::hash<std::string>{}(c));
      break;
    case SortKind::Array:
      for (const auto& c : s.children) h = mix(h, hash_sort(c));
      break;
    case SortKind::Named: h = mix(h, std::hash<std::string>{}(s.name)); break;
    default: break;
  }
  return h;
}

// ---------------------------------------------------------------------------

bool is_shorthand(TermKind k) {
  return k == TermKind::ConstantOf || k == TermKind::VariableOf || k == TermKind::InputVariableOf ||
         k == TermKind::LocalVariableOf;
}

std::string_view shorthand_keyword(TermKind k) {
  switch (k) {
    case TermKind::ConstantOf: return "Constant";
    case TermKind::VariableOf: return "Variable";
    case TermKind::InputVariableOf: return "InputVariable";
    case TermKind::LocalVariableOf: return "LocalVariable";
    default: return "";
  }
}

Term Term::app(Symbol head, std::vector<Term> args, Position pos) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::App;
  n->name = std::move(head);
  n->args = std::move(args);
  n->pos = pos;
  std::size_t h = mix(1, std::hash<std::string>{}(n->name));
  std::size_t size = 1;
  for (const auto& a : n->args) {
    h = mix(h, a.hash());
    size += a.size();
  }
  n->size = size;
  n->hash = mix(h, n->args.size());
  return Term(std::move(n));
}

Term Term::lit(Literal value, Position pos) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Lit;
  n->literal = std::move(value);
  n->pos = pos;
  n->hash = mix(2, hash_literal(n->literal));
  return Term(std::move(n));
}

Term Term::ref(Symbol name, Position pos) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Ref;
  n->name = std::move(name);
  n->pos = pos;
  n->hash = mix(3, std::hash<std::string>{}(n->name));
  return Term(std::move(n));
}

Term Term::let(std::vector<Binding> bindings, Term body, Position pos) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Let;
  n->pos = pos;
  std::size_t h = 4;
  std::size_t size = 1 + body.size();
  for (const auto& b : bindings) {
    h = mix(h, std::hash<std::string>{}(b.name));
    h = mix(h, hash_sort(b.sort));
    h = mix(h, b.term.hash());
    size += b.term.size();
  }
  h = mix(h, body.hash());
  n->bindings = std::move(bindings);
  n->args.push_back(std::move(body));
  n->size = size;
  n->hash = h;
  return Term(std::move(n));
}

Term Term::shorthand(TermKind kind, SortExpr sort, Position pos) {
  assert(is_shorthand(kind));
  auto n = std::make_shared<TermNode>();
  n->kind = kind;
  n->sort = std::move(sort);
  n->pos = pos;
  n->hash = mix(5 + static_cast<std::size_t>(kind), hash_sort(n->sort));
  return Term(std::move(n));
}

Term Term::int_lit(const BigInt& v, Position pos) { return lit(IntConst{v}, pos); }
Term Term::bool_lit(bool v, Position pos) { return lit(BoolConst{v}, pos); }

TermKind Term::kind() const { return node_->kind; }
const Symbol& Term::name() const { return node_->name; }
const std::vector<Term>& Term::args() const { return node_->args; }
const Literal& Term::literal() const { return node_->literal; }
const std::vector<Binding>& Term::bindings() const { return node_->bindings; }
const Term& Term::body() const { return node_->args.front(); }
const SortExpr& Term::sort() const { return node_->sort; }
Position Term::pos() const { return node_->pos; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const TermNode& x = *a.node_;
  const TermNode& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case TermKind::App: return x.name == y.name && x.args == y.args;
    case TermKind::Lit: return x.literal == y.literal;
    case TermKind::Ref: return x.name == y.name;
    case TermKind::Let: return x.bindings == y.bindings && x.args == y.args;
    default: return x.sort == y.sort;
  }
}

Position command_pos(const Command& c) {
  return std::visit([](const auto& cmd) { return cmd.pos; }, c);
}

}  // namespace sygus
