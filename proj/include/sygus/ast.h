#ifndef SYGUS_AST_H
#define SYGUS_AST_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sygus {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using Symbol = std::string;

/** 1-based source location. Line 0 marks a synthesized node. */
/** Decimal digits, optionally preceded by '-', read in base 10 (leading zeros allowed). */
BigInt parse_decimal(std::string_view text);

struct Position {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/** True iff `text` matches the identifier alphabet (reserved words included). */
bool is_symbol_text(std::string_view text);
bool is_reserved_word(std::string_view text);
bool is_special_char(char c);

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

/** Fixed-width bit-vector; `value` is the unsigned reading, always < 2^width. */
struct BitVector {
  std::uint32_t width = 1;
  BigInt value;

  static BitVector from_bits(std::string_view bits);
  static BitVector from_hex(std::string_view hex);
  /** Reduces `v` modulo 2^width (two's complement wrap for negatives). */
  static BitVector wrap(std::uint32_t width, const BigInt& v);

  /** Most significant bit first. */
  std::string bits() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
};

struct IntConst {
  BigInt value;
  friend bool operator==(const IntConst&, const IntConst&) = default;
};

/** Exact rational from a finite decimal expansion. */
struct RealConst {
  BigRational value;
  friend bool operator==(const RealConst&, const RealConst&) = default;
};

struct BoolConst {
  bool value = false;
  friend bool operator==(const BoolConst&, const BoolConst&) = default;
};

struct BVConst {
  BitVector bv;
  friend bool operator==(const BVConst&, const BVConst&) = default;
};

struct EnumConst {
  Symbol sort;
  Symbol constructor;
  friend bool operator==(const EnumConst&, const EnumConst&) = default;
};

using Literal = std::variant<IntConst, RealConst, BoolConst, BVConst, EnumConst>;

// ---------------------------------------------------------------------------
// Sorts
// ---------------------------------------------------------------------------

enum class SortKind { Int, Bool, Real, BitVec, Enum, Array, Named };

/**
 * Surface sort expression as written in the source. `Named` refers to a
 * define-sort alias and is resolved by the checker.
 */
struct SortExpr {
  SortKind kind = SortKind::Int;
  std::uint32_t width = 0;               // BitVec
  std::vector<Symbol> constructors;      // Enum
  std::vector<SortExpr> children;        // Array: {domain, range}
  Symbol name;                           // Named
  Position pos;

  static SortExpr integer(Position pos = {});
  static SortExpr boolean(Position pos = {});
  static SortExpr real(Position pos = {});
  static SortExpr bitvec(std::uint32_t width, Position pos = {});
  static SortExpr enumeration(std::vector<Symbol> constructors, Position pos = {});
  static SortExpr array(SortExpr domain, SortExpr range, Position pos = {});
  static SortExpr named(Symbol name, Position pos = {});

  /** Ignores positions. */
  friend bool operator==(const SortExpr& a, const SortExpr& b);
};

std::size_t hash_sort(const SortExpr& s);

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

/**
 * Term and GTerm share one representation. The four grammar shorthands are
 * only produced by the grammar-term parser.
 */
enum class TermKind {
  App,
  Lit,
  Ref,
  Let,
  ConstantOf,
  VariableOf,
  InputVariableOf,
  LocalVariableOf,
};

bool is_shorthand(TermKind k);
std::string_view shorthand_keyword(TermKind k);

struct TermNode;
struct Binding;

/**
 * Immutable, cheaply copyable handle to a term tree. Subtrees are shared.
 * Equality is structural and ignores source positions; bound names are
 * compared literally (no alpha-equivalence).
 */
class Term {
 public:
  Term() = default;

  static Term app(Symbol head, std::vector<Term> args, Position pos = {});
  static Term lit(Literal value, Position pos = {});
  static Term ref(Symbol name, Position pos = {});
  static Term let(std::vector<Binding> bindings, Term body, Position pos = {});
  static Term shorthand(TermKind kind, SortExpr sort, Position pos = {});

  static Term int_lit(const BigInt& v, Position pos = {});
  static Term bool_lit(bool v, Position pos = {});

  bool valid() const { return node_ != nullptr; }

  TermKind kind() const;
  /** Head symbol of an App, or the referenced name of a Ref. */
  const Symbol& name() const;
  /** App arguments. */
  const std::vector<Term>& args() const;
  const Literal& literal() const;
  const std::vector<Binding>& bindings() const;
  const Term& body() const;
  /** Sort operand of a shorthand. */
  const SortExpr& sort() const;
  Position pos() const;

  /** Node count; see term_size. */
  std::size_t size() const;
  std::size_t hash() const;

  /** Pointer identity of the shared node. */
  const TermNode* node() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

using GTerm = Term;

struct Binding {
  Symbol name;
  SortExpr sort;
  Term term;

  friend bool operator==(const Binding& a, const Binding& b) {
    return a.name == b.name && a.sort == b.sort && a.term == b.term;
  }
};

struct TermNode {
  TermKind kind = TermKind::Ref;
  Symbol name;
  std::vector<Term> args;  // App arguments; Let: {body}
  Literal literal;
  std::vector<Binding> bindings;
  SortExpr sort;
  Position pos;
  std::size_t size = 1;
  std::size_t hash = 0;
};

/**
 * Counts App/Lit/Ref/shorthand nodes; a Let counts its body, every binding
 * term, and itself.
 */
inline std::size_t term_size(const Term& t) { return t.size(); }

inline bool structural_eq(const Term& a, const Term& b) { return a == b; }

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct SortedVar {
  Symbol name;
  SortExpr sort;
  Position pos;

  friend bool operator==(const SortedVar& a, const SortedVar& b) {
    return a.name == b.name && a.sort == b.sort;
  }
};

/** One non-terminal of a synth-fun grammar. */
struct NTDef {
  Symbol name;
  SortExpr sort;
  std::vector<GTerm> productions;
  Position pos;

  friend bool operator==(const NTDef& a, const NTDef& b) {
    return a.name == b.name && a.sort == b.sort && a.productions == b.productions;
  }
};

struct SetLogic {
  Symbol logic;
  Position pos;
  friend bool operator==(const SetLogic& a, const SetLogic& b) { return a.logic == b.logic; }
};

struct DefineSort {
  Symbol name;
  SortExpr body;
  Position pos;
  friend bool operator==(const DefineSort& a, const DefineSort& b) {
    return a.name == b.name && a.body == b.body;
  }
};

struct DeclareVar {
  Symbol name;
  SortExpr sort;
  Position pos;
  friend bool operator==(const DeclareVar& a, const DeclareVar& b) {
    return a.name == b.name && a.sort == b.sort;
  }
};

struct DeclareFun {
  Symbol name;
  std::vector<SortExpr> arg_sorts;
  SortExpr ret;
  Position pos;
  friend bool operator==(const DeclareFun& a, const DeclareFun& b) {
    return a.name == b.name && a.arg_sorts == b.arg_sorts && a.ret == b.ret;
  }
};

struct DefineFun {
  Symbol name;
  std::vector<SortedVar> params;
  SortExpr ret;
  Term body;
  Position pos;
  friend bool operator==(const DefineFun& a, const DefineFun& b) {
    return a.name == b.name && a.params == b.params && a.ret == b.ret && a.body == b.body;
  }
};

struct SynthFun {
  Symbol name;
  std::vector<SortedVar> params;
  SortExpr ret;
  std::vector<NTDef> grammar;
  Position pos;
  friend bool operator==(const SynthFun& a, const SynthFun& b) {
    return a.name == b.name && a.params == b.params && a.ret == b.ret && a.grammar == b.grammar;
  }
};

struct Constraint {
  Term body;
  Position pos;
  friend bool operator==(const Constraint& a, const Constraint& b) { return a.body == b.body; }
};

struct CheckSynth {
  Position pos;
  friend bool operator==(const CheckSynth&, const CheckSynth&) { return true; }
};

struct SetOptions {
  std::vector<std::pair<Symbol, std::string>> options;
  Position pos;
  friend bool operator==(const SetOptions& a, const SetOptions& b) { return a.options == b.options; }
};

using Command = std::variant<SetLogic, DefineSort, DeclareVar, DeclareFun, DefineFun, SynthFun,
                             Constraint, CheckSynth, SetOptions>;

Position command_pos(const Command& c);

struct Program {
  std::vector<Command> commands;
  friend bool operator==(const Program&, const Program&) = default;
};

}  // namespace sygus

#endif  // SYGUS_AST_H
