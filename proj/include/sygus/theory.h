#ifndef SYGUS_THEORY_H
#define SYGUS_THEORY_H

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sygus/sort.h"

namespace sygus {

/** Every built-in operator known to any theory. */
enum class Op {
  // core (loaded by every logic)
  Eq, Distinct, Ite, And, Or, Not, Implies, Xor,
  // arithmetic, shared by LIA (Int) and Reals (Real)
  Add, Sub, Mul, Div, Le, Lt, Ge, Gt,
  // bit-vectors
  BvAdd, BvSub, BvAnd, BvOr, BvXor, BvNot, BvNeg, BvShl, BvLshr, BvUlt, BvUle,
  // arrays
  Select, Store,
};

std::optional<Op> lookup_op(std::string_view name);

/**
 * Operator table loaded by set-logic. Lookup is argument-sort directed and
 * yields at most one result sort.
 */
class TheorySignature {
 public:
  enum Family : unsigned { Core = 1, Lia = 2, Bv = 4, Reals = 8, Arrays = 16 };

  /** LIA, BV, Reals or Arrays; nullopt for anything else. */
  static std::optional<TheorySignature> for_logic(std::string_view logic);
  /** Used when the program has no set-logic. */
  static TheorySignature all();

  const std::string& name() const { return name_; }
  bool enables(Family f) const { return (families_ & f) != 0; }

  /** True if `name` is an operator of some loaded theory. */
  bool has_operator(std::string_view name) const;
  std::optional<ResolvedSort> result_sort(std::string_view name, std::span<const ResolvedSort> args) const;

 private:
  TheorySignature(std::string name, unsigned families) : name_(std::move(name)), families_(families) {}
  std::string name_;
  unsigned families_;
};

}  // namespace sygus

#endif  // SYGUS_THEORY_H
