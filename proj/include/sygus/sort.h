#ifndef SYGUS_SORT_H
#define SYGUS_SORT_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sygus/ast.h"

namespace sygus {

/**
 * Canonical, alias-free sort. Enum sorts carry an identity (the define-sort
 * name that introduced them, or `@line:col` of an inline definition) and
 * compare by identity alone.
 */
struct ResolvedSort {
  SortKind kind = SortKind::Int;
  std::uint32_t width = 0;
  Symbol identity;
  std::vector<Symbol> constructors;
  std::vector<ResolvedSort> children;

  static ResolvedSort integer() { return {SortKind::Int}; }
  static ResolvedSort boolean() { return {SortKind::Bool}; }
  static ResolvedSort real() { return {SortKind::Real}; }
  static ResolvedSort bitvec(std::uint32_t w) { return {SortKind::BitVec, w}; }
  static ResolvedSort array(ResolvedSort domain, ResolvedSort range);
  static ResolvedSort enumeration(Symbol identity, std::vector<Symbol> constructors);

  bool is_int() const { return kind == SortKind::Int; }
  bool is_bool() const { return kind == SortKind::Bool; }
  bool is_real() const { return kind == SortKind::Real; }
  bool is_bv() const { return kind == SortKind::BitVec; }
  bool is_enum() const { return kind == SortKind::Enum; }
  bool is_array() const { return kind == SortKind::Array; }

  /** True if this sort or any component is Real or Array. */
  bool involves_real_or_array() const;

  std::string str() const;

  friend bool operator==(const ResolvedSort& a, const ResolvedSort& b);
};

using SortTable = std::map<Symbol, ResolvedSort>;

/**
 * Expands every alias in `s` using the previously defined sorts in `table`.
 * Throws CheckError: E-SORT-UNDEF for an unknown alias, E-ENUM-DUP-CTOR for a
 * repeated constructor. `enum_identity` names an Enum at the root of `s`
 * (a define-sort body); nested or inline Enums use their source position.
 */
ResolvedSort resolve_sort(const SortExpr& s, const SortTable& table, const Symbol& enum_identity = {});

}  // namespace sygus

#endif  // SYGUS_SORT_H
