#include "sygus/sort.h"

#include <set>

#include "sygus/diagnostic.h"

namespace sygus {

ResolvedSort ResolvedSort::array(ResolvedSort domain, ResolvedSort range) {
  ResolvedSort s{SortKind::Array};
  s.children.push_back(std::move(domain));
  s.children.push_back(std::move(range));
  return s;
}

ResolvedSort ResolvedSort::enumeration(Symbol identity, std::vector<Symbol> constructors) {
  ResolvedSort s{SortKind::Enum};
  s.identity = std::move(identity);
  s.constructors = std::move(constructors);
  return s;
}

bool ResolvedSort::involves_real_or_array() const {
  return kind == SortKind::Real || kind == SortKind::Array;
}

std::string ResolvedSort::str() const {
  switch (kind) {
    case SortKind::Int: return "Int";
    case SortKind::Bool: return "Bool";
    case SortKind::Real: return "Real";
    case SortKind::BitVec: return "(BitVec " + std::to_string(width) + ")";
    case SortKind::Enum: return identity;
    case SortKind::Array: return "(Array " + children[0].str() + " " + children[1].str() + ")";
    case SortKind::Named: break;
  }
  return "?";
}

bool operator==(const ResolvedSort& a, const ResolvedSort& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SortKind::BitVec: return a.width == b.width;
    case SortKind::Enum: return a.identity == b.identity;
    case SortKind::Array: return a.children == b.children;
    default: return true;
  }
}

ResolvedSort resolve_sort(const SortExpr& s, const SortTable& table, const Symbol& enum_identity) {
  switch (s.kind) {
    case SortKind::Int: return ResolvedSort::integer();
    case SortKind::Bool: return ResolvedSort::boolean();
    case SortKind::Real: return ResolvedSort::real();
    case SortKind::BitVec: return ResolvedSort::bitvec(s.width);
    case SortKind::Enum: {
      std::set<Symbol> seen;
      for (const auto& c : s.constructors) {
        if (!seen.insert(c).second) {
          throw CheckError(code::kEnumDupCtor, s.pos, "constructor '" + c + "' repeated in Enum");
        }
      }
      Symbol id = enum_identity;
      if (id.empty()) id = "@" + std::to_string(s.pos.line) + ":" + std::to_string(s.pos.column);
      return ResolvedSort::enumeration(std::move(id), s.constructors);
    }
    case SortKind::Array:
      return ResolvedSort::array(resolve_sort(s.children[0], table), resolve_sort(s.children[1], table));
    case SortKind::Named: {
      auto it = table.find(s.name);
      if (it == table.end()) {
        throw CheckError(code::kSortUndef, s.pos, "sort '" + s.name + "' is not defined");
      }
      return it->second;
    }
  }
  throw CheckError(code::kSortUndef, s.pos, "malformed sort");
}

}  // namespace sygus
