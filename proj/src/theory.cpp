#include "sygus/theory.h"

#include <algorithm>
#include <unordered_map>

namespace sygus {

namespace {

const std::unordered_map<std::string_view, Op>& op_table() {
  static const std::unordered_map<std::string_view, Op> table = {
      {"=", Op::Eq},         {"distinct", Op::Distinct}, {"ite", Op::Ite},     {"and", Op::And},
      {"or", Op::Or},        {"not", Op::Not},           {"=>", Op::Implies},  {"xor", Op::Xor},
      {"+", Op::Add},        {"-", Op::Sub},             {"*", Op::Mul},       {"/", Op::Div},
      {"<=", Op::Le},        {"<", Op::Lt},              {">=", Op::Ge},       {">", Op::Gt},
      {"bvadd", Op::BvAdd},  {"bvsub", Op::BvSub},       {"bvand", Op::BvAnd}, {"bvor", Op::BvOr},
      {"bvxor", Op::BvXor},  {"bvnot", Op::BvNot},       {"bvneg", Op::BvNeg}, {"bvshl", Op::BvShl},
      {"bvlshr", Op::BvLshr}, {"bvult", Op::BvUlt},      {"bvule", Op::BvUle}, {"select", Op::Select},
      {"store", Op::Store},
  };
  return table;
}

bool all_same(std::span<const ResolvedSort> args) {
  return std::all_of(args.begin(), args.end(), [&](const ResolvedSort& s) { return s == args[0]; });
}

bool all_bool(std::span<const ResolvedSort> args) {
  return std::all_of(args.begin(), args.end(), [](const ResolvedSort& s) { return s.is_bool(); });
}

}  // namespace

std::optional<Op> lookup_op(std::string_view name) {
  auto it = op_table().find(name);
  if (it == op_table().end()) return std::nullopt;
  return it->second;
}

std::optional<TheorySignature> TheorySignature::for_logic(std::string_view logic) {
  if (logic == "LIA") return TheorySignature("LIA", Core | Lia);
  if (logic == "BV") return TheorySignature("BV", Core | Bv);
  if (logic == "Reals") return TheorySignature("Reals", Core | Reals);
  if (logic == "Arrays") return TheorySignature("Arrays", Core | Arrays);
  return std::nullopt;
}

TheorySignature TheorySignature::all() { return TheorySignature("ALL", Core | Lia | Bv | Reals | Arrays); }

bool TheorySignature::has_operator(std::string_view name) const {
  auto op = lookup_op(name);
  if (!op) return false;
  switch (*op) {
    case Op::Eq: case Op::Distinct: case Op::Ite: case Op::And: case Op::Or: case Op::Not:
    case Op::Implies: case Op::Xor:
      return true;
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Le: case Op::Lt: case Op::Ge: case Op::Gt:
      return enables(Lia) || enables(Reals);
    case Op::Div:
      return enables(Reals);
    case Op::Select: case Op::Store:
      return enables(Arrays);
    default:
      return enables(Bv);
  }
}

std::optional<ResolvedSort> TheorySignature::result_sort(std::string_view name,
                                                         std::span<const ResolvedSort> args) const {
  if (!has_operator(name)) return std::nullopt;
  const std::size_t n = args.size();
  auto numeric = [&](std::size_t min_args) -> bool {
    if (n < min_args || !all_same(args)) return false;
    return (args[0].is_int() && enables(Lia)) || (args[0].is_real() && enables(Reals));
  };
  auto bv_same = [&](std::size_t min_args, std::size_t max_args) -> bool {
    return n >= min_args && n <= max_args && args[0].is_bv() && all_same(args);
  };
  switch (*lookup_op(name)) {
    case Op::Eq:
    case Op::Distinct:
      if (n >= 2 && all_same(args)) return ResolvedSort::boolean();
      return std::nullopt;
    case Op::Ite:
      if (n == 3 && args[0].is_bool() && args[1] == args[2]) return args[1];
      return std::nullopt;
    case Op::And:
    case Op::Or:
      if (n >= 1 && all_bool(args)) return ResolvedSort::boolean();
      return std::nullopt;
    case Op::Implies:
    case Op::Xor:
      if (n >= 2 && all_bool(args)) return ResolvedSort::boolean();
      return std::nullopt;
    case Op::Not:
      if (n == 1 && args[0].is_bool()) return ResolvedSort::boolean();
      return std::nullopt;
    case Op::Add:
    case Op::Mul:
      if (numeric(2)) return args[0];
      return std::nullopt;
    case Op::Sub:
      if (numeric(1)) return args[0];
      return std::nullopt;
    case Op::Div:
      if (n >= 2 && all_same(args) && args[0].is_real()) return args[0];
      return std::nullopt;
    case Op::Le:
    case Op::Lt:
    case Op::Ge:
    case Op::Gt:
      if (numeric(2)) return ResolvedSort::boolean();
      return std::nullopt;
    case Op::BvAdd:
    case Op::BvAnd:
    case Op::BvOr:
    case Op::BvXor:
      if (bv_same(2, SIZE_MAX)) return args[0];
      return std::nullopt;
    case Op::BvSub:
    case Op::BvShl:
    case Op::BvLshr:
      if (bv_same(2, 2)) return args[0];
      return std::nullopt;
    case Op::BvNot:
    case Op::BvNeg:
      if (bv_same(1, 1)) return args[0];
      return std::nullopt;
    case Op::BvUlt:
    case Op::BvUle:
      if (bv_same(2, 2)) return ResolvedSort::boolean();
      return std::nullopt;
    case Op::Select:
      if (n == 2 && args[0].is_array() && args[0].children[0] == args[1]) return args[0].children[1];
      return std::nullopt;
    case Op::Store:
      if (n == 3 && args[0].is_array() && args[0].children[0] == args[1] && args[0].children[1] == args[2]) {
        return args[0];
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace sygus
