#include "sygus/evaluator.h"

#include <algorithm>
#include <random>
#include <set>

#include "sygus/diagnostic.h"
#include "sygus/theory.h"

namespace sygus {

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool as_bool(const Value& v) { return std::get<bool>(v); }
const BitVector& as_bv(const Value& v) { return std::get<BitVector>(v); }

BigInt mask_of(std::uint32_t width) { return (BigInt(1) << width) - 1; }

template <typename T>
const T& num(const Value& v) {
  return std::get<T>(v);
}

template <typename T>
Value arith(Op op, const std::vector<Value>& args, Position pos) {
  T acc = num<T>(args[0]);
  switch (op) {
    case Op::Add:
      for (std::size_t i = 1; i < args.size(); ++i) acc += num<T>(args[i]);
      return acc;
    case Op::Sub:
      if (args.size() == 1) return T(-acc);
      for (std::size_t i = 1; i < args.size(); ++i) acc -= num<T>(args[i]);
      return acc;
    case Op::Mul:
      for (std::size_t i = 1; i < args.size(); ++i) acc *= num<T>(args[i]);
      return acc;
    case Op::Div:
      if constexpr (std::is_same_v<T, BigRational>) {
        for (std::size_t i = 1; i < args.size(); ++i) {
          if (num<T>(args[i]) == 0) throw EvalError(code::kDivZero, pos, "division by zero");
          acc /= num<T>(args[i]);
        }
        return acc;
      }
      break;
    default: {
      for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        const T& a = num<T>(args[i]);
        const T& b = num<T>(args[i + 1]);
        bool ok = op == Op::Le ? a <= b : op == Op::Lt ? a < b : op == Op::Ge ? a >= b : a > b;
        if (!ok) return false;
      }
      return true;
    }
  }
  throw EvalError(code::kEvalUnsupported, pos, "unsupported arithmetic operator");
}

Value apply_op(Op op, const std::vector<Value>& args, Position pos) {
  switch (op) {
    case Op::Eq:
      for (std::size_t i = 1; i < args.size(); ++i) {
        if (!(args[i] == args[0])) return false;
      }
      return true;
    case Op::Distinct:
      for (std::size_t i = 0; i < args.size(); ++i) {
        for (std::size_t j = i + 1; j < args.size(); ++j) {
          if (args[i] == args[j]) return false;
        }
      }
      return true;
    case Op::Ite: return as_bool(args[0]) ? args[1] : args[2];
    case Op::And:
      return std::all_of(args.begin(), args.end(), [](const Value& v) { return as_bool(v); });
    case Op::Or:
      return std::any_of(args.begin(), args.end(), [](const Value& v) { return as_bool(v); });
    case Op::Not: return !as_bool(args[0]);
    case Op::Implies: {
      bool r = as_bool(args.back());
      for (std::size_t i = args.size() - 1; i-- > 0;) r = !as_bool(args[i]) || r;
      return r;
    }
    case Op::Xor: {
      bool r = false;
      for (const auto& v : args) r = r != as_bool(v);
      return r;
    }
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Le:
    case Op::Lt:
    case Op::Ge:
    case Op::Gt:
      if (std::holds_alternative<BigInt>(args[0])) return arith<BigInt>(op, args, pos);
      return arith<BigRational>(op, args, pos);
    case Op::BvAdd:
    case Op::BvAnd:
    case Op::BvOr:
    case Op::BvXor: {
      std::uint32_t w = as_bv(args[0]).width;
      BigInt acc = as_bv(args[0]).value;
      for (std::size_t i = 1; i < args.size(); ++i) {
        const BigInt& b = as_bv(args[i]).value;
        if (op == Op::BvAdd) acc += b;
        else if (op == Op::BvAnd) acc &= b;
        else if (op == Op::BvOr) acc |= b;
        else acc ^= b;
      }
      return BitVector::wrap(w, acc);
    }
    case Op::BvSub: {
      const auto& a = as_bv(args[0]);
      return BitVector::wrap(a.width, a.value - as_bv(args[1]).value);
    }
    case Op::BvNot: {
      const auto& a = as_bv(args[0]);
      return BitVector{a.width, BigInt(mask_of(a.width) ^ a.value)};
    }
    case Op::BvNeg: {
      const auto& a = as_bv(args[0]);
      return BitVector::wrap(a.width, -a.value);
    }
    case Op::BvShl:
    case Op::BvLshr: {
      const auto& a = as_bv(args[0]);
      const auto& amount = as_bv(args[1]).value;
      if (amount >= a.width) return BitVector{a.width, 0};
      auto k = static_cast<unsigned>(amount);
      if (op == Op::BvShl) return BitVector::wrap(a.width, BigInt(a.value << k));
      return BitVector{a.width, BigInt(a.value >> k)};
    }
    case Op::BvUlt: return as_bv(args[0]).value < as_bv(args[1]).value;
    case Op::BvUle: return as_bv(args[0]).value <= as_bv(args[1]).value;
    case Op::Select:
    case Op::Store:
      break;
  }
  throw EvalError(code::kEvalUnsupported, pos, "array operators have no evaluation semantics");
}

Value random_value(const ResolvedSort& s, std::mt19937_64& rng) {
  switch (s.kind) {
    case SortKind::Int: return BigInt(static_cast<long long>(rng() % 17) - 8);
    case SortKind::Bool: return (rng() & 1) != 0;
    case SortKind::BitVec: {
      BigInt v = 0;
      for (std::uint32_t done = 0; done < s.width; done += 64) {
        v <<= 64;
        v |= rng();
      }
      return BitVector::wrap(s.width, v);
    }
    case SortKind::Enum: return EnumValue{s.identity, s.constructors[rng() % s.constructors.size()]};
    default: break;
  }
  throw EvalError(code::kUfUnsupportedSort, {}, "no sampled values for sort " + s.str());
}

}  // namespace

std::string value_str(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using V = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<V, BigInt>) {
          return x.str();
        } else if constexpr (std::is_same_v<V, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<V, BitVector>) {
          return "#b" + x.bits();
        } else if constexpr (std::is_same_v<V, BigRational>) {
          return numerator(x).str() + "/" + denominator(x).str();
        } else {
          return x.identity + "::" + x.constructor;
        }
      },
      v);
}

bool value_has_sort(const Value& v, const ResolvedSort& s) {
  switch (s.kind) {
    case SortKind::Int: return std::holds_alternative<BigInt>(v);
    case SortKind::Bool: return std::holds_alternative<bool>(v);
    case SortKind::Real: return std::holds_alternative<BigRational>(v);
    case SortKind::BitVec:
      return std::holds_alternative<BitVector>(v) && std::get<BitVector>(v).width == s.width;
    case SortKind::Enum:
      return std::holds_alternative<EnumValue>(v) && std::get<EnumValue>(v).identity == s.identity;
    default: return false;
  }
}

// ---------------------------------------------------------------------------

UfModel::UfModel(std::vector<UfDecl> decls, std::uint64_t seed) : decls_(std::move(decls)), seed_(seed) {
  for (const auto& d : decls_) {
    bool bad = d.ret.involves_real_or_array();
    for (const auto& a : d.args) bad = bad || a.involves_real_or_array();
    if (bad) {
      throw EvalError(code::kUfUnsupportedSort, {},
                      "uninterpreted function '" + d.name + "' has a Real or Array sort; no sampled models");
    }
  }
}

const Value& UfModel::apply(std::size_t uf_index, const std::vector<Value>& args) {
  std::string key;
  for (const auto& a : args) {
    key += value_str(a);
    key += ',';
  }
  auto [it, fresh] = memo_.try_emplace({uf_index, key}, false);
  if (fresh) {
    const UfDecl& d = decls_.at(uf_index);
    std::uint64_t h = fnv1a(d.name);
    for (const auto& a : d.args) h = fnv1a(a.str(), h);
    h = fnv1a(key, h);
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    std::mt19937_64 rng(seq);
    it->second = random_value(d.ret, rng);
  }
  return it->second;
}

UfModel fresh_uf_model(const std::vector<UfDecl>& decls, std::uint64_t seed) { return UfModel(decls, seed); }

bool Candidate::complete() const {
  return std::all_of(bodies_.begin(), bodies_.end(), [](const auto& b) { return b.has_value(); });
}

// ---------------------------------------------------------------------------

struct Evaluator::Frame {
  const Symbol* name;
  const Value* value;
  const Frame* next;
};

Evaluator::Evaluator(const CheckedProblem& problem) : problem_(&problem) {
  for (std::size_t i = 0; i < problem.functions.size(); ++i) {
    by_name_[problem.functions[i].name].push_back(i);
  }
}

bool Evaluator::has_user(const Symbol& name) const { return by_name_.count(name) != 0; }

const FunctionSig* Evaluator::find_user(const Symbol& name, const std::vector<Value>& args) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return nullptr;
  for (std::size_t idx : it->second) {
    const FunctionSig& f = problem_->functions[idx];
    if (f.args.size() != args.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < args.size() && match; ++i) match = value_has_sort(args[i], f.args[i]);
    if (match) return &f;
  }
  return nullptr;
}

Value Evaluator::eval(const Term& t, const Assignment& a) const { return eval_in(t, nullptr, &a); }

bool Evaluator::eval_bool(const Term& t, const Assignment& a) const { return std::get<bool>(eval(t, a)); }

Value Evaluator::call_task(std::size_t task, const std::vector<Value>& args) const {
  for (const auto& f : problem_->functions) {
    if (f.kind == FunctionSig::Kind::Synth && f.index == task) return apply_user(f, args);
  }
  throw EvalError(code::kUnbound, {}, "no such synthesis task");
}

Value Evaluator::apply_user(const FunctionSig& f, const std::vector<Value>& args) const {
  const std::vector<Param>* params = nullptr;
  const Term* body = nullptr;
  switch (f.kind) {
    case FunctionSig::Kind::Uninterpreted:
      if (!ufs_) throw EvalError(code::kEvalUnsupported, {}, "no model for uninterpreted function '" + f.name + "'");
      return ufs_->apply(f.index, args);
    case FunctionSig::Kind::Macro:
      params = &problem_->macros[f.index].params;
      body = &problem_->macros[f.index].body;
      break;
    case FunctionSig::Kind::Synth:
      if (!candidate_ || !candidate_->body(f.index)) {
        throw EvalError(code::kIncompleteCandidate, {}, "no candidate body for '" + f.name + "'");
      }
      params = &problem_->tasks[f.index].params;
      body = &*candidate_->body(f.index);
      break;
  }
  std::vector<Frame> frames(args.size());
  const Frame* top = nullptr;
  for (std::size_t i = 0; i < args.size(); ++i) {
    frames[i] = Frame{&(*params)[i].name, &args[i], top};
    top = &frames[i];
  }
  return eval_in(*body, top, nullptr);
}

Value Evaluator::apply_theory(const Term& t, const Frame* locals, const Assignment* globals) const {
  auto op = lookup_op(t.name());
  if (!op) throw EvalError(code::kUnbound, t.pos(), "unknown function '" + t.name() + "'");
  const auto& args = t.args();
  switch (*op) {
    case Op::Ite:
      return std::get<bool>(eval_in(args[0], locals, globals)) ? eval_in(args[1], locals, globals)
                                                               : eval_in(args[2], locals, globals);
    case Op::And:
      for (const auto& a : args) {
        if (!std::get<bool>(eval_in(a, locals, globals))) return false;
      }
      return true;
    case Op::Or:
      for (const auto& a : args) {
        if (std::get<bool>(eval_in(a, locals, globals))) return true;
      }
      return false;
    case Op::Implies:
      for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (!std::get<bool>(eval_in(args[i], locals, globals))) return true;
      }
      return eval_in(args.back(), locals, globals);
    case Op::Select:
    case Op::Store:
      throw EvalError(code::kEvalUnsupported, t.pos(), "array operators have no evaluation semantics");
    default: {
      std::vector<Value> vals;
      vals.reserve(args.size());
      for (const auto& a : args) vals.push_back(eval_in(a, locals, globals));
      return apply_op(*op, vals, t.pos());
    }
  }
}

Value Evaluator::eval_in(const Term& t, const Frame* locals, const Assignment* globals) const {
  switch (t.kind()) {
    case TermKind::Lit:
      return std::visit(
          [&](const auto& l) -> Value {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, IntConst>) {
              return l.value;
            } else if constexpr (std::is_same_v<L, RealConst>) {
              return l.value;
            } else if constexpr (std::is_same_v<L, BoolConst>) {
              return l.value;
            } else if constexpr (std::is_same_v<L, BVConst>) {
              return l.bv;
            } else {
              auto it = problem_->sorts.find(l.sort);
              Symbol id = it == problem_->sorts.end() ? l.sort : it->second.identity;
              return EnumValue{id, l.constructor};
            }
          },
          t.literal());
    case TermKind::Ref: {
      for (const Frame* f = locals; f; f = f->next) {
        if (*f->name == t.name()) return *f->value;
      }
      if (globals) {
        auto it = globals->find(t.name());
        if (it != globals->end()) return it->second;
      }
      static const std::vector<Value> kNoArgs;
      if (const FunctionSig* f = find_user(t.name(), kNoArgs)) return apply_user(*f, kNoArgs);
      throw EvalError(code::kUnbound, t.pos(), "'" + t.name() + "' has no value");
    }
    case TermKind::Let: {
      const auto& bs = t.bindings();
      std::vector<Value> vals;
      vals.reserve(bs.size());
      for (const auto& b : bs) vals.push_back(eval_in(b.term, locals, globals));
      std::vector<Frame> frames(bs.size());
      const Frame* top = locals;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        frames[i] = Frame{&bs[i].name, &vals[i], top};
        top = &frames[i];
      }
      return eval_in(t.body(), top, globals);
    }
    case TermKind::App: {
      if (!has_user(t.name())) return apply_theory(t, locals, globals);
      std::vector<Value> vals;
      vals.reserve(t.args().size());
      for (const auto& a : t.args()) vals.push_back(eval_in(a, locals, globals));
      if (const FunctionSig* f = find_user(t.name(), vals)) return apply_user(*f, vals);
      auto op = lookup_op(t.name());
      if (!op) throw EvalError(code::kUnbound, t.pos(), "no function '" + t.name() + "' for these arguments");
      return apply_op(*op, vals, t.pos());
    }
    default:
      throw EvalError(code::kEvalUnsupported, t.pos(), "grammar shorthand cannot be evaluated");
  }
}

Value eval(const Term& t, const Assignment& a, const EvalEnv& env) {
  Evaluator ev(*env.problem);
  ev.set_uf_model(env.ufs);
  ev.set_candidate(env.candidate);
  return ev.eval(t, a);
}

// ---------------------------------------------------------------------------

namespace {

void collect_free(const Term& t, std::vector<Symbol>& bound, std::set<Symbol>& out) {
  switch (t.kind()) {
    case TermKind::Ref:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      break;
    case TermKind::App:
      for (const auto& a : t.args()) collect_free(a, bound, out);
      break;
    case TermKind::Let: {
      for (const auto& b : t.bindings()) collect_free(b.term, bound, out);
      std::size_t mark = bound.size();
      for (const auto& b : t.bindings()) bound.push_back(b.name);
      collect_free(t.body(), bound, out);
      bound.resize(mark);
      break;
    }
    default:
      break;
  }
}

void collect_all_names(const Term& t, std::set<Symbol>& out) {
  switch (t.kind()) {
    case TermKind::Ref: out.insert(t.name()); break;
    case TermKind::App:
      for (const auto& a : t.args()) collect_all_names(a, out);
      break;
    case TermKind::Let:
      for (const auto& b : t.bindings()) {
        out.insert(b.name);
        collect_all_names(b.term, out);
      }
      collect_all_names(t.body(), out);
      break;
    default: break;
  }
}

class MacroExpander {
 public:
  explicit MacroExpander(const CheckedProblem& p) : problem_(p) {}

  Term expand(const Term& t, Scope& scope) {
    switch (t.kind()) {
      case TermKind::Ref: {
        if (scope.find_var(t.name())) return t;
        if (const Macro* m = find_macro(t.name(), {})) return expanded_body(*m);
        return t;
      }
      case TermKind::App: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        bool changed = false;
        for (const auto& a : t.args()) {
          args.push_back(expand(a, scope));
          changed = changed || args.back().node() != a.node();
        }
        if (is_macro_name(t.name())) {
          std::vector<ResolvedSort> sorts;
          for (const auto& a : args) sorts.push_back(type_of_term(a, scope));
          if (const Macro* m = find_macro(t.name(), sorts)) {
            std::map<Symbol, Term> repl;
            for (std::size_t i = 0; i < args.size(); ++i) repl.emplace(m->params[i].name, args[i]);
            return substitute(expanded_body(*m), repl);
          }
        }
        return changed ? Term::app(t.name(), std::move(args), t.pos()) : t;
      }
      case TermKind::Let: {
        std::vector<Binding> bs;
        for (const auto& b : t.bindings()) bs.push_back({b.name, b.sort, expand(b.term, scope)});
        std::size_t mark = scope.vars.size();
        for (const auto& b : t.bindings()) scope.vars.emplace_back(b.name, resolve_sort(b.sort, problem_.sorts));
        Term body = expand(t.body(), scope);
        scope.vars.resize(mark);
        return Term::let(std::move(bs), std::move(body), t.pos());
      }
      default:
        return t;
    }
  }

 private:
  bool is_macro_name(const Symbol& name) const {
    return std::any_of(problem_.macros.begin(), problem_.macros.end(), [&](const Macro& m) { return m.name == name; });
  }

  // Resolution mirrors the checker: the user function with exactly these
  // argument sorts, which must be a macro.
  const Macro* find_macro(const Symbol& name, const std::vector<ResolvedSort>& sorts) const {
    for (const auto& f : problem_.functions) {
      if (f.name == name && f.args == sorts) {
        return f.kind == FunctionSig::Kind::Macro ? &problem_.macros[f.index] : nullptr;
      }
    }
    return nullptr;
  }

  Term expanded_body(const Macro& m) {
    Scope scope;
    scope.theory = &problem_.logic;
    scope.sorts = &problem_.sorts;
    scope.functions = &problem_.functions;
    scope.context = TermContext::MacroBody;
    for (const auto& p : m.params) scope.vars.emplace_back(p.name, p.sort);
    return expand(m.body, scope);
  }

  const CheckedProblem& problem_;
};

}  // namespace

std::vector<Symbol> free_names(const Term& t) {
  std::vector<Symbol> bound;
  std::set<Symbol> out;
  collect_free(t, bound, out);
  return {out.begin(), out.end()};
}

Term substitute(const Term& t, const std::map<Symbol, Term>& replacement) {
  if (replacement.empty()) return t;
  switch (t.kind()) {
    case TermKind::Ref: {
      auto it = replacement.find(t.name());
      return it == replacement.end() ? t : it->second;
    }
    case TermKind::App: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(substitute(a, replacement));
      return Term::app(t.name(), std::move(args), t.pos());
    }
    case TermKind::Let: {
      std::vector<Binding> bs;
      for (const auto& b : t.bindings()) bs.push_back({b.name, b.sort, substitute(b.term, replacement)});

      std::map<Symbol, Term> inner = replacement;
      for (const auto& b : t.bindings()) inner.erase(b.name);
      std::set<Symbol> captured;
      for (const auto& [_, r] : inner) {
        for (auto& n : free_names(r)) captured.insert(std::move(n));
      }
      std::set<Symbol> taken = captured;
      collect_all_names(t, taken);
      for (auto& b : bs) {
        if (!captured.count(b.name)) continue;
        Symbol fresh;
        for (unsigned k = 1;; ++k) {
          fresh = b.name + "_" + std::to_string(k);
          if (!taken.count(fresh)) break;
        }
        taken.insert(fresh);
        inner[b.name] = Term::ref(fresh);
        b.name = fresh;
      }
      return Term::let(std::move(bs), substitute(t.body(), inner), t.pos());
    }
    default:
      return t;
  }
}

Term expand_macros(const Term& t, const CheckedProblem& problem) {
  Scope scope = constraint_scope(problem);
  return MacroExpander(problem).expand(t, scope);
}

}  // namespace sygus
