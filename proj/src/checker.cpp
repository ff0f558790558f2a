#include "sygus/checker.h"

#include <algorithm>
#include <map>
#include <set>

#include "sygus/diagnostic.h"

namespace sygus {

namespace {

std::string sorts_str(const std::vector<ResolvedSort>& sorts) {
  std::string out = "(";
  for (std::size_t i = 0; i < sorts.size(); ++i) {
    if (i) out += ' ';
    out += sorts[i].str();
  }
  return out + ")";
}

bool visible(const FunctionSig& f, TermContext ctx) {
  return ctx == TermContext::Constraint || f.kind == FunctionSig::Kind::Macro;
}

[[noreturn]] void invisible_function(const Symbol& name, FunctionSig::Kind kind, TermContext ctx, Position pos) {
  if (kind == FunctionSig::Kind::Uninterpreted) {
    if (ctx == TermContext::MacroBody) {
      throw CheckError(code::kUfInMacro, pos,
                       "uninterpreted function '" + name + "' may not be used in a define-fun body");
    }
    throw CheckError(code::kUfInGrammar, pos, "uninterpreted function '" + name + "' may not be used in a grammar");
  }
  throw CheckError(code::kUnbound, pos, "synthesis function '" + name + "' is not in scope here");
}

bool is_int_literal_like(const Term& t) {
  if (t.kind() == TermKind::ConstantOf) return true;
  return t.kind() == TermKind::Lit && std::holds_alternative<IntConst>(t.literal());
}

ResolvedSort literal_sort(const Literal& lit, const SortTable& sorts, Position pos) {
  return std::visit(
      [&](const auto& l) -> ResolvedSort {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, IntConst>) {
          return ResolvedSort::integer();
        } else if constexpr (std::is_same_v<L, RealConst>) {
          return ResolvedSort::real();
        } else if constexpr (std::is_same_v<L, BoolConst>) {
          return ResolvedSort::boolean();
        } else if constexpr (std::is_same_v<L, BVConst>) {
          return ResolvedSort::bitvec(l.bv.width);
        } else {
          auto it = sorts.find(l.sort);
          if (it == sorts.end() || !it->second.is_enum()) {
            throw CheckError(code::kEnumConst, pos, "'" + l.sort + "' does not name an enumerated sort");
          }
          const auto& ctors = it->second.constructors;
          if (std::find(ctors.begin(), ctors.end(), l.constructor) == ctors.end()) {
            throw CheckError(code::kEnumConst, pos,
                             "'" + l.constructor + "' is not a constructor of '" + l.sort + "'");
          }
          return it->second;
        }
      },
      lit);
}

ResolvedSort type_of_app(const Term& t, Scope& scope) {
  std::vector<ResolvedSort> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(type_of_term(a, scope));

  const Symbol& head = t.name();
  bool named_visible = false;
  const FunctionSig* hidden = nullptr;
  for (const auto& f : *scope.functions) {
    if (f.name != head) continue;
    if (!visible(f, scope.context)) {
      if (!hidden) hidden = &f;
      continue;
    }
    named_visible = true;
    if (f.args == args) return f.ret;
  }

  if (scope.theory->has_operator(head)) {
    if (auto r = scope.theory->result_sort(head, args)) {
      if (lookup_op(head) == Op::Mul && r->is_int()) {
        auto non_literal = std::count_if(t.args().begin(), t.args().end(),
                                         [](const Term& a) { return !is_int_literal_like(a); });
        if (non_literal > 1) {
          throw CheckError(code::kNonlinear, t.pos(), "'*' in linear arithmetic needs a literal factor");
        }
      }
      return *r;
    }
    named_visible = true;
  }
  if (named_visible) {
    throw CheckError(code::kAppSig, t.pos(), "no signature of '" + head + "' accepts " + sorts_str(args));
  }
  if (hidden) invisible_function(head, hidden->kind, scope.context, t.pos());
  throw CheckError(code::kUnbound, t.pos(), "unknown function '" + head + "'");
}

ResolvedSort type_of_ref(const Term& t, Scope& scope) {
  if (const ResolvedSort* s = scope.find_var(t.name())) return *s;
  const FunctionSig* hidden = nullptr;
  for (const auto& f : *scope.functions) {
    if (f.name != t.name() || !f.args.empty()) continue;
    if (visible(f, scope.context)) return f.ret;
    if (!hidden) hidden = &f;
  }
  if (hidden) invisible_function(t.name(), hidden->kind, scope.context, t.pos());
  throw CheckError(code::kUnbound, t.pos(), "'" + t.name() + "' is not in scope");
}

ResolvedSort type_of_let(const Term& t, Scope& scope) {
  std::vector<std::pair<Symbol, ResolvedSort>> bound;
  for (const auto& b : t.bindings()) {
    ResolvedSort declared = resolve_sort(b.sort, *scope.sorts);
    ResolvedSort actual = type_of_term(b.term, scope);
    if (!(declared == actual)) {
      throw CheckError(code::kLetSort, b.term.pos(),
                       "let binding '" + b.name + "' declared " + declared.str() + " but bound to " + actual.str());
    }
    if (std::find(scope.params.begin(), scope.params.end(), b.name) != scope.params.end()) {
      throw CheckError(code::kShadowArg, t.pos(), "let binding '" + b.name + "' shadows an input argument");
    }
    if (const ResolvedSort* outer = scope.find_var(b.name); outer && !(*outer == declared)) {
      throw CheckError(code::kShadowSort, t.pos(),
                       "let binding '" + b.name + "' of sort " + declared.str() + " shadows a variable of sort " +
                           outer->str());
    }
    bound.emplace_back(b.name, std::move(declared));
  }
  const std::size_t mark = scope.vars.size();
  for (auto& b : bound) scope.vars.push_back(std::move(b));
  ResolvedSort result = type_of_term(t.body(), scope);
  scope.vars.resize(mark);
  return result;
}

// Collects let-bound names of a grammar term, outermost first.
void collect_lets(const Term& t, std::vector<std::pair<const Binding*, Position>>& out) {
  switch (t.kind()) {
    case TermKind::App:
      for (const auto& a : t.args()) collect_lets(a, out);
      break;
    case TermKind::Let:
      for (const auto& b : t.bindings()) {
        out.emplace_back(&b, t.pos());
        collect_lets(b.term, out);
      }
      collect_lets(t.body(), out);
      break;
    default:
      break;
  }
}

class Checker {
 public:
  CheckedProblem run(const Program& p) {
    bool checked_synth = false;
    for (const auto& cmd : p.commands) {
      if (std::holds_alternative<CheckSynth>(cmd)) {
        checked_synth = true;
        break;
      }
      std::visit([this](const auto& c) { this->process(c); }, cmd);
    }
    if (!checked_synth) {
      Position pos = p.commands.empty() ? Position{} : command_pos(p.commands.back());
      throw CheckError(code::kNoCheck, pos, "no check-synth command");
    }
    return std::move(problem_);
  }

 private:
  void process(const SetLogic& c) {
    auto sig = TheorySignature::for_logic(c.logic);
    if (!sig) throw CheckError(code::kLogicUnknown, c.pos, "unknown logic '" + c.logic + "'");
    problem_.logic = *sig;
  }

  void process(const DefineSort& c) {
    if (problem_.sorts.count(c.name)) {
      throw CheckError(code::kSortRedef, c.pos, "sort '" + c.name + "' is already defined");
    }
    problem_.sorts.emplace(c.name, resolve_sort(c.body, problem_.sorts, c.name));
  }

  void process(const DeclareVar& c) {
    ResolvedSort sort = resolve_sort(c.sort, problem_.sorts);
    if (is_universal(c.name)) {
      throw CheckError(code::kClashVar, c.pos, "variable '" + c.name + "' is already declared");
    }
    for (const auto& f : problem_.functions) {
      if (f.name == c.name && f.args.empty()) {
        throw CheckError(code::kClashVar, c.pos,
                         "variable '" + c.name + "' clashes with a 0-arity " + kind_name(f.kind));
      }
    }
    problem_.universal_vars.emplace_back(c.name, std::move(sort));
  }

  void process(const DeclareFun& c) {
    std::vector<ResolvedSort> args;
    for (const auto& s : c.arg_sorts) args.push_back(resolve_sort(s, problem_.sorts));
    ResolvedSort ret = resolve_sort(c.ret, problem_.sorts);
    check_function_clash(c.name, args, c.pos);
    problem_.functions.push_back(
        {FunctionSig::Kind::Uninterpreted, c.name, args, ret, problem_.ufs.size()});
    problem_.ufs.push_back({c.name, std::move(args), std::move(ret)});
  }

  void process(const DefineFun& c) {
    std::vector<Param> params = resolve_params(c.params);
    ResolvedSort ret = resolve_sort(c.ret, problem_.sorts);
    std::vector<ResolvedSort> arg_sorts = sorts_of(params);
    check_function_clash(c.name, arg_sorts, c.pos);
    check_distinct_params(c.params);

    Scope scope = base_scope(TermContext::MacroBody);
    for (const auto& p : params) {
      scope.vars.emplace_back(p.name, p.sort);
      scope.params.push_back(p.name);
    }
    ResolvedSort body = type_of_term(c.body, scope);
    if (!(body == ret)) {
      throw CheckError(code::kMacroSort, c.body.pos(),
                       "body of '" + c.name + "' has sort " + body.str() + ", expected " + ret.str());
    }
    problem_.functions.push_back({FunctionSig::Kind::Macro, c.name, arg_sorts, ret, problem_.macros.size()});
    problem_.macros.push_back({c.name, std::move(params), std::move(ret), c.ret, c.body});
  }

  void process(const SynthFun& c) {
    std::vector<Param> params = resolve_params(c.params);
    ResolvedSort ret = resolve_sort(c.ret, problem_.sorts);
    std::vector<ResolvedSort> arg_sorts = sorts_of(params);
    check_function_clash(c.name, arg_sorts, c.pos);
    check_distinct_params(c.params);
    CheckedGrammar grammar = check_grammar(c, params, ret, problem_);
    problem_.functions.push_back({FunctionSig::Kind::Synth, c.name, arg_sorts, ret, problem_.tasks.size()});
    problem_.tasks.push_back({c.name, std::move(params), std::move(ret), c.ret, std::move(grammar)});
  }

  void process(const Constraint& c) {
    Scope scope = constraint_scope(problem_);
    ResolvedSort s = type_of_term(c.body, scope);
    if (!s.is_bool()) {
      throw CheckError(code::kConstraintSort, c.body.pos(), "constraint has sort " + s.str() + ", expected Bool");
    }
    problem_.constraints.push_back(c.body);
  }

  void process(const CheckSynth&) {}

  void process(const SetOptions& c) {
    for (const auto& o : c.options) problem_.options.push_back(o);
  }

  static const char* kind_name(FunctionSig::Kind k) {
    switch (k) {
      case FunctionSig::Kind::Uninterpreted: return "uninterpreted function";
      case FunctionSig::Kind::Macro: return "function macro";
      case FunctionSig::Kind::Synth: return "synthesis function";
    }
    return "function";
  }

  bool is_universal(const Symbol& name) const {
    return std::any_of(problem_.universal_vars.begin(), problem_.universal_vars.end(),
                       [&](const auto& v) { return v.first == name; });
  }

  void check_function_clash(const Symbol& name, const std::vector<ResolvedSort>& args, Position pos) const {
    if (args.empty() && is_universal(name)) {
      throw CheckError(code::kClashFun, pos, "0-arity function '" + name + "' clashes with a declared variable");
    }
    for (const auto& f : problem_.functions) {
      if (f.name == name && f.args == args) {
        throw CheckError(code::kClashFun, pos,
                         "'" + name + "' clashes with a " + std::string(kind_name(f.kind)) +
                             " of the same argument sorts " + sorts_str(args));
      }
    }
  }

  static void check_distinct_params(const std::vector<SortedVar>& params) {
    std::set<Symbol> seen;
    for (const auto& p : params) {
      if (!seen.insert(p.name).second) {
        throw CheckError(code::kParamDup, p.pos, "parameter '" + p.name + "' is repeated");
      }
    }
  }

  std::vector<Param> resolve_params(const std::vector<SortedVar>& vars) const {
    std::vector<Param> out;
    for (const auto& v : vars) out.push_back({v.name, resolve_sort(v.sort, problem_.sorts), v.sort});
    return out;
  }

  static std::vector<ResolvedSort> sorts_of(const std::vector<Param>& params) {
    std::vector<ResolvedSort> out;
    for (const auto& p : params) out.push_back(p.sort);
    return out;
  }

  Scope base_scope(TermContext ctx) const {
    Scope s;
    s.theory = &problem_.logic;
    s.sorts = &problem_.sorts;
    s.functions = &problem_.functions;
    s.context = ctx;
    return s;
  }

  CheckedProblem problem_;
};

}  // namespace

const CheckedNonTerminal* CheckedGrammar::find(const Symbol& name) const {
  for (const auto& nt : nonterminals) {
    if (nt.name == name) return &nt;
  }
  return nullptr;
}

std::optional<std::size_t> CheckedProblem::task_index(const Symbol& name) const {
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (tasks[i].name == name) return i;
  }
  return std::nullopt;
}

const ResolvedSort* Scope::find_var(const Symbol& name) const {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

Scope constraint_scope(const CheckedProblem& problem) {
  Scope s;
  s.theory = &problem.logic;
  s.sorts = &problem.sorts;
  s.functions = &problem.functions;
  s.context = TermContext::Constraint;
  s.vars = problem.universal_vars;
  return s;
}

ResolvedSort type_of_term(const Term& t, Scope& scope) {
  switch (t.kind()) {
    case TermKind::Lit: return literal_sort(t.literal(), *scope.sorts, t.pos());
    case TermKind::Ref: return type_of_ref(t, scope);
    case TermKind::App: return type_of_app(t, scope);
    case TermKind::Let: return type_of_let(t, scope);
    default: return resolve_sort(t.sort(), *scope.sorts);
  }
}

CheckedGrammar check_grammar(const SynthFun& sf, const std::vector<Param>& params, const ResolvedSort& ret,
                             const CheckedProblem& env) {
  CheckedGrammar g;
  std::set<Symbol> nt_names;
  for (const auto& nt : sf.grammar) {
    if (!nt_names.insert(nt.name).second) {
      throw CheckError(code::kNtDup, nt.pos, "non-terminal '" + nt.name + "' is defined twice");
    }
    g.nonterminals.push_back({nt.name, resolve_sort(nt.sort, env.sorts), nt.productions});
  }

  auto is_param = [&](const Symbol& n) {
    return std::any_of(params.begin(), params.end(), [&](const Param& p) { return p.name == n; });
  };

  // Let-bound names across all productions: no input-argument shadowing and
  // one sort per name.
  std::map<Symbol, ResolvedSort> let_sorts;
  for (const auto& nt : sf.grammar) {
    for (const auto& prod : nt.productions) {
      std::vector<std::pair<const Binding*, Position>> lets;
      collect_lets(prod, lets);
      for (const auto& [b, pos] : lets) {
        if (is_param(b->name)) {
          throw CheckError(code::kShadowArg, pos, "let binding '" + b->name + "' shadows an input argument");
        }
        ResolvedSort s = resolve_sort(b->sort, env.sorts);
        auto [it, fresh] = let_sorts.emplace(b->name, s);
        if (fresh) {
          g.let_vars.emplace_back(b->name, s);
        } else if (!(it->second == s)) {
          throw CheckError(code::kLetSortConflict, pos,
                           "let-bound '" + b->name + "' used with sorts " + it->second.str() + " and " + s.str());
        }
      }
    }
  }

  for (const auto& nt : sf.grammar) {
    for (const auto& m : env.macros) {
      if (m.name == nt.name && m.params.empty()) {
        throw CheckError(code::kNtClash, nt.pos, "non-terminal '" + nt.name + "' clashes with a 0-arity macro");
      }
    }
    if (is_param(nt.name)) {
      throw CheckError(code::kNtClash, nt.pos, "non-terminal '" + nt.name + "' clashes with a formal argument");
    }
    if (let_sorts.count(nt.name)) {
      throw CheckError(code::kNtClash, nt.pos, "non-terminal '" + nt.name + "' clashes with a let-bound variable");
    }
  }

  const CheckedNonTerminal* start = g.find("Start");
  if (!start) throw CheckError(code::kStartMissing, sf.pos, "grammar of '" + sf.name + "' has no Start non-terminal");
  if (!(start->sort == ret)) {
    throw CheckError(code::kStartSort, sf.pos,
                     "Start has sort " + start->sort.str() + " but '" + sf.name + "' returns " + ret.str());
  }

  Scope scope;
  scope.theory = &env.logic;
  scope.sorts = &env.sorts;
  scope.functions = &env.functions;
  scope.context = TermContext::Grammar;
  for (const auto& p : params) {
    scope.vars.emplace_back(p.name, p.sort);
    scope.params.push_back(p.name);
  }
  for (const auto& [name, sort] : g.let_vars) scope.vars.emplace_back(name, sort);
  for (const auto& nt : g.nonterminals) scope.vars.emplace_back(nt.name, nt.sort);

  for (const auto& nt : g.nonterminals) {
    for (const auto& prod : nt.productions) {
      ResolvedSort s = type_of_term(prod, scope);
      if (!(s == nt.sort)) {
        throw CheckError(code::kProdSort, prod.pos(),
                         "production of '" + nt.name + "' has sort " + s.str() + ", expected " + nt.sort.str());
      }
    }
  }
  return g;
}

CheckedProblem check_program(const Program& p) { return Checker().run(p); }

}  // namespace sygus
