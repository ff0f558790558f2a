#include "support.h"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sygus/diagnostic.h"
#include "sygus/parser.h"
#include "sygus/printer.h"

using namespace sygus;

namespace testsupport {

std::string fixture_path(std::string_view name) { return std::string(SYGUS_FIXTURE_DIR) + "/" + std::string(name); }

std::string read_fixture(std::string_view name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + std::string(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(SYGUS_FIXTURE_DIR)) {
    if (e.path().extension() == ".sl") out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckedProblem check_text(std::string_view text) { return check_program(parse_program_text(text)); }

std::string diagnostic_code(std::string_view text) {
  try {
    check_text(text);
  } catch (const SygusError& e) {
    return e.code();
  }
  return "";
}

Term answer_body(std::string_view text) {
  for (const auto& c : parse_program_text(text).commands) {
    if (const auto* d = std::get_if<DefineFun>(&c)) return d->body;
  }
  throw std::runtime_error("no define-fun in answer");
}

ExpandedGrammar expanded_grammar(std::string_view text, const SolverConfig& cfg) {
  CheckedProblem p = check_text(text);
  return expand_shorthands(p.tasks.at(0), p, cfg);
}

std::string replace_once(std::string text, std::string_view from, std::string_view to) {
  auto at = text.find(from);
  if (at == std::string::npos) throw std::runtime_error("mutation site not found: " + std::string(from));
  text.replace(at, from.size(), to);
  return text;
}

std::vector<OracleGrammar> oracle_grammars() {
  return {
      {"let grammar", read_fixture("let_grammar.sl")},
      {"max2", read_fixture("max_min.sl")},
      {"min2 with shorthands", read_fixture("max_min.sl"), 1},
      {"sum of constants", "(synth-fun f () Int ((Start Int (0 1 (+ Start Start)))))(check-synth)"},
      {"bit-vector operators", read_fixture("bv_xor.sl")},
      {"enum with two non-terminals", read_fixture("enum_next.sl")},
      {"macros in productions", read_fixture("macros.sl")},
      {"Bool over Int non-terminal", read_fixture("uf_spec.sl")},
      {"unit production cycle",
       "(synth-fun f ((x Int)) Int ((Start Int (A (+ A 1))) (A Int (Start x 0))))(check-synth)"},
      {"two let variables",
       "(synth-fun f ((x Int)) Int ((Start Int (x w v (let ((w Int Start) (v Int x)) Start) (- Start)))))"
       "(check-synth)"},
      {"Bool connectives",
       "(synth-fun f ((p Bool) (q Bool)) Bool ((Start Bool (p q true (not Start) (and Start Start) (=> Start Start)))))"
       "(check-synth)"},
  };
}

// ---------------------------------------------------------------------------

namespace {

bool is_nt(const std::string& name, const ExpandedGrammar& g) {
  return std::any_of(g.nonterminals.begin(), g.nonterminals.end(), [&](const auto& nt) { return nt.name == name; });
}

// Replaces the leftmost non-terminal reference (pre-order) by `with`.
Term replace_leftmost(const Term& t, const ExpandedGrammar& g, const Term& with, bool& done) {
  if (done) return t;
  switch (t.kind()) {
    case TermKind::Ref:
      if (is_nt(t.name(), g)) {
        done = true;
        return with;
      }
      return t;
    case TermKind::App: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(replace_leftmost(a, g, with, done));
      return Term::app(t.name(), args);
    }
    case TermKind::Let: {
      std::vector<Binding> bs;
      for (const auto& b : t.bindings()) bs.push_back({b.name, b.sort, replace_leftmost(b.term, g, with, done)});
      Term body = replace_leftmost(t.body(), g, with, done);
      return Term::let(bs, body);
    }
    default:
      return t;
  }
}

const std::string* leftmost_nt(const Term& t, const ExpandedGrammar& g) {
  switch (t.kind()) {
    case TermKind::Ref: return is_nt(t.name(), g) ? &t.name() : nullptr;
    case TermKind::App:
      for (const auto& a : t.args()) {
        if (auto* n = leftmost_nt(a, g)) return n;
      }
      return nullptr;
    case TermKind::Let:
      for (const auto& b : t.bindings()) {
        if (auto* n = leftmost_nt(b.term, g)) return n;
      }
      return leftmost_nt(t.body(), g);
    default: return nullptr;
  }
}

// Node count written out independently of Term::size.
std::size_t count_nodes(const Term& t) {
  switch (t.kind()) {
    case TermKind::App: {
      std::size_t n = 1;
      for (const auto& a : t.args()) n += count_nodes(a);
      return n;
    }
    case TermKind::Let: {
      std::size_t n = 1 + count_nodes(t.body());
      for (const auto& b : t.bindings()) n += count_nodes(b.term);
      return n;
    }
    default: return 1;
  }
}

void free_lets(const Term& t, const std::set<std::string>& lets, std::vector<std::string>& bound,
               std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Ref:
      if (lets.count(t.name()) && std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      break;
    case TermKind::App:
      for (const auto& a : t.args()) free_lets(a, lets, bound, out);
      break;
    case TermKind::Let: {
      for (const auto& b : t.bindings()) free_lets(b.term, lets, bound, out);
      auto mark = bound.size();
      for (const auto& b : t.bindings()) bound.push_back(b.name);
      free_lets(t.body(), lets, bound, out);
      bound.resize(mark);
      break;
    }
    default: break;
  }
}

}  // namespace

std::vector<std::string> free_let_names(const Term& t, const ExpandedGrammar& g) {
  std::set<std::string> lets;
  for (const auto& [name, _] : g.let_vars) lets.insert(name);
  std::vector<std::string> bound;
  std::set<std::string> out;
  free_lets(t, lets, bound, out);
  return {out.begin(), out.end()};
}

std::vector<Term> oracle_derivations(const ExpandedGrammar& g, const std::string& start, std::size_t max_size) {
  std::deque<Term> queue{Term::ref(start)};
  std::set<std::string> seen_forms{start};
  std::set<std::string> seen_terms;
  std::vector<Term> out;
  while (!queue.empty()) {
    Term form = queue.front();
    queue.pop_front();
    const std::string* nt = leftmost_nt(form, g);
    if (!nt) {
      if (free_let_names(form, g).empty() && seen_terms.insert(print_term(form)).second) out.push_back(form);
      continue;
    }
    const std::string name = *nt;
    for (const auto& def : g.nonterminals) {
      if (def.name != name) continue;
      for (const auto& prod : def.productions) {
        bool done = false;
        Term next = replace_leftmost(form, g, prod, done);
        if (count_nodes(next) > max_size) continue;
        if (seen_forms.insert(print_term(next)).second) queue.push_back(next);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kSymbols = {"a", "b", "c", "v1", "v_2", "w.x", "k!", "q?", "acc", "tmp-3",
                                           "Z", "s$", "n%", "Start", "B0", "f", "g", "h^", "<=?", "x"};
const std::vector<std::string> kHeads = {"+", "-", "*", "<=", "=", "and", "or", "not", "ite", "bvadd", "f", "g", "select"};
const std::vector<std::string> kLogics = {"LIA", "BV", "Reals", "Arrays", "QF_NIA"};
const std::vector<std::string> kCtors = {"R", "G", "Bl", "Lo", "Hi"};
const std::vector<std::string> kOptionValues = {"1", "12", "abc", "1.5", "x9", "0"};

}  // namespace

std::string ProgramGen::symbol() { return kSymbols[pick(kSymbols.size())]; }

std::vector<std::string> ProgramGen::distinct_symbols(std::size_t n) {
  std::vector<std::string> pool = kSymbols;
  std::shuffle(pool.begin(), pool.end(), rng_);
  pool.resize(std::min(n, pool.size()));
  return pool;
}

SortExpr ProgramGen::sort(int depth) {
  switch (pick(depth > 0 ? 7 : 5)) {
    case 0: return SortExpr::integer();
    case 1: return SortExpr::boolean();
    case 2: return SortExpr::real();
    case 3: return SortExpr::bitvec(static_cast<std::uint32_t>(1 + pick(16)));
    case 4: return SortExpr::named(symbol());
    case 5: {
      std::vector<std::string> ctors = kCtors;
      std::shuffle(ctors.begin(), ctors.end(), rng_);
      ctors.resize(1 + pick(ctors.size()));
      return SortExpr::enumeration(ctors);
    }
    default: return SortExpr::array(sort(depth - 1), sort(depth - 1));
  }
}

Literal ProgramGen::literal() {
  switch (pick(5)) {
    case 0: return IntConst{BigInt(static_cast<long long>(pick(2001)) - 1000)};
    case 1: {
      BigInt den = 1;
      for (std::size_t d = pick(4); d > 0; --d) den *= 10;
      BigInt num = BigInt(static_cast<long long>(pick(20001)) - 10000);
      return RealConst{BigRational(num, den)};
    }
    case 2: return BoolConst{coin()};
    case 3: {
      auto w = static_cast<std::uint32_t>(1 + pick(20));
      return BVConst{BitVector::wrap(w, BigInt(rng_()))};
    }
    default: return EnumConst{symbol(), kCtors[pick(kCtors.size())]};
  }
}

Term ProgramGen::term(int depth, bool grammar) {
  std::size_t choice = pick(depth > 0 ? 6 : 2);
  if (grammar && pick(5) == 0) {
    static const TermKind kinds[] = {TermKind::ConstantOf, TermKind::VariableOf, TermKind::InputVariableOf,
                                     TermKind::LocalVariableOf};
    return Term::shorthand(kinds[pick(4)], sort(1));
  }
  switch (choice) {
    case 0: return Term::lit(literal());
    case 1: return Term::ref(symbol());
    case 5: {
      auto names = distinct_symbols(1 + pick(3));
      std::vector<Binding> bs;
      for (const auto& n : names) bs.push_back({n, sort(1), term(depth - 1, grammar)});
      return Term::let(std::move(bs), term(depth - 1, grammar));
    }
    default: {
      std::vector<Term> args;
      for (std::size_t n = pick(4); n > 0; --n) args.push_back(term(depth - 1, grammar));
      return Term::app(kHeads[pick(kHeads.size())], std::move(args));
    }
  }
}

Command ProgramGen::command() {
  auto params = [&] {
    std::vector<SortedVar> ps;
    for (const auto& n : distinct_symbols(pick(4))) ps.push_back({n, sort(1), {}});
    return ps;
  };
  switch (pick(8)) {
    case 0: return DefineSort{symbol(), sort(), {}};
    case 1: return DeclareVar{symbol(), sort(), {}};
    case 2: {
      std::vector<SortExpr> args;
      for (std::size_t n = pick(4); n > 0; --n) args.push_back(sort(1));
      return DeclareFun{symbol(), std::move(args), sort(1), {}};
    }
    case 3: return DefineFun{symbol(), params(), sort(1), term(3), {}};
    case 4: {
      std::vector<NTDef> grammar;
      for (const auto& n : distinct_symbols(1 + pick(3))) {
        NTDef nt{n, sort(1), {}, {}};
        for (std::size_t k = 1 + pick(4); k > 0; --k) nt.productions.push_back(term(3, true));
        grammar.push_back(std::move(nt));
      }
      return SynthFun{symbol(), params(), sort(1), std::move(grammar), {}};
    }
    case 5: return Constraint{term(4), {}};
    case 6: return CheckSynth{};
    default: {
      SetOptions o;
      for (std::size_t k = 1 + pick(3); k > 0; --k) o.options.emplace_back(symbol(), kOptionValues[pick(kOptionValues.size())]);
      return o;
    }
  }
}

Program ProgramGen::program() {
  Program p;
  if (coin()) p.commands.push_back(SetLogic{kLogics[pick(kLogics.size())], {}});
  for (std::size_t n = 1 + pick(8); n > 0; --n) p.commands.push_back(command());
  return p;
}

// ---------------------------------------------------------------------------

std::string TypedTermGen::macro_prelude() {
  return "(declare-var x Int)\n"
         "(declare-var y Int)\n"
         "(declare-var p Bool)\n"
         "(define-fun k () Int 3)\n"
         "(define-fun dbl ((a Int)) Int (+ a a))\n"
         "(define-fun pick ((c Bool) (a Int) (b Int)) Int (ite c a b))\n"
         "(define-fun grab ((a Int)) Int (let ((y Int 1)) (+ y a)))\n"
         "(define-fun quad ((x Int)) Int (dbl (dbl x)))\n"
         "(define-fun lt ((a Int) (b Int)) Bool (< a b))\n"
         "(define-fun dbl ((c Bool)) Bool (and c c))\n";
}

Term TypedTermGen::let_term(int depth, bool want_int) {
  // Rebinding an existing name keeps its sort, so shadowing stays well-sorted.
  static const std::vector<std::string> kIntNames = {"x", "y", "z"};
  static const std::vector<std::string> kBoolNames = {"p", "q"};
  std::vector<Binding> bs;
  std::vector<std::string> new_ints, new_bools;
  std::size_t n = 1 + pick(2);
  std::vector<std::string> used;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_int = pick(3) != 0;
    const auto& names = is_int ? kIntNames : kBoolNames;
    std::string name = names[pick(names.size())];
    if (std::find(used.begin(), used.end(), name) != used.end()) continue;
    used.push_back(name);
    Term rhs = is_int ? int_term(depth - 1) : bool_term(depth - 1);
    bs.push_back({name, is_int ? SortExpr::integer() : SortExpr::boolean(), rhs});
    (is_int ? new_ints : new_bools).push_back(name);
  }
  auto saved_ints = ints_;
  auto saved_bools = bools_;
  for (auto& v : new_ints) {
    if (std::find(ints_.begin(), ints_.end(), v) == ints_.end()) ints_.push_back(v);
  }
  for (auto& v : new_bools) {
    if (std::find(bools_.begin(), bools_.end(), v) == bools_.end()) bools_.push_back(v);
  }
  Term body = want_int ? int_term(depth - 1) : bool_term(depth - 1);
  ints_ = saved_ints;
  bools_ = saved_bools;
  return Term::let(std::move(bs), body);
}

Term TypedTermGen::int_term(int depth) {
  std::size_t choice = depth <= 0 ? pick(3) : pick(12);
  switch (choice) {
    case 0: return Term::int_lit(BigInt(static_cast<long long>(pick(11)) - 5));
    case 1: return Term::ref(ints_[pick(ints_.size())]);
    case 2: return Term::ref("k");
    case 3: return Term::app("+", {int_term(depth - 1), int_term(depth - 1)});
    case 4: return Term::app("-", {int_term(depth - 1), int_term(depth - 1)});
    case 5: return Term::app("*", {Term::int_lit(BigInt(static_cast<long long>(pick(5)) - 2)), int_term(depth - 1)});
    case 6: return Term::app("ite", {bool_term(depth - 1), int_term(depth - 1), int_term(depth - 1)});
    case 7: return Term::app("dbl", {int_term(depth - 1)});
    case 8: return Term::app("pick", {bool_term(depth - 1), int_term(depth - 1), int_term(depth - 1)});
    case 9: return Term::app("grab", {int_term(depth - 1)});
    case 10: return Term::app("quad", {int_term(depth - 1)});
    default: return let_term(depth, true);
  }
}

Term TypedTermGen::bool_term(int depth) {
  std::size_t choice = depth <= 0 ? pick(2) : pick(8);
  switch (choice) {
    case 0: return Term::bool_lit(pick(2) == 0);
    case 1: return Term::ref(bools_[pick(bools_.size())]);
    case 2: return Term::app("<=", {int_term(depth - 1), int_term(depth - 1)});
    case 3: return Term::app("=", {int_term(depth - 1), int_term(depth - 1)});
    case 4: return Term::app("not", {bool_term(depth - 1)});
    case 5: return Term::app("lt", {int_term(depth - 1), int_term(depth - 1)});
    case 6: return Term::app("dbl", {bool_term(depth - 1)});
    default: return let_term(depth, false);
  }
}

}  // namespace testsupport
