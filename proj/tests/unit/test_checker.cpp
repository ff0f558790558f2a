#include <doctest.h>

#include <random>

#include "mutations.h"
#include "support.h"
#include "sygus/checker.h"
#include "sygus/diagnostic.h"
#include "sygus/evaluator.h"
#include "sygus/parser.h"

using namespace sygus;
using testsupport::diagnostic_code;
using testsupport::read_fixture;

namespace {

Value arbitrary(const ResolvedSort& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> ints(-1000, 1000);
  switch (s.kind) {
    case SortKind::Bool: return Value{rng() % 2 == 0};
    case SortKind::BitVec: return Value{BitVector::wrap(s.width, BigInt(ints(rng)))};
    case SortKind::Enum: return Value{EnumValue{s.identity, s.constructors[rng() % s.constructors.size()]}};
    default: return Value{BigInt(ints(rng))};
  }
}

ResolvedSort type_in_constraints(const CheckedProblem& p, std::string_view text) {
  Scope scope = constraint_scope(p);
  return type_of_term(parse_term_text(text), scope);
}

}  // namespace

TEST_SUITE("checker") {

TEST_CASE("max/min example: two tasks, two variables, four constraints") {
  CheckedProblem p = testsupport::check_text(read_fixture("max_min.sl"));
  REQUIRE(p.tasks.size() == 2);
  CHECK(p.tasks[0].name == "max2");
  CHECK(p.tasks[1].name == "min2");
  REQUIRE(p.universal_vars.size() == 2);
  CHECK(p.universal_vars[0].first == "x");
  CHECK(p.universal_vars[1].second == ResolvedSort::integer());
  CHECK(p.constraints.size() == 4);
  CHECK(p.ufs.empty());
}

TEST_CASE("uninterpreted-function example: one function, one task, one constraint") {
  CheckedProblem p = testsupport::check_text(read_fixture("uf_spec.sl"));
  CHECK(p.ufs.size() == 1);
  CHECK(p.tasks.size() == 1);
  CHECK(p.constraints.size() == 1);
  CHECK(p.tasks[0].ret == ResolvedSort::boolean());
}

TEST_CASE("let grammar is accepted and records z") {
  CheckedProblem p = testsupport::check_text(read_fixture("let_grammar.sl"));
  const auto& g = p.tasks.at(0).grammar;
  REQUIRE(g.let_vars.size() == 1);
  CHECK(g.let_vars[0].first == "z");
  CHECK(g.let_vars[0].second == ResolvedSort::integer());
}

TEST_CASE("every supported fixture checks") {
  for (const auto& name : testsupport::fixture_names()) {
    if (name.find("answer") != std::string::npos) continue;
    CAPTURE(name);
    CHECK(diagnostic_code(read_fixture(name)) == "");
  }
}

TEST_CASE("repeated universal variable") {
  CHECK(diagnostic_code("(declare-var x Int)(declare-var x Int)(check-synth)") == "E-CLASH-VAR");
  CHECK(diagnostic_code("(declare-var x Int)(declare-var x Bool)(check-synth)") == "E-CLASH-VAR");
}

TEST_CASE("uninterpreted functions overload on argument sorts") {
  CHECK(diagnostic_code("(declare-fun g (Int) Int)(declare-fun g (Bool) Int)(check-synth)") == "");
  CHECK(diagnostic_code("(declare-fun g (Int) Int)(declare-fun g (Int) Bool)(check-synth)") == "E-CLASH-FUN");
  CheckedProblem p = testsupport::check_text(
      "(declare-fun g (Int) Int)(declare-fun g (Bool) Bool)(declare-var x Int)(check-synth)");
  CHECK(type_in_constraints(p, "(g x)") == ResolvedSort::integer());
  CHECK(type_in_constraints(p, "(g true)") == ResolvedSort::boolean());
}

TEST_CASE("0-arity synth-fun and universal variable clash in both orders") {
  CHECK(diagnostic_code("(declare-var c Int)(synth-fun c () Int ((Start Int (0))))(check-synth)") == "E-CLASH-FUN");
  CHECK(diagnostic_code("(synth-fun c () Int ((Start Int (0))))(declare-var c Int)(check-synth)") == "E-CLASH-VAR");
}

TEST_CASE("grammar rules") {
  const std::string mm = read_fixture("max_min.sl");
  std::string renamed = mm;
  for (std::size_t at; (at = renamed.find("Start ")) != std::string::npos || (at = renamed.find("Start)")) != std::string::npos;) {
    renamed.replace(at, 5, "S");
  }
  CHECK(diagnostic_code(renamed) == "E-START-MISSING");
  CHECK(diagnostic_code(testsupport::replace_once(mm, "(0 1 x y", "(0 1 x y (<= Start Start)")) == "E-PROD-SORT");
}

TEST_CASE("term sorts") {
  CheckedProblem p = testsupport::check_text("(declare-var x Int)(declare-var y Int)(declare-var b Bool)(check-synth)");
  CHECK(type_in_constraints(p, "(+ x 1)") == ResolvedSort::integer());
  CHECK(type_in_constraints(p, "(ite (<= x y) y x)") == ResolvedSort::integer());
  CHECK(type_in_constraints(p, "(let ((x Int 1) (y Int x)) (+ x y))") == ResolvedSort::integer());
  Scope scope = constraint_scope(p);
  try {
    type_of_term(parse_term_text("(and b 1)"), scope);
    FAIL("expected E-APP-SIG");
  } catch (const CheckError& e) {
    CHECK(e.code() == "E-APP-SIG");
  }
  CHECK_THROWS_AS(type_of_term(parse_term_text("(+ x w)"), scope), CheckError);
  CHECK_THROWS_AS(type_of_term(parse_term_text("(* x y)"), scope), CheckError);
  CHECK(type_in_constraints(p, "(* 3 x)") == ResolvedSort::integer());
}

TEST_CASE("declarations must precede use") {
  const std::string ok = "(synth-fun f ((a Int)) Int ((Start Int (a 0))))(declare-var x Int)(constraint (= (f x) x))(check-synth)";
  const std::string late = "(synth-fun f ((a Int)) Int ((Start Int (a 0))))(constraint (= (f x) x))(declare-var x Int)(check-synth)";
  CHECK(diagnostic_code(ok) == "");
  CHECK(diagnostic_code(late) == "E-UNBOUND");
  CHECK(diagnostic_code("(define-fun m ((a Int)) Int (f a))(synth-fun f ((a Int)) Int ((Start Int (a))))(check-synth)") ==
        "E-UNBOUND");
}

TEST_CASE("macros may not call synthesis functions") {
  CHECK(diagnostic_code("(synth-fun f ((a Int)) Int ((Start Int (a))))(define-fun m ((a Int)) Int (f a))(check-synth)") ==
        "E-UNBOUND");
}

TEST_CASE("commands after check-synth are not checked") {
  CHECK(diagnostic_code("(check-synth)(declare-var x Int)(declare-var x Int)") == "");
}

TEST_CASE("enum constants need a named sort with that constructor") {
  CHECK(diagnostic_code("(define-sort C (Enum (A B)))(declare-var k C)(constraint (= k C::A))(check-synth)") == "");
  CHECK(diagnostic_code("(define-sort C (Enum (A B)))(declare-var k C)(constraint (= k C::D))(check-synth)") ==
        "E-ENUM-CONST");
  CHECK(diagnostic_code("(define-sort C (Enum (A A)))(check-synth)") == "E-ENUM-DUP-CTOR");
}

TEST_CASE("mutation corpus yields the designated codes") {
  auto corpus = testsupport::mutations();
  CHECK(corpus.size() >= 15);
  for (const auto& m : corpus) {
    CAPTURE(m.family);
    CHECK(diagnostic_code(read_fixture(m.fixture)) == "");
    CHECK(diagnostic_code(testsupport::replace_once(read_fixture(m.fixture), m.from, m.to)) == m.code);
  }
}

TEST_CASE("checking is deterministic") {
  for (const auto& name : {"max_min.sl", "uf_spec.sl", "let_grammar.sl", "enum_next.sl", "macros.sl"}) {
    Program prog = parse_program_text(read_fixture(name));
    CheckedProblem a = check_program(prog);
    CheckedProblem b = check_program(prog);
    CHECK(a.constraints == b.constraints);
    REQUIRE(a.tasks.size() == b.tasks.size());
    for (std::size_t i = 0; i < a.tasks.size(); ++i) {
      CHECK(a.tasks[i].name == b.tasks[i].name);
      CHECK(a.tasks[i].grammar.let_vars == b.tasks[i].grammar.let_vars);
    }
  }
}

TEST_CASE("checked constraints evaluate without sort errors") {
  std::mt19937_64 rng(7);
  for (const auto& name : {"max_min.sl", "uf_spec.sl", "let_grammar.sl", "bv_xor.sl", "enum_next.sl", "macros.sl",
                           "two_from_sum.sl"}) {
    CAPTURE(name);
    CheckedProblem p = testsupport::check_text(read_fixture(name));
    Candidate cand(p.tasks.size());
    for (std::size_t t = 0; t < p.tasks.size(); ++t) {
      ExpandedGrammar g = expand_shorthands(p.tasks[t], p, SolverConfig{});
      auto terms = enumerate(g, "Start", 5);
      REQUIRE(!terms.empty());
      cand.set(t, terms[rng() % terms.size()]);
    }
    Evaluator ev(p);
    ev.set_candidate(&cand);
    for (int trial = 0; trial < 200; ++trial) {
      Assignment a;
      for (const auto& [v, s] : p.universal_vars) a[v] = arbitrary(s, rng);
      UfModel model(p.ufs, rng());
      ev.set_uf_model(&model);
      for (const auto& c : p.constraints) {
        Value v = ev.eval(c, a);
        CHECK(std::holds_alternative<bool>(v));
      }
    }
  }
}

}  // TEST_SUITE
