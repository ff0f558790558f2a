#include <doctest.h>

#include <sstream>

#include "support.h"
#include "sygus/cli.h"
#include "sygus/diagnostic.h"

using namespace sygus;
using testsupport::fixture_path;
using testsupport::read_fixture;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "sygus");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("set-options keys map onto the configuration") {
  SolverConfig cfg = apply_set_options({{"max-term-size", "6"}, {"grid-radius", "3"}, {"random-samples", "9"},
                                        {"uf-model-count", "4"}, {"seed", "77"}, {"timeout-seconds", "1.5"}},
                                       SolverConfig{});
  CHECK(cfg.max_term_size == 6);
  CHECK(cfg.grid_radius == 3);
  CHECK(cfg.random_samples == 9);
  CHECK(cfg.uf_model_count == 4);
  CHECK(cfg.seed == 77);
  CHECK(cfg.timeout_seconds == doctest::Approx(1.5));
}

TEST_CASE("unknown keys are ignored, and reported when verbose") {
  std::ostringstream log;
  SolverConfig cfg = apply_set_options({{"frobnicate", "x"}}, SolverConfig{}, &log);
  CHECK(cfg.max_term_size == SolverConfig{}.max_term_size);
  CHECK(log.str().find("frobnicate") != std::string::npos);
  CHECK_NOTHROW(apply_set_options({{"frobnicate", "x"}}, SolverConfig{}));
}

TEST_CASE("malformed option values") {
  for (auto [key, value] : std::vector<std::pair<std::string, std::string>>{
           {"max-term-size", "six"}, {"seed", "-1"}, {"grid-radius", "3x"}, {"timeout-seconds", ""}}) {
    CAPTURE(key);
    try {
      apply_set_options({{key, value}}, SolverConfig{});
      FAIL("expected E-OPT-VALUE");
    } catch (const SygusError& e) {
      CHECK(e.code() == "E-OPT-VALUE");
    }
  }
}

TEST_CASE("constant pool flag") {
  CHECK(parse_constant_pool("0,1,-1,2") == std::vector<BigInt>{0, 1, -1, 2});
  CHECK(parse_constant_pool("010") == std::vector<BigInt>{10});
  CHECK_THROWS_AS(parse_constant_pool("1,,2"), SygusError);
  CHECK_THROWS_AS(parse_constant_pool("a"), SygusError);
}

TEST_CASE("solve prints define-funs and exits 0") {
  Run r = run({"solve", fixture_path("two_from_sum.sl")});
  CHECK(r.code == exit_code::kOk);
  CHECK(r.out == "(define-fun f () Int (+ 1 1))\n");
}

TEST_CASE("solve reads standard input") {
  Run r = run({"solve", "-"}, read_fixture("two_from_sum.sl"));
  CHECK(r.code == 0);
  CHECK(r.out == "(define-fun f () Int (+ 1 1))\n");
}

TEST_CASE("a budget too small prints (fail) and exits 1") {
  Run r = run({"solve", "--max-term-size", "1", fixture_path("max_min.sl")});
  CHECK(r.code == exit_code::kFail);
  CHECK(r.out == "(fail)\n");
  CHECK(r.err.find("no solution") != std::string::npos);
}

TEST_CASE("exhaustion exits 1") {
  Run r = run({"solve", "--max-term-size", "7", fixture_path("unsat_in_grammar.sl")});
  CHECK(r.code == 1);
  CHECK(r.out == "(fail)\n");
}

TEST_CASE("timeout prints (fail) with a diagnostic") {
  Run r = run({"solve", "--max-term-size", "60", "--timeout-seconds", "0.2", fixture_path("unsat_in_grammar.sl")});
  CHECK(r.code == 1);
  CHECK(r.out == "(fail)\n");
  CHECK(r.err.find("E-TIMEOUT") != std::string::npos);
}

TEST_CASE("static errors exit 2 with a located diagnostic") {
  std::string text = read_fixture("max_min.sl");
  for (std::size_t at; (at = text.find("Start ")) != std::string::npos || (at = text.find("Start)")) != std::string::npos;) {
    text.replace(at, 5, "S");
  }
  Run r = run({"check", "-"}, text);
  CHECK(r.code == exit_code::kInvalid);
  CHECK(r.err.find("<stdin>:") == 0);
  CHECK(r.err.find("E-START-MISSING") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("lexical and syntax errors exit 2") {
  CHECK(run({"parse", "-"}, "(check-synth) #q").code == 2);
  CHECK(run({"fmt", "-"}, "(check-synth").code == 2);
  Run r = run({"parse", "-"}, "(declare-var x Int)\n(declare-var)");
  CHECK(r.err.find("<stdin>:2:") == 0);
  CHECK(r.err.find("E-PARSE") != std::string::npos);
}

TEST_CASE("unsupported theories exit 3") {
  CHECK(run({"solve", fixture_path("reals.sl")}).code == exit_code::kUnsupported);
  Run r = run({"solve", fixture_path("arrays.sl")});
  CHECK(r.code == 3);
  CHECK(r.err.find("E-THEORY-UNSUPPORTED") != std::string::npos);
  CHECK(run({"check", fixture_path("reals.sl")}).code == 0);
}

TEST_CASE("missing files exit 4") {
  Run r = run({"check", fixture_path("no_such_file.sl")});
  CHECK(r.code == exit_code::kIo);
  CHECK(r.err.find("E-IO") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", "x"}).code == 2);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"solve", "--max-term-size", "zero", fixture_path("max_min.sl")}).code == 2);
  CHECK(run({"solve", "--max-term-size", "0", fixture_path("max_min.sl")}).code == 2);
  CHECK(run({"solve", "--constant-pool", "1,x", fixture_path("max_min.sl")}).code == 2);
}

TEST_CASE("help exits 0 and lists exit codes") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("check is silent on success") {
  Run r = run({"check", fixture_path("max_min.sl")});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());
}

TEST_CASE("fmt output is a fixed point") {
  Run once = run({"fmt", fixture_path("max_min.sl")});
  REQUIRE(once.code == 0);
  Run twice = run({"fmt", "-"}, once.out);
  CHECK(twice.out == once.out);
}

TEST_CASE("parse dumps the tree") {
  Run r = run({"parse", fixture_path("uf_spec.sl")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("(Program", 0) == 0);
}

TEST_CASE("set-options in the file apply; flags override them") {
  Run file_only = run({"-v", "solve", fixture_path("options.sl")});
  CHECK(file_only.code == 0);
  CHECK(file_only.err.find("frobnicate") != std::string::npos);
  Run overridden = run({"solve", "--max-term-size", "1", fixture_path("options.sl")});
  CHECK(overridden.code == 1);
  std::string tight = testsupport::replace_once(read_fixture("options.sl"), "\"6\"", "\"1\"");
  CHECK(run({"solve", "-"}, tight).code == 1);
  CHECK(run({"solve", "--max-term-size", "3", "-"}, tight).code == 0);
}

TEST_CASE("verbose flag is accepted after the subcommand") {
  Run r = run({"solve", fixture_path("two_from_sum.sl"), "--verbose"});
  CHECK(r.code == 0);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("an explicit seed gives reproducible output") {
  Run a = run({"solve", "--seed", "5", fixture_path("max_min.sl")});
  Run b = run({"solve", "--seed", "5", fixture_path("max_min.sl")});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE
