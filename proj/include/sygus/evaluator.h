#ifndef SYGUS_EVALUATOR_H
#define SYGUS_EVALUATOR_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sygus/ast.h"
#include "sygus/checker.h"

namespace sygus {

struct EnumValue {
  Symbol identity;
  Symbol constructor;
  friend bool operator==(const EnumValue&, const EnumValue&) = default;
};

/** Runtime value: Int, Bool, bit-vector, Real or enumerated constant. */
using Value = std::variant<BigInt, bool, BitVector, BigRational, EnumValue>;

std::string value_str(const Value& v);
bool value_has_sort(const Value& v, const ResolvedSort& s);

/** Bindings of universal variables. */
using Assignment = std::map<Symbol, Value>;

/**
 * A finite, lazily populated model of every declared uninterpreted function.
 * Results for unseen argument tuples are derived from (seed, function,
 * arguments) alone, so a model is reproducible from its seed and is
 * functionally consistent. Instances are not thread-safe.
 */
class UfModel {
 public:
  UfModel() = default;
  /** Throws E-UF-UNSUPPORTED-SORT for Real- or Array-sorted declarations. */
  UfModel(std::vector<UfDecl> decls, std::uint64_t seed);

  const Value& apply(std::size_t uf_index, const std::vector<Value>& args);
  std::uint64_t seed() const { return seed_; }
  std::size_t table_size() const { return memo_.size(); }

 private:
  std::vector<UfDecl> decls_;
  std::uint64_t seed_ = 0;
  std::map<std::pair<std::size_t, std::string>, Value> memo_;
};

UfModel fresh_uf_model(const std::vector<UfDecl>& decls, std::uint64_t seed);

/** Bodies assigned to the synthesis tasks of a problem, by task index. */
class Candidate {
 public:
  Candidate() = default;
  explicit Candidate(std::size_t tasks) : bodies_(tasks) {}

  void set(std::size_t task, Term body) { bodies_.at(task) = std::move(body); }
  const std::optional<Term>& body(std::size_t task) const { return bodies_.at(task); }
  std::size_t size() const { return bodies_.size(); }
  bool complete() const;

 private:
  std::vector<std::optional<Term>> bodies_;
};

/**
 * Call-by-value evaluator over a checked problem. Applications dispatch on
 * the runtime sorts of their arguments: candidate bodies first, then macros,
 * then uninterpreted functions, then theory operators.
 */
class Evaluator {
 public:
  explicit Evaluator(const CheckedProblem& problem);

  void set_uf_model(UfModel* model) { ufs_ = model; }
  void set_candidate(const Candidate* c) { candidate_ = c; }

  /** Throws EvalError E-DIV-ZERO or E-EVAL-UNSUPPORTED (array operators). */
  Value eval(const Term& t, const Assignment& a) const;
  bool eval_bool(const Term& t, const Assignment& a) const;

  /** Applies task `task`'s current candidate body to argument values. */
  Value call_task(std::size_t task, const std::vector<Value>& args) const;

 private:
  struct Frame;
  Value eval_in(const Term& t, const Frame* locals, const Assignment* globals) const;
  Value apply_user(const FunctionSig& f, const std::vector<Value>& args) const;
  Value apply_theory(const Term& t, const Frame* locals, const Assignment* globals) const;
  const FunctionSig* find_user(const Symbol& name, const std::vector<Value>& args) const;
  bool has_user(const Symbol& name) const;

  const CheckedProblem* problem_;
  UfModel* ufs_ = nullptr;
  const Candidate* candidate_ = nullptr;
  std::unordered_map<Symbol, std::vector<std::size_t>> by_name_;
};

struct EvalEnv {
  const CheckedProblem* problem = nullptr;
  UfModel* ufs = nullptr;
  const Candidate* candidate = nullptr;
};

Value eval(const Term& t, const Assignment& a, const EvalEnv& env);

/**
 * Replaces every macro application in `t` (a term in constraint scope of
 * `problem`) by the macro body with arguments substituted for parameters,
 * renaming let-binders that would capture argument variables.
 */
Term expand_macros(const Term& t, const CheckedProblem& problem);

/** Capture-avoiding simultaneous substitution of free references. */
Term substitute(const Term& t, const std::map<Symbol, Term>& replacement);

/** Names referenced but not let-bound inside `t`. */
std::vector<Symbol> free_names(const Term& t);

}  // namespace sygus

#endif  // SYGUS_EVALUATOR_H
