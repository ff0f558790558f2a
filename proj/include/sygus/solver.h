#ifndef SYGUS_SOLVER_H
#define SYGUS_SOLVER_H

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sygus/ast.h"
#include "sygus/checker.h"
#include "sygus/evaluator.h"

namespace sygus {

struct SolverConfig {
  std::size_t max_term_size = 12;
  /** Int grid is [-grid_radius, grid_radius] per variable. */
  std::size_t grid_radius = 5;
  std::size_t random_samples = 256;
  /** Random Int samples are drawn from [-sample_range, sample_range]. */
  std::int64_t sample_range = std::int64_t{1} << 16;
  std::size_t uf_model_count = 32;
  std::uint64_t seed = 1;
  std::vector<BigInt> constant_pool = {0, 1, -1, 2};
  std::optional<double> timeout_seconds;
  /** Progress lines go here when set. */
  std::ostream* log = nullptr;
};

/** Grid points per sweep never exceed this. */
inline constexpr std::size_t kMaxGridPoints = 10000;

/** Throws SygusError(E-OPT-VALUE) on a zero count or an empty constant pool. */
void validate_config(const SolverConfig& cfg);

// ---------------------------------------------------------------------------
// Grammar expansion and enumeration
// ---------------------------------------------------------------------------

struct ExpandedNonTerminal {
  Symbol name;
  ResolvedSort sort;
  std::vector<GTerm> productions;
};

/** A grammar with every shorthand replaced by its concrete alternatives. */
struct ExpandedGrammar {
  std::vector<ExpandedNonTerminal> nonterminals;
  std::vector<std::pair<Symbol, ResolvedSort>> let_vars;

  std::optional<std::size_t> index_of(const Symbol& name) const;
};

/** The literals `(Constant s)` stands for under `cfg`. */
std::vector<Term> constant_pool(const ResolvedSort& s, const SolverConfig& cfg);

/**
 * Expands the shorthands of `task`'s grammar. A production containing a
 * shorthand with no alternatives is dropped; E-EMPTY-EXPANSION if that leaves
 * a non-terminal with no productions.
 */
ExpandedGrammar expand_shorthands(const SynthTask& task, const CheckedProblem& problem, const SolverConfig& cfg);

/**
 * Bottom-up enumerator. Terms of one non-terminal and size are produced in
 * production order, holes filled by ascending size compositions, first hole
 * outermost; duplicates are dropped. Only closed terms (no free let-bound
 * names) are returned, but open ones are kept internally for larger lets.
 */
class Enumerator {
 public:
  /** `tick` is called once per constructed term and may throw to abort. */
  explicit Enumerator(const ExpandedGrammar& g, std::function<void()> tick = {});

  /** Closed terms of `nt` of exactly `size` nodes. */
  const std::vector<Term>& closed(std::size_t nt, std::size_t size);

 private:
  struct Entry {
    Term term;
    std::uint64_t free_lets;
  };
  struct Template {
    Term shape;
    std::vector<std::size_t> holes;  // non-terminal per hole, pre-order
    std::size_t fixed = 0;
    std::optional<std::size_t> unit;  // production is a bare non-terminal
  };

  void fill_to(std::size_t size);
  void build(std::size_t size);
  void own_entries(std::size_t nt, std::size_t p, std::size_t size, std::vector<Entry>& out);
  Entry instantiate(const Term& shape, const std::vector<const Entry*>& fills, std::size_t& next) const;

  const ExpandedGrammar* g_;
  std::function<void()> tick_;
  std::vector<std::vector<Template>> templates_;
  std::unordered_map<Symbol, std::size_t> let_bit_;
  std::unordered_map<Symbol, std::size_t> nt_index_;
  // table_[size][nt]; table_[0] is unused.
  std::vector<std::vector<std::vector<Entry>>> table_;
  std::vector<std::vector<std::vector<Term>>> closed_;
};

/** All closed terms derivable from `nt` with at most `size` nodes, in enumeration order. */
std::vector<Term> enumerate(const ExpandedGrammar& g, const Symbol& nt, std::size_t size);

/** Derivation witness: true if `t` is derivable from non-terminal `nt` of `g`. */
bool derivable(const ExpandedGrammar& g, const Symbol& nt, const Term& t);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct Counterexample {
  Assignment assignment;
  std::uint64_t uf_seed = 0;
};

struct VerificationResult {
  std::optional<Counterexample> counterexample;
  bool valid() const { return !counterexample.has_value(); }
};

/** Counterexamples seen so far, each with its reconstructed UF model. */
class CounterexampleStore {
 public:
  explicit CounterexampleStore(std::vector<UfDecl> ufs = {}) : ufs_(std::move(ufs)) {}

  void add(Counterexample c);
  std::size_t size() const { return entries_.size(); }
  const Counterexample& at(std::size_t i) const { return entries_.at(i).cex; }
  UfModel& model(std::size_t i) { return entries_.at(i).model; }

 private:
  struct Stored {
    Counterexample cex;
    UfModel model;
  };
  std::vector<UfDecl> ufs_;
  std::vector<Stored> entries_;
};

/** Throws SygusError(E-THEORY-UNSUPPORTED) if `p` needs Real or Array values. */
void require_supported(const CheckedProblem& p);

/** Deterministic seed of the k-th grid-sweep UF model. */
std::uint64_t grid_model_seed(std::uint64_t seed, std::size_t k);

/** Value lists per universal variable, after the grid cap has been applied to the radius. */
std::vector<std::vector<Value>> grid_axes(const CheckedProblem& p, const SolverConfig& cfg);

/**
 * True when every constraint of `p` holds under `a` and `ufs`. Propagates
 * EvalError.
 */
bool satisfies(const Evaluator& ev, const CheckedProblem& p, const Assignment& a);

/**
 * Checks stored counterexamples, then the grid (once per UF model), then
 * random samples. A falsifying point is appended to `store` and returned.
 */
VerificationResult verify(const Candidate& c, const CheckedProblem& p, const SolverConfig& cfg,
                          CounterexampleStore& store);

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

struct SolveStats {
  std::size_t tuples_screened = 0;
  std::size_t verifications = 0;
  std::size_t counterexamples = 0;
  std::size_t largest_size = 0;
};

struct SolveResult {
  enum class Status { Solved, Exhausted, Timeout };
  Status status = Status::Exhausted;
  Candidate candidate;
  SolveStats stats;

  bool solved() const { return status == Status::Solved; }
};

/**
 * Enumerative CEGIS. Size budgets grow round-robin; within a budget, tuples
 * are tried by total size. Throws E-THEORY-UNSUPPORTED and E-EMPTY-EXPANSION.
 */
SolveResult solve(const CheckedProblem& p, const SolverConfig& cfg);

}  // namespace sygus

#endif  // SYGUS_SOLVER_H
