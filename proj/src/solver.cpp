#include "sygus/solver.h"

#include <algorithm>
#include <deque>
#include <ostream>
#include <random>
#include <set>

#include "sygus/diagnostic.h"

namespace sygus {

namespace {

struct TimeoutSignal {};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_sort(const ResolvedSort& s, const std::string& what) {
  if (s.involves_real_or_array()) {
    throw SygusError(code::kTheoryUnsupported, {}, what + " has sort " + s.str() + "; Real and Array are not searched");
  }
}

std::vector<Value> axis_for(const ResolvedSort& s, std::size_t radius) {
  std::vector<Value> out;
  auto r = static_cast<long long>(radius);
  switch (s.kind) {
    case SortKind::Int:
      for (long long v = -r; v <= r; ++v) out.emplace_back(BigInt(v));
      break;
    case SortKind::Bool:
      out = {false, true};
      break;
    case SortKind::BitVec:
      if (s.width <= 4) {
        for (unsigned v = 0; v < (1u << s.width); ++v) out.emplace_back(BitVector{s.width, BigInt(v)});
      } else {
        for (long long v = -r; v <= r; ++v) {
          Value bv = BitVector::wrap(s.width, BigInt(v));
          if (std::find(out.begin(), out.end(), bv) == out.end()) out.push_back(bv);
        }
      }
      break;
    case SortKind::Enum:
      for (const auto& c : s.constructors) out.emplace_back(EnumValue{s.identity, c});
      break;
    default:
      throw SygusError(code::kTheoryUnsupported, {}, "no grid for sort " + s.str());
  }
  return out;
}

Value sample(const ResolvedSort& s, std::int64_t range, std::mt19937_64& rng) {
  switch (s.kind) {
    case SortKind::Int: {
      auto span = static_cast<std::uint64_t>(range) * 2 + 1;
      return BigInt(static_cast<std::int64_t>(rng() % span) - range);
    }
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
    default: throw SygusError(code::kTheoryUnsupported, {}, "cannot sample sort " + s.str());
  }
}

std::size_t grid_points(const std::vector<std::vector<Value>>& axes) {
  std::size_t n = 1;
  for (const auto& a : axes) {
    if (a.empty()) return 0;
    if (n > kMaxGridPoints * 16 / a.size()) return SIZE_MAX;
    n *= a.size();
  }
  return n;
}

}  // namespace

void validate_config(const SolverConfig& cfg) {
  auto bad = [](const std::string& what) { throw SygusError(code::kOptValue, {}, what); };
  if (cfg.max_term_size == 0) bad("max-term-size must be positive");
  if (cfg.random_samples == 0) bad("random-samples must be positive");
  if (cfg.uf_model_count == 0) bad("uf-model-count must be positive");
  if (cfg.sample_range < 0) bad("sample-range must be non-negative");
  if (cfg.constant_pool.empty()) bad("constant pool must not be empty");
  if (cfg.timeout_seconds && !(*cfg.timeout_seconds > 0)) bad("timeout-seconds must be positive");
}

void CounterexampleStore::add(Counterexample c) {
  UfModel m(ufs_, c.uf_seed);
  entries_.push_back({std::move(c), std::move(m)});
}

void require_supported(const CheckedProblem& p) {
  for (const auto& [name, s] : p.universal_vars) require_sort(s, "universal variable '" + name + "'");
  for (const auto& uf : p.ufs) {
    for (const auto& a : uf.args) require_sort(a, "uninterpreted function '" + uf.name + "'");
    require_sort(uf.ret, "uninterpreted function '" + uf.name + "'");
  }
  for (const auto& t : p.tasks) {
    for (const auto& param : t.params) require_sort(param.sort, "parameter '" + param.name + "' of '" + t.name + "'");
    require_sort(t.ret, "synthesis function '" + t.name + "'");
    for (const auto& nt : t.grammar.nonterminals) require_sort(nt.sort, "non-terminal '" + nt.name + "'");
    for (const auto& [name, s] : t.grammar.let_vars) require_sort(s, "let variable '" + name + "'");
  }
}

std::uint64_t grid_model_seed(std::uint64_t seed, std::size_t k) { return splitmix(seed ^ splitmix(k + 1)); }

std::vector<std::vector<Value>> grid_axes(const CheckedProblem& p, const SolverConfig& cfg) {
  std::size_t radius = cfg.grid_radius;
  while (true) {
    std::vector<std::vector<Value>> axes;
    for (const auto& [_, s] : p.universal_vars) axes.push_back(axis_for(s, radius));
    if (radius == 0 || grid_points(axes) <= kMaxGridPoints) return axes;
    --radius;
  }
}

bool satisfies(const Evaluator& ev, const CheckedProblem& p, const Assignment& a) {
  for (const auto& c : p.constraints) {
    if (!std::get<bool>(ev.eval(c, a))) return false;
  }
  return true;
}

VerificationResult verify(const Candidate& c, const CheckedProblem& p, const SolverConfig& cfg,
                          CounterexampleStore& store) {
  require_supported(p);
  if (!c.complete() || c.size() != p.tasks.size()) {
    throw SygusError(code::kIncompleteCandidate, {}, "candidate does not cover every synthesis function");
  }
  Evaluator ev(p);
  ev.set_candidate(&c);

  for (std::size_t i = 0; i < store.size(); ++i) {
    ev.set_uf_model(&store.model(i));
    if (!satisfies(ev, p, store.at(i).assignment)) return {store.at(i)};
  }

  auto found = [&](Assignment a, std::uint64_t seed) -> VerificationResult {
    Counterexample cex{std::move(a), seed};
    store.add(cex);
    return {std::move(cex)};
  };

  const auto axes = grid_axes(p, cfg);
  const std::size_t models = p.ufs.empty() ? 1 : cfg.uf_model_count;
  for (std::size_t k = 0; k < models; ++k) {
    const std::uint64_t seed = grid_model_seed(cfg.seed, k);
    UfModel model(p.ufs, seed);
    ev.set_uf_model(&model);
    std::vector<std::size_t> idx(axes.size(), 0);
    bool empty = std::any_of(axes.begin(), axes.end(), [](const auto& a) { return a.empty(); });
    for (std::size_t point = 0; !empty && point < kMaxGridPoints; ++point) {
      Assignment a;
      for (std::size_t v = 0; v < axes.size(); ++v) a.emplace(p.universal_vars[v].first, axes[v][idx[v]]);
      if (!satisfies(ev, p, a)) return found(std::move(a), seed);
      std::size_t j = axes.size();
      bool wrapped = true;
      while (j > 0) {
        --j;
        if (++idx[j] < axes[j].size()) {
          wrapped = false;
          break;
        }
        idx[j] = 0;
      }
      if (wrapped) break;
    }
  }

  std::mt19937_64 rng(splitmix(cfg.seed ^ 0x5a17ULL));
  for (std::size_t s = 0; s < cfg.random_samples; ++s) {
    Assignment a;
    for (const auto& [name, sort] : p.universal_vars) a.emplace(name, sample(sort, cfg.sample_range, rng));
    const std::uint64_t seed = rng();
    UfModel model(p.ufs, seed);
    ev.set_uf_model(&model);
    if (!satisfies(ev, p, a)) return found(std::move(a), seed);
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

void mentioned_tasks(const Term& t, const CheckedProblem& p, std::set<std::size_t>& out) {
  if (t.kind() == TermKind::App || t.kind() == TermKind::Ref) {
    for (std::size_t i = 0; i < p.tasks.size(); ++i) {
      if (p.tasks[i].name == t.name()) out.insert(i);
    }
  }
  if (t.kind() == TermKind::App) {
    for (const auto& a : t.args()) mentioned_tasks(a, p, out);
  } else if (t.kind() == TermKind::Let) {
    for (const auto& b : t.bindings()) mentioned_tasks(b.term, p, out);
    mentioned_tasks(t.body(), p, out);
  }
}

class Search {
 public:
  Search(const CheckedProblem& p, const SolverConfig& cfg)
      : p_(p), cfg_(cfg), store_(p.ufs), ev_(p), single_ev_(p) {
    if (cfg.timeout_seconds) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*cfg.timeout_seconds));
    }
    const std::size_t n = p.tasks.size();
    local_.resize(n);
    for (const auto& c : p.constraints) {
      std::set<std::size_t> ts;
      mentioned_tasks(c, p, ts);
      if (ts.size() == 1) local_[*ts.begin()].push_back(c);
    }
    for (const auto& task : p.tasks) {
      grammars_.push_back(expand_shorthands(task, p, cfg));
      start_.push_back(*grammars_.back().index_of("Start"));
    }
    for (const auto& g : grammars_) enums_.emplace_back(g, [this] { tick(); });
    alive_.resize(n);
  }

  SolveResult run() {
    SolveResult result;
    result.candidate = Candidate(p_.tasks.size());
    try {
      result.status = search(result) ? SolveResult::Status::Solved : SolveResult::Status::Exhausted;
    } catch (const TimeoutSignal&) {
      result.status = SolveResult::Status::Timeout;
    }
    result.stats.counterexamples = store_.size();
    return result;
  }

 private:
  struct Alive {
    bool loaded = false;
    std::vector<Term> terms;
    std::size_t checked = 0;
  };

  void tick() {
    if (deadline_ && (++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) throw TimeoutSignal{};
  }

  void check_deadline() {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) throw TimeoutSignal{};
  }

  // Components of task `i` at `size` not yet refuted by a constraint that only mentions task `i`.
  const std::vector<Term>& alive(std::size_t i, std::size_t size) {
    auto& per_size = alive_[i];
    if (per_size.size() <= size) per_size.resize(size + 1);
    Alive& a = per_size[size];
    if (!a.loaded) {
      a.terms = enums_[i].closed(start_[i], size);
      a.loaded = true;
    }
    if (local_[i].empty() || a.checked == store_.size()) return a.terms;
    Candidate single(p_.tasks.size());
    std::vector<Term> kept;
    for (const auto& t : a.terms) {
      single.set(i, t);
      single_ev_.set_candidate(&single);
      bool ok = true;
      for (std::size_t j = a.checked; j < store_.size() && ok; ++j) {
        single_ev_.set_uf_model(&store_.model(j));
        for (const auto& c : local_[i]) {
          if (!std::get<bool>(single_ev_.eval(c, store_.at(j).assignment))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) kept.push_back(t);
      tick();
    }
    a.terms = std::move(kept);
    a.checked = store_.size();
    return a.terms;
  }

  bool passes_store(const Candidate& c) {
    ev_.set_candidate(&c);
    for (std::size_t j = 0; j < store_.size(); ++j) {
      ev_.set_uf_model(&store_.model(j));
      if (!satisfies(ev_, p_, store_.at(j).assignment)) return false;
    }
    return true;
  }

  static std::vector<std::vector<std::size_t>> shapes(std::size_t n, std::size_t budget) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> v(n, 1);
    while (true) {
      if (*std::max_element(v.begin(), v.end()) == budget) out.push_back(v);
      std::size_t j = n;
      while (j > 0) {
        --j;
        if (++v[j] <= budget) break;
        v[j] = 1;
        if (j == 0) goto done;
      }
    }
  done:
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      std::size_t sa = 0, sb = 0;
      for (auto x : a) sa += x;
      for (auto x : b) sb += x;
      if (sa != sb) return sa < sb;
      return a < b;
    });
    return out;
  }

  bool search(SolveResult& result) {
    const std::size_t n = p_.tasks.size();
    if (n == 0) {
      ++result.stats.verifications;
      return verify(result.candidate, p_, cfg_, store_).valid();
    }
    for (std::size_t budget = 1; budget <= cfg_.max_term_size; ++budget) {
      if (cfg_.log) *cfg_.log << "size budget " << budget << ", " << store_.size() << " counterexamples\n";
      result.stats.largest_size = budget;
      for (const auto& shape : shapes(n, budget)) {
        check_deadline();
        std::vector<const std::vector<Term>*> lists(n);
        bool empty = false;
        for (std::size_t i = 0; i < n && !empty; ++i) {
          lists[i] = &alive(i, shape[i]);
          empty = lists[i]->empty();
        }
        if (empty) continue;
        // Snapshot: `alive` may be refreshed (and reallocated) by later shapes only.
        std::vector<std::vector<Term>> pools;
        for (auto* l : lists) pools.push_back(*l);
        std::vector<std::size_t> idx(n, 0);
        Candidate c(n);
        while (true) {
          for (std::size_t i = 0; i < n; ++i) c.set(i, pools[i][idx[i]]);
          ++result.stats.tuples_screened;
          if ((result.stats.tuples_screened & 63) == 0) check_deadline();
          if (passes_store(c)) {
            ++result.stats.verifications;
            if (verify(c, p_, cfg_, store_).valid()) {
              result.candidate = c;
              return true;
            }
          }
          std::size_t j = n;
          bool wrapped = true;
          while (j > 0) {
            --j;
            if (++idx[j] < pools[j].size()) {
              wrapped = false;
              break;
            }
            idx[j] = 0;
          }
          if (wrapped) break;
        }
      }
    }
    return false;
  }

  const CheckedProblem& p_;
  const SolverConfig& cfg_;
  CounterexampleStore store_;
  Evaluator ev_;
  Evaluator single_ev_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t ticks_ = 0;
  std::vector<std::vector<Term>> local_;
  std::vector<ExpandedGrammar> grammars_;
  std::vector<std::size_t> start_;
  std::deque<Enumerator> enums_;
  std::vector<std::vector<Alive>> alive_;
};

}  // namespace

SolveResult solve(const CheckedProblem& p, const SolverConfig& cfg) {
  validate_config(cfg);
  require_supported(p);
  return Search(p, cfg).run();
}

}  // namespace sygus
