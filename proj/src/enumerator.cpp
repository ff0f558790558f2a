#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "sygus/diagnostic.h"
#include "sygus/solver.h"

namespace sygus {

std::optional<std::size_t> ExpandedGrammar::index_of(const Symbol& name) const {
  for (std::size_t i = 0; i < nonterminals.size(); ++i) {
    if (nonterminals[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<Term> constant_pool(const ResolvedSort& s, const SolverConfig& cfg) {
  std::vector<Term> out;
  switch (s.kind) {
    case SortKind::Int:
      for (const auto& c : cfg.constant_pool) {
        Term t = Term::int_lit(c);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
      break;
    case SortKind::Bool:
      out = {Term::bool_lit(true), Term::bool_lit(false)};
      break;
    case SortKind::BitVec: {
      std::vector<BigInt> values;
      if (s.width <= 4) {
        for (unsigned v = 0; v < (1u << s.width); ++v) values.emplace_back(v);
      } else {
        BigInt ones = (BigInt(1) << s.width) - 1;
        values = {0, 1, ones};
        std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * s.width));
        for (int i = 0; i < 2; ++i) {
          BigInt v = 0;
          for (std::uint32_t done = 0; done < s.width; done += 64) {
            v <<= 64;
            v |= rng();
          }
          values.push_back(v & ones);
        }
      }
      for (const auto& v : values) {
        Term t = Term::lit(BVConst{BitVector::wrap(s.width, v)});
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
      break;
    }
    case SortKind::Enum:
      // Inline enums have no sort name, hence no literal syntax.
      if (!s.identity.empty() && s.identity[0] != '@') {
        for (const auto& c : s.constructors) out.push_back(Term::lit(EnumConst{s.identity, c}));
      }
      break;
    default:
      throw SygusError(code::kTheoryUnsupported, {}, "no constants of sort " + s.str());
  }
  return out;
}

namespace {

class ShorthandExpander {
 public:
  ShorthandExpander(const SynthTask& task, const CheckedProblem& problem, const SolverConfig& cfg)
      : task_(task), problem_(problem), cfg_(cfg) {}

  std::vector<Term> expand(const Term& t) {
    switch (t.kind()) {
      case TermKind::App: {
        std::vector<std::vector<Term>> choices;
        for (const auto& a : t.args()) choices.push_back(expand(a));
        std::vector<Term> out;
        for (auto& args : product(choices)) out.push_back(Term::app(t.name(), std::move(args), t.pos()));
        return out;
      }
      case TermKind::Let: {
        std::vector<std::vector<Term>> choices;
        for (const auto& b : t.bindings()) choices.push_back(expand(b.term));
        choices.push_back(expand(t.body()));
        std::vector<Term> out;
        for (auto& parts : product(choices)) {
          std::vector<Binding> bs;
          for (std::size_t i = 0; i < t.bindings().size(); ++i) {
            bs.push_back({t.bindings()[i].name, t.bindings()[i].sort, parts[i]});
          }
          out.push_back(Term::let(std::move(bs), parts.back(), t.pos()));
        }
        return out;
      }
      case TermKind::Lit:
      case TermKind::Ref:
        return {t};
      default: {
        ResolvedSort s = resolve_sort(t.sort(), problem_.sorts);
        std::vector<Term> out;
        if (t.kind() == TermKind::ConstantOf) out = constant_pool(s, cfg_);
        if (t.kind() == TermKind::InputVariableOf || t.kind() == TermKind::VariableOf) {
          for (const auto& p : task_.params) {
            if (p.sort == s) out.push_back(Term::ref(p.name));
          }
        }
        if (t.kind() == TermKind::LocalVariableOf || t.kind() == TermKind::VariableOf) {
          for (const auto& [name, sort] : task_.grammar.let_vars) {
            if (sort == s) out.push_back(Term::ref(name));
          }
        }
        return out;
      }
    }
  }

 private:
  // Cartesian product, first component outermost.
  static std::vector<std::vector<Term>> product(const std::vector<std::vector<Term>>& choices) {
    std::vector<std::vector<Term>> out;
    for (const auto& c : choices) {
      if (c.empty()) return out;
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<Term> row;
      for (std::size_t i = 0; i < choices.size(); ++i) row.push_back(choices[i][idx[i]]);
      out.push_back(std::move(row));
      std::size_t k = choices.size();
      while (k > 0) {
        --k;
        if (++idx[k] < choices[k].size()) break;
        idx[k] = 0;
        if (k == 0) return out;
      }
      if (choices.empty()) return out;
    }
  }

  const SynthTask& task_;
  const CheckedProblem& problem_;
  const SolverConfig& cfg_;
};

}  // namespace

ExpandedGrammar expand_shorthands(const SynthTask& task, const CheckedProblem& problem, const SolverConfig& cfg) {
  ExpandedGrammar g;
  g.let_vars = task.grammar.let_vars;
  for (const auto& nt : task.grammar.nonterminals) {
    ShorthandExpander ex(task, problem, cfg);
    ExpandedNonTerminal out{nt.name, nt.sort, {}};
    std::unordered_set<Term, TermHash> seen;
    for (const auto& p : nt.productions) {
      for (auto& alt : ex.expand(p)) {
        if (seen.insert(alt).second) out.productions.push_back(std::move(alt));
      }
    }
    if (out.productions.empty()) {
      throw SygusError(code::kEmptyExpansion, nt.productions.front().pos(),
                       "non-terminal '" + nt.name + "' of '" + task.name + "' has no productions after expansion");
    }
    g.nonterminals.push_back(std::move(out));
  }
  return g;
}

// ---------------------------------------------------------------------------

namespace {

void collect_holes(const Term& t, const std::unordered_map<Symbol, std::size_t>& nts, std::vector<std::size_t>& out) {
  switch (t.kind()) {
    case TermKind::Ref: {
      auto it = nts.find(t.name());
      if (it != nts.end()) out.push_back(it->second);
      break;
    }
    case TermKind::App:
      for (const auto& a : t.args()) collect_holes(a, nts, out);
      break;
    case TermKind::Let:
      for (const auto& b : t.bindings()) collect_holes(b.term, nts, out);
      collect_holes(t.body(), nts, out);
      break;
    default: break;
  }
}

}  // namespace

Enumerator::Enumerator(const ExpandedGrammar& g, std::function<void()> tick) : g_(&g), tick_(std::move(tick)) {
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) nt_index_.emplace(g.nonterminals[i].name, i);
  if (g.let_vars.size() > 64) throw std::length_error("at most 64 distinct let-bound names per grammar");
  for (std::size_t i = 0; i < g.let_vars.size(); ++i) let_bit_.emplace(g.let_vars[i].first, i);
  for (const auto& nt : g.nonterminals) {
    std::vector<Template> ts;
    for (const auto& p : nt.productions) {
      Template t;
      t.shape = p;
      collect_holes(p, nt_index_, t.holes);
      t.fixed = p.size() - t.holes.size();
      if (p.kind() == TermKind::Ref && !t.holes.empty()) t.unit = t.holes[0];
      ts.push_back(std::move(t));
    }
    templates_.push_back(std::move(ts));
  }
  table_.emplace_back();
  closed_.emplace_back();
}

const std::vector<Term>& Enumerator::closed(std::size_t nt, std::size_t size) {
  static const std::vector<Term> kNone;
  if (size == 0) return kNone;
  fill_to(size);
  return closed_[size].at(nt);
}

void Enumerator::fill_to(std::size_t size) {
  while (table_.size() <= size) build(table_.size());
}

Enumerator::Entry Enumerator::instantiate(const Term& shape, const std::vector<const Entry*>& fills,
                                          std::size_t& next) const {
  switch (shape.kind()) {
    case TermKind::Ref: {
      if (nt_index_.count(shape.name())) return *fills[next++];
      auto it = let_bit_.find(shape.name());
      return {shape, it == let_bit_.end() ? 0 : std::uint64_t{1} << it->second};
    }
    case TermKind::App: {
      if (shape.args().empty()) return {shape, 0};
      std::vector<Term> args;
      std::uint64_t mask = 0;
      for (const auto& a : shape.args()) {
        Entry e = instantiate(a, fills, next);
        mask |= e.free_lets;
        args.push_back(std::move(e.term));
      }
      return {Term::app(shape.name(), std::move(args), shape.pos()), mask};
    }
    case TermKind::Let: {
      std::vector<Binding> bs;
      std::uint64_t mask = 0;
      std::uint64_t bound = 0;
      for (const auto& b : shape.bindings()) {
        Entry e = instantiate(b.term, fills, next);
        mask |= e.free_lets;
        bs.push_back({b.name, b.sort, std::move(e.term)});
        auto it = let_bit_.find(b.name);
        if (it != let_bit_.end()) bound |= std::uint64_t{1} << it->second;
      }
      Entry body = instantiate(shape.body(), fills, next);
      mask |= body.free_lets & ~bound;
      return {Term::let(std::move(bs), std::move(body.term), shape.pos()), mask};
    }
    default:
      return {shape, 0};
  }
}

void Enumerator::own_entries(std::size_t nt, std::size_t p, std::size_t size, std::vector<Entry>& out) {
  const Template& t = templates_[nt][p];
  if (t.unit || t.fixed > size) return;
  const std::size_t k = t.holes.size();
  if (k == 0) {
    if (t.fixed == size) {
      std::size_t next = 0;
      out.push_back(instantiate(t.shape, {}, next));
      if (tick_) tick_();
    }
    return;
  }
  const std::size_t remaining = size - t.fixed;
  if (remaining < k) return;

  // Compositions of `remaining` into k positive parts, lexicographically.
  std::vector<std::size_t> parts(k, 1);
  parts[k - 1] = remaining - (k - 1);
  std::vector<const std::vector<Entry>*> lists(k);
  std::vector<const Entry*> fills(k);
  while (true) {
    bool empty = false;
    for (std::size_t i = 0; i < k && !empty; ++i) {
      lists[i] = &table_[parts[i]][t.holes[i]];
      empty = lists[i]->empty();
    }
    if (!empty) {
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) fills[i] = &(*lists[i])[idx[i]];
        std::size_t next = 0;
        out.push_back(instantiate(t.shape, fills, next));
        if (tick_) tick_();
        std::size_t j = k;
        while (j > 0) {
          --j;
          if (++idx[j] < lists[j]->size()) break;
          idx[j] = 0;
          if (j == 0) goto next_composition;
        }
      }
    }
  next_composition:
    // Next composition: bump the rightmost part whose tail still has slack.
    std::size_t i = k - 1;
    std::size_t tail = parts[k - 1];
    while (true) {
      if (i == 0) return;
      --i;
      if (tail > k - 1 - i) break;
      tail += parts[i];
    }
    ++parts[i];
    for (std::size_t j = i + 1; j + 1 < k; ++j) parts[j] = 1;
    parts[k - 1] = tail - 1 - (k - 2 - i);
  }
}

void Enumerator::build(std::size_t size) {
  const std::size_t n = g_->nonterminals.size();
  std::vector<std::vector<std::vector<Entry>>> own(n);
  for (std::size_t nt = 0; nt < n; ++nt) {
    own[nt].resize(templates_[nt].size());
    for (std::size_t p = 0; p < templates_[nt].size(); ++p) own_entries(nt, p, size, own[nt][p]);
  }

  std::vector<std::vector<Entry>> level(n);
  std::vector<std::vector<Term>> closed(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<bool> visited(n, false);
    std::unordered_set<Term, TermHash> seen;
    std::vector<Entry>& out = level[root];
    std::function<void(std::size_t)> emit = [&](std::size_t nt) {
      visited[nt] = true;
      for (std::size_t p = 0; p < templates_[nt].size(); ++p) {
        if (const auto& u = templates_[nt][p].unit) {
          if (!visited[*u]) emit(*u);
          continue;
        }
        for (const auto& e : own[nt][p]) {
          if (seen.insert(e.term).second) out.push_back(e);
        }
      }
    };
    emit(root);
    for (const auto& e : out) {
      if (e.free_lets == 0) closed[root].push_back(e.term);
    }
  }
  table_.push_back(std::move(level));
  closed_.push_back(std::move(closed));
}

std::vector<Term> enumerate(const ExpandedGrammar& g, const Symbol& nt, std::size_t size) {
  auto idx = g.index_of(nt);
  if (!idx) throw std::invalid_argument("no non-terminal '" + nt + "'");
  Enumerator e(g);
  std::vector<Term> out;
  for (std::size_t s = 1; s <= size; ++s) {
    const auto& terms = e.closed(*idx, s);
    out.insert(out.end(), terms.begin(), terms.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Witness {
 public:
  explicit Witness(const ExpandedGrammar& g) : g_(g) {}

  bool derives(std::size_t nt, const Term& t) {
    auto key = std::make_pair(nt, t.node());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) return false;  // unit-production cycle
    bool ok = false;
    for (const auto& p : g_.nonterminals[nt].productions) {
      if (matches(p, t)) {
        ok = true;
        break;
      }
    }
    active_.erase(key);
    memo_[key] = ok;
    return ok;
  }

 private:
  bool matches(const Term& shape, const Term& t) {
    switch (shape.kind()) {
      case TermKind::Ref:
        if (auto nt = g_.index_of(shape.name())) return derives(*nt, t);
        return t.kind() == TermKind::Ref && t.name() == shape.name();
      case TermKind::App:
        if (t.kind() != TermKind::App || t.name() != shape.name() || t.args().size() != shape.args().size()) {
          return false;
        }
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          if (!matches(shape.args()[i], t.args()[i])) return false;
        }
        return true;
      case TermKind::Let: {
        if (t.kind() != TermKind::Let || t.bindings().size() != shape.bindings().size()) return false;
        for (std::size_t i = 0; i < t.bindings().size(); ++i) {
          const auto& a = shape.bindings()[i];
          const auto& b = t.bindings()[i];
          if (a.name != b.name || !(a.sort == b.sort) || !matches(a.term, b.term)) return false;
        }
        return matches(shape.body(), t.body());
      }
      default:
        return shape == t;
    }
  }

  const ExpandedGrammar& g_;
  std::map<std::pair<std::size_t, const TermNode*>, bool> memo_;
  std::set<std::pair<std::size_t, const TermNode*>> active_;
};

}  // namespace

bool derivable(const ExpandedGrammar& g, const Symbol& nt, const Term& t) {
  auto idx = g.index_of(nt);
  if (!idx) return false;
  return Witness(g).derives(*idx, t);
}

}  // namespace sygus
