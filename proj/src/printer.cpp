#include "sygus/printer.h"

#include <stdexcept>

#include "sygus/checker.h"
#include "sygus/diagnostic.h"
#include "sygus/evaluator.h"

namespace sygus {

namespace {

std::string print_real(const BigRational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  // Scale to the smallest power of ten the denominator divides.
  BigInt scale = 1;
  unsigned digits = 0;
  while (scale % den != 0) {
    scale *= 10;
    if (++digits > 4096) throw std::domain_error("real literal has no finite decimal expansion");
  }
  BigInt scaled = num * (scale / den);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative ? "-" : "";
  out += whole.str();
  out += '.';
  if (digits == 0) {
    out += '0';
  } else {
    std::string f = frac.str();
    out += std::string(digits - f.size(), '0') + f;
  }
  return out;
}

void print_term_to(const Term& t, std::string& out);

void print_sorted_vars(const std::vector<SortedVar>& vs, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += '(' + vs[i].name + ' ' + print_sort(vs[i].sort) + ')';
  }
  out += ')';
}

void print_term_to(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Lit:
      out += print_literal(t.literal());
      return;
    case TermKind::Ref:
      out += t.name();
      return;
    case TermKind::App:
      out += '(';
      out += t.name();
      for (const auto& a : t.args()) {
        out += ' ';
        print_term_to(a, out);
      }
      out += ')';
      return;
    case TermKind::Let:
      out += "(let (";
      for (std::size_t i = 0; i < t.bindings().size(); ++i) {
        const auto& b = t.bindings()[i];
        if (i) out += ' ';
        out += '(' + b.name + ' ' + print_sort(b.sort) + ' ';
        print_term_to(b.term, out);
        out += ')';
      }
      out += ") ";
      print_term_to(t.body(), out);
      out += ')';
      return;
    default:
      out += '(';
      out += shorthand_keyword(t.kind());
      out += ' ';
      out += print_sort(t.sort());
      out += ')';
      return;
  }
}

// --- AST dump --------------------------------------------------------------

std::string dump_sort(const SortExpr& s) {
  switch (s.kind) {
    case SortKind::Named: return "(SortRef " + s.name + ")";
    default: return "(Sort " + print_sort(s) + ")";
  }
}

void dump_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Lit: {
      static const char* kTags[] = {"Int", "Real", "Bool", "BV", "Enum"};
      out += "(Lit ";
      out += kTags[t.literal().index()];
      out += ' ' + print_literal(t.literal()) + ')';
      return;
    }
    case TermKind::Ref:
      out += "(Ref " + t.name() + ')';
      return;
    case TermKind::App:
      out += "(App " + t.name();
      for (const auto& a : t.args()) {
        out += ' ';
        dump_term(a, out);
      }
      out += ')';
      return;
    case TermKind::Let:
      out += "(Let (";
      for (std::size_t i = 0; i < t.bindings().size(); ++i) {
        const auto& b = t.bindings()[i];
        if (i) out += ' ';
        out += "(Bind " + b.name + ' ' + dump_sort(b.sort) + ' ';
        dump_term(b.term, out);
        out += ')';
      }
      out += ") ";
      dump_term(t.body(), out);
      out += ')';
      return;
    default:
      out += '(';
      out += shorthand_keyword(t.kind());
      out += ' ' + dump_sort(t.sort()) + ')';
      return;
  }
}

std::string dump_params(const std::vector<SortedVar>& vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += "(Param " + vs[i].name + ' ' + dump_sort(vs[i].sort) + ')';
  }
  return out + ')';
}

std::string dump_command(const Command& c) {
  return std::visit(
      [](const auto& cmd) -> std::string {
        using C = std::decay_t<decltype(cmd)>;
        std::string out;
        if constexpr (std::is_same_v<C, SetLogic>) {
          out = "(SetLogic " + cmd.logic + ')';
        } else if constexpr (std::is_same_v<C, DefineSort>) {
          out = "(DefineSort " + cmd.name + ' ' + dump_sort(cmd.body) + ')';
        } else if constexpr (std::is_same_v<C, DeclareVar>) {
          out = "(DeclareVar " + cmd.name + ' ' + dump_sort(cmd.sort) + ')';
        } else if constexpr (std::is_same_v<C, DeclareFun>) {
          out = "(DeclareFun " + cmd.name + " (";
          for (std::size_t i = 0; i < cmd.arg_sorts.size(); ++i) {
            if (i) out += ' ';
            out += dump_sort(cmd.arg_sorts[i]);
          }
          out += ") " + dump_sort(cmd.ret) + ')';
        } else if constexpr (std::is_same_v<C, DefineFun>) {
          out = "(DefineFun " + cmd.name + ' ' + dump_params(cmd.params) + ' ' + dump_sort(cmd.ret) + ' ';
          dump_term(cmd.body, out);
          out += ')';
        } else if constexpr (std::is_same_v<C, SynthFun>) {
          out = "(SynthFun " + cmd.name + ' ' + dump_params(cmd.params) + ' ' + dump_sort(cmd.ret) + " (";
          for (std::size_t i = 0; i < cmd.grammar.size(); ++i) {
            const auto& nt = cmd.grammar[i];
            if (i) out += ' ';
            out += "(NonTerminal " + nt.name + ' ' + dump_sort(nt.sort);
            for (const auto& p : nt.productions) {
              out += ' ';
              dump_term(p, out);
            }
            out += ')';
          }
          out += "))";
        } else if constexpr (std::is_same_v<C, Constraint>) {
          out = "(Constraint ";
          dump_term(cmd.body, out);
          out += ')';
        } else if constexpr (std::is_same_v<C, CheckSynth>) {
          out = "(CheckSynth)";
        } else {
          out = "(SetOptions";
          for (const auto& [k, v] : cmd.options) out += " (Option " + k + " \"" + v + "\")";
          out += ')';
        }
        return out;
      },
      c);
}

}  // namespace

std::string print_literal(const Literal& lit) {
  return std::visit(
      [](const auto& l) -> std::string {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, IntConst>) {
          return l.value.str();
        } else if constexpr (std::is_same_v<L, RealConst>) {
          return print_real(l.value);
        } else if constexpr (std::is_same_v<L, BoolConst>) {
          return l.value ? "true" : "false";
        } else if constexpr (std::is_same_v<L, BVConst>) {
          return "#b" + l.bv.bits();
        } else {
          return l.sort + "::" + l.constructor;
        }
      },
      lit);
}

std::string print_sort(const SortExpr& s) {
  switch (s.kind) {
    case SortKind::Int: return "Int";
    case SortKind::Bool: return "Bool";
    case SortKind::Real: return "Real";
    case SortKind::BitVec: return "(BitVec " + std::to_string(s.width) + ")";
    case SortKind::Enum: {
      std::string out = "(Enum (";
      for (std::size_t i = 0; i < s.constructors.size(); ++i) {
        if (i) out += ' ';
        out += s.constructors[i];
      }
      return out + "))";
    }
    case SortKind::Array:
      return "(Array " + print_sort(s.children.at(0)) + ' ' + print_sort(s.children.at(1)) + ')';
    case SortKind::Named: return s.name;
  }
  return {};
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_command(const Command& c) {
  return std::visit(
      [](const auto& cmd) -> std::string {
        using C = std::decay_t<decltype(cmd)>;
        std::string out;
        if constexpr (std::is_same_v<C, SetLogic>) {
          out = "(set-logic " + cmd.logic + ')';
        } else if constexpr (std::is_same_v<C, DefineSort>) {
          out = "(define-sort " + cmd.name + ' ' + print_sort(cmd.body) + ')';
        } else if constexpr (std::is_same_v<C, DeclareVar>) {
          out = "(declare-var " + cmd.name + ' ' + print_sort(cmd.sort) + ')';
        } else if constexpr (std::is_same_v<C, DeclareFun>) {
          out = "(declare-fun " + cmd.name + " (";
          for (std::size_t i = 0; i < cmd.arg_sorts.size(); ++i) {
            if (i) out += ' ';
            out += print_sort(cmd.arg_sorts[i]);
          }
          out += ") " + print_sort(cmd.ret) + ')';
        } else if constexpr (std::is_same_v<C, DefineFun>) {
          out = "(define-fun " + cmd.name + ' ';
          print_sorted_vars(cmd.params, out);
          out += ' ' + print_sort(cmd.ret) + ' ';
          print_term_to(cmd.body, out);
          out += ')';
        } else if constexpr (std::is_same_v<C, SynthFun>) {
          out = "(synth-fun " + cmd.name + ' ';
          print_sorted_vars(cmd.params, out);
          out += ' ' + print_sort(cmd.ret) + " (";
          for (std::size_t i = 0; i < cmd.grammar.size(); ++i) {
            const auto& nt = cmd.grammar[i];
            if (i) out += ' ';
            out += '(' + nt.name + ' ' + print_sort(nt.sort) + " (";
            for (std::size_t j = 0; j < nt.productions.size(); ++j) {
              if (j) out += ' ';
              print_term_to(nt.productions[j], out);
            }
            out += "))";
          }
          out += "))";
        } else if constexpr (std::is_same_v<C, Constraint>) {
          out = "(constraint ";
          print_term_to(cmd.body, out);
          out += ')';
        } else if constexpr (std::is_same_v<C, CheckSynth>) {
          out = "(check-synth)";
        } else {
          out = "(set-options (";
          for (std::size_t i = 0; i < cmd.options.size(); ++i) {
            if (i) out += ' ';
            out += '(' + cmd.options[i].first + " \"" + cmd.options[i].second + "\")";
          }
          out += "))";
        }
        return out;
      },
      c);
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& c : p.commands) out += print_command(c) + '\n';
  return out;
}

std::string print_solution(const Candidate& c, const CheckedProblem& problem) {
  std::string out;
  for (std::size_t i = 0; i < problem.tasks.size(); ++i) {
    const SynthTask& task = problem.tasks[i];
    if (i >= c.size() || !c.body(i)) {
      throw SygusError(code::kIncompleteCandidate, {}, "no body for synthesis function '" + task.name + "'");
    }
    out += "(define-fun " + task.name + " (";
    for (std::size_t j = 0; j < task.params.size(); ++j) {
      if (j) out += ' ';
      out += '(' + task.params[j].name + ' ' + print_sort(task.params[j].surface) + ')';
    }
    out += ") " + print_sort(task.surface_ret) + ' ';
    print_term_to(*c.body(i), out);
    out += ")\n";
  }
  return out;
}

std::string print_fail() { return "(fail)\n"; }

std::string dump_program(const Program& p) {
  std::string out = "(Program\n";
  for (const auto& c : p.commands) out += "  " + dump_command(c) + '\n';
  return out + ")\n";
}

}  // namespace sygus
