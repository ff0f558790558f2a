#ifndef SYGUS_DIAGNOSTIC_H
#define SYGUS_DIAGNOSTIC_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "sygus/ast.h"

namespace sygus {

// Diagnostic codes. Every error raised by the library carries one of these.
namespace code {
inline constexpr std::string_view kLex = "E-LEX";
inline constexpr std::string_view kParse = "E-PARSE";
inline constexpr std::string_view kReserved = "E-RESERVED";
inline constexpr std::string_view kLogicUnknown = "E-LOGIC-UNKNOWN";
inline constexpr std::string_view kSortUndef = "E-SORT-UNDEF";
inline constexpr std::string_view kSortRedef = "E-SORT-REDEF";
inline constexpr std::string_view kEnumDupCtor = "E-ENUM-DUP-CTOR";
inline constexpr std::string_view kEnumConst = "E-ENUM-CONST";
inline constexpr std::string_view kClashVar = "E-CLASH-VAR";
inline constexpr std::string_view kClashFun = "E-CLASH-FUN";
inline constexpr std::string_view kParamDup = "E-PARAM-DUP";
inline constexpr std::string_view kShadowArg = "E-SHADOW-ARG";
inline constexpr std::string_view kShadowSort = "E-SHADOW-SORT";
inline constexpr std::string_view kUnbound = "E-UNBOUND";
inline constexpr std::string_view kAppSig = "E-APP-SIG";
inline constexpr std::string_view kNonlinear = "E-NONLINEAR";
inline constexpr std::string_view kLetSort = "E-LET-SORT";
inline constexpr std::string_view kMacroSort = "E-MACRO-SORT";
inline constexpr std::string_view kUfInMacro = "E-UF-IN-MACRO";
inline constexpr std::string_view kUfInGrammar = "E-UF-IN-GRAMMAR";
inline constexpr std::string_view kNtDup = "E-NT-DUP";
inline constexpr std::string_view kNtClash = "E-NT-CLASH";
inline constexpr std::string_view kLetSortConflict = "E-LET-SORT-CONFLICT";
inline constexpr std::string_view kProdSort = "E-PROD-SORT";
inline constexpr std::string_view kStartMissing = "E-START-MISSING";
inline constexpr std::string_view kStartSort = "E-START-SORT";
inline constexpr std::string_view kConstraintSort = "E-CONSTRAINT-SORT";
inline constexpr std::string_view kNoCheck = "E-NO-CHECK";
inline constexpr std::string_view kOptValue = "E-OPT-VALUE";
inline constexpr std::string_view kEmptyExpansion = "E-EMPTY-EXPANSION";
inline constexpr std::string_view kTheoryUnsupported = "E-THEORY-UNSUPPORTED";
inline constexpr std::string_view kDivZero = "E-DIV-ZERO";
inline constexpr std::string_view kEvalUnsupported = "E-EVAL-UNSUPPORTED";
inline constexpr std::string_view kUfUnsupportedSort = "E-UF-UNSUPPORTED-SORT";
inline constexpr std::string_view kIncompleteCandidate = "E-INCOMPLETE-CANDIDATE";
inline constexpr std::string_view kTimeout = "E-TIMEOUT";
inline constexpr std::string_view kIo = "E-IO";
}  // namespace code

struct Diagnostic {
  std::string code;
  Position pos;
  std::string message;

  /** `file:line:col: CODE: message`; the location is omitted for line 0. */
  std::string render(std::string_view file) const;
};

/** Base of every error thrown by the library. */
class SygusError : public std::runtime_error {
 public:
  explicit SygusError(Diagnostic d);
  SygusError(std::string_view code, Position pos, std::string message);

  const Diagnostic& diagnostic() const { return diag_; }
  const std::string& code() const { return diag_.code; }
  Position pos() const { return diag_.pos; }

 private:
  Diagnostic diag_;
};

class LexError : public SygusError {
 public:
  LexError(Position pos, std::string message);
};

class ParseError : public SygusError {
 public:
  ParseError(Position pos, std::string expected, std::string found);
  /** Dedicated form for reserved words in identifier positions. */
  static ParseError reserved(Position pos, std::string_view word);

  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  ParseError(std::string_view code, Position pos, std::string message, std::string expected,
             std::string found);
  std::string expected_;
  std::string found_;
};

class CheckError : public SygusError {
 public:
  using SygusError::SygusError;
};

class EvalError : public SygusError {
 public:
  using SygusError::SygusError;
};

}  // namespace sygus

#endif  // SYGUS_DIAGNOSTIC_H
