#include "sygus/diagnostic.h"

namespace sygus {

std::string Diagnostic::render(std::string_view file) const {
  std::string out(file);
  if (pos.line != 0) {
    out += ':' + std::to_string(pos.line) + ':' + std::to_string(pos.column);
  }
  out += ": " + code + ": " + message;
  return out;
}

SygusError::SygusError(Diagnostic d) : std::runtime_error(d.code + ": " + d.message), diag_(std::move(d)) {}

SygusError::SygusError(std::string_view code, Position pos, std::string message)
    : SygusError(Diagnostic{std::string(code), pos, std::move(message)}) {}

LexError::LexError(Position pos, std::string message) : SygusError(code::kLex, pos, std::move(message)) {}

ParseError::ParseError(Position pos, std::string expected, std::string found)
    : ParseError(code::kParse, pos, "expected " + expected + ", found " + found, expected, found) {}

ParseError::ParseError(std::string_view code, Position pos, std::string message, std::string expected,
                       std::string found)
    : SygusError(code, pos, std::move(message)), expected_(std::move(expected)), found_(std::move(found)) {}

ParseError ParseError::reserved(Position pos, std::string_view word) {
  return ParseError(code::kReserved, pos,
                    "reserved word '" + std::string(word) + "' cannot be used as an identifier",
                    "identifier", std::string(word));
}

}  // namespace sygus
