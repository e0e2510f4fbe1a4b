// DIMACS CNF reading and writing.

#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pigeon/clause.hpp"

namespace pigeon {

// Raised for malformed DIMACS or DRAT input. `line()` is 1-based, or 0 when
// the error is not tied to a line (for instance, unexpected end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Non-fatal issues (such as a header clause count that does not match the
// body) are appended to `warnings` when it is non-null.
CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
CnfFormula parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

void write_dimacs(std::ostream& out, const CnfFormula& formula);
std::string emit_dimacs(const CnfFormula& formula);

// Appends "l1 l2 ... 0\n" to `out`.
void append_clause_line(std::string& out, std::span<const Literal> literals);

}  // namespace pigeon
