// Text DRAT reading and writing. One clause per line, deletions prefixed
// with "d", every line terminated by 0, LF line endings.

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "pigeon/clause.hpp"
#include "pigeon/dimacs.hpp"

namespace pigeon {

// Incremental reader so large proofs can be checked without holding the
// whole text in memory. Blank lines and lines starting with 'c' are skipped.
class DratReader {
 public:
  explicit DratReader(std::istream& in) : in_(in) {}

  // Returns the next proof line, or nullopt at end of input. Throws
  // ParseError on malformed lines.
  std::optional<ProofLine> next();

  // 1-based physical line number of the last line returned.
  std::size_t physical_line() const { return line_no_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_no_ = 0;
};

Proof parse_drat(std::istream& in);
Proof parse_drat(std::string_view text);

void write_drat(std::ostream& out, const Proof& proof);
std::string emit_drat(const Proof& proof);

void append_proof_line(std::string& out, LineKind kind, std::span<const Literal> literals);

}  // namespace pigeon
