#include "pigeon/drat_io.hpp"

#include <sstream>
#include <stdexcept>

#include "text_scan.hpp"

namespace pigeon {

std::optional<ProofLine> DratReader::next() {
  while (std::getline(in_, buffer_)) {
    ++line_no_;
    detail::TokenScanner scan(buffer_);
    if (scan.at_end() || scan.peek()[0] == 'c') continue;

    LineKind kind = LineKind::kAdd;
    if (scan.peek() == "d") {
      kind = LineKind::kDelete;
      scan.next();
    }
    std::vector<Literal> literals;
    bool terminated = false;
    while (!scan.at_end()) {
      std::int64_t value = 0;
      if (!scan.next_int(value)) throw ParseError(line_no_, "expected an integer literal");
      if (value == 0) {
        terminated = true;
        break;
      }
      literals.emplace_back(value);
    }
    if (!terminated) throw ParseError(line_no_, "proof line is missing its terminating 0");
    if (!scan.at_end()) throw ParseError(line_no_, "unexpected data after terminating 0");
    if (kind == LineKind::kDelete && literals.empty())
      throw ParseError(line_no_, "deletion of the empty clause");
    detail::require_no_duplicates_at(literals, line_no_);
    return ProofLine{kind, Clause(std::move(literals))};
  }
  return std::nullopt;
}

Proof parse_drat(std::istream& in) {
  Proof proof;
  DratReader reader(in);
  while (auto line = reader.next()) proof.lines.push_back(std::move(*line));
  return proof;
}

Proof parse_drat(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_drat(in);
}

void append_proof_line(std::string& out, LineKind kind, std::span<const Literal> literals) {
  if (kind == LineKind::kDelete) {
    if (literals.empty()) throw std::logic_error("deletion of the empty clause");
    out += "d ";
  }
  append_clause_line(out, literals);
}

void write_drat(std::ostream& out, const Proof& proof) {
  std::string buf;
  for (const auto& line : proof.lines) {
    append_proof_line(buf, line.kind, line.clause.literals());
    if (buf.size() > (1u << 16)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

std::string emit_drat(const Proof& proof) {
  std::ostringstream os;
  write_drat(os, proof);
  return os.str();
}

}  // namespace pigeon
