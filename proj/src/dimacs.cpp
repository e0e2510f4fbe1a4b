#include "pigeon/dimacs.hpp"

#include <charconv>
#include <sstream>

#include "text_scan.hpp"

namespace pigeon {

CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  CnfFormula formula;
  bool have_header = false;
  std::int64_t declared_clauses = 0;
  std::vector<Literal> current;
  std::size_t clause_start_line = 0;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    detail::TokenScanner scan(line);
    auto first = scan.peek();
    if (first.empty() || first[0] == 'c') continue;

    if (first == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      scan.next();
      std::int64_t vars = 0;
      if (scan.next() != "cnf" || !scan.next_int(vars) || !scan.next_int(declared_clauses) ||
          !scan.at_end() || vars < 0 || declared_clauses < 0)
        throw ParseError(line_no, "malformed header, expected \"p cnf <vars> <clauses>\"");
      formula.num_vars = vars;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause data before \"p cnf\" header");

    while (!scan.at_end()) {
      std::int64_t value = 0;
      if (!scan.next_int(value)) throw ParseError(line_no, "expected an integer literal");
      if (value == 0) {
        detail::require_no_duplicates_at(current, line_no);
        formula.clauses.emplace_back(std::move(current));
        current.clear();
        continue;
      }
      if (current.empty()) clause_start_line = line_no;
      Literal lit(value);
      if (lit.var() > formula.num_vars)
        throw ParseError(line_no, "literal " + std::to_string(value) +
                                      " out of declared range 1.." +
                                      std::to_string(formula.num_vars));
      current.push_back(lit);
    }
  }

  if (!have_header) throw ParseError(0, "missing \"p cnf\" header");
  if (!current.empty())
    throw ParseError(clause_start_line, "clause is missing its terminating 0");
  if (static_cast<std::int64_t>(formula.clauses.size()) != declared_clauses && warnings)
    warnings->push_back("header declares " + std::to_string(declared_clauses) +
                        " clauses but " + std::to_string(formula.clauses.size()) +
                        " were read");
  return formula;
}

CnfFormula parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, warnings);
}

void append_clause_line(std::string& out, std::span<const Literal> literals) {
  char buf[24];
  for (auto l : literals) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, l.value());
    out.append(buf, end);
    out.push_back(' ');
  }
  out += "0\n";
}

void write_dimacs(std::ostream& out, const CnfFormula& formula) {
  std::string buf = "p cnf " + std::to_string(formula.num_vars) + " " +
                    std::to_string(formula.clauses.size()) + "\n";
  for (const auto& c : formula.clauses) {
    append_clause_line(buf, c.literals());
    if (buf.size() > (1u << 16)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

std::string emit_dimacs(const CnfFormula& formula) {
  std::ostringstream os;
  write_dimacs(os, formula);
  return os.str();
}

}  // namespace pigeon
