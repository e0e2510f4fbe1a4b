#include "pigeon/proof_sink.hpp"

#include <stdexcept>

#include "pigeon/drat_io.hpp"

namespace pigeon {

void ProofCollector::add(std::span<const Literal> clause) {
  proof_.lines.push_back(ProofLine::add(Clause(clause)));
}

void ProofCollector::remove(std::span<const Literal> clause) {
  if (clause.empty()) throw std::logic_error("deletion of the empty clause");
  proof_.lines.push_back(ProofLine::remove(Clause(clause)));
}

void DratWriter::add(std::span<const Literal> clause) {
  append_proof_line(buffer_, LineKind::kAdd, clause);
  maybe_flush();
}

void DratWriter::remove(std::span<const Literal> clause) {
  append_proof_line(buffer_, LineKind::kDelete, clause);
  maybe_flush();
}

void DratWriter::maybe_flush() {
  if (buffer_.size() >= (1u << 16)) flush();
}

void DratWriter::flush() {
  out_ << buffer_;
  buffer_.clear();
  out_.flush();
}

}  // namespace pigeon
