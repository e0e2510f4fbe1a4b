#include "pigeon/clause.hpp"

#include <algorithm>
#include <sstream>

namespace pigeon {

void require_no_duplicates(std::span<const Literal> literals) {
  auto fail = [](Literal l) {
    throw std::invalid_argument("duplicate literal " + std::to_string(l.value()) +
                                " in clause");
  };
  if (literals.size() <= 8) {
    for (std::size_t i = 0; i < literals.size(); ++i)
      for (std::size_t j = i + 1; j < literals.size(); ++j)
        if (literals[i] == literals[j]) fail(literals[i]);
    return;
  }
  std::vector<Literal> sorted(literals.begin(), literals.end());
  std::sort(sorted.begin(), sorted.end());
  auto it = std::adjacent_find(sorted.begin(), sorted.end());
  if (it != sorted.end()) fail(*it);
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  require_no_duplicates(literals_);
}

Clause::Clause(std::initializer_list<std::int64_t> values) {
  literals_.reserve(values.size());
  for (auto v : values) literals_.emplace_back(v);
  require_no_duplicates(literals_);
}

bool Clause::is_tautology() const {
  for (std::size_t i = 0; i < literals_.size(); ++i)
    for (std::size_t j = i + 1; j < literals_.size(); ++j)
      if (literals_[i] == ~literals_[j]) return true;
  return false;
}

bool Clause::same_literals(const Clause& other) const {
  if (size() != other.size()) return false;
  std::vector<Literal> a = literals_, b = other.literals_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void CnfFormula::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  for (const auto& c : clauses)
    for (auto l : c)
      if (l.var() > num_vars)
        throw std::invalid_argument("literal " + std::to_string(l.value()) +
                                    " out of range (num_vars = " +
                                    std::to_string(num_vars) + ")");
}

std::size_t Proof::added_count() const {
  return static_cast<std::size_t>(std::count_if(
      lines.begin(), lines.end(), [](const ProofLine& l) { return l.kind == LineKind::kAdd; }));
}

std::size_t Proof::deleted_count() const { return lines.size() - added_count(); }

bool Proof::is_complete() const {
  for (auto it = lines.rbegin(); it != lines.rend(); ++it)
    if (it->kind == LineKind::kAdd) return it->clause.empty();
  return false;
}

std::string to_string(const Clause& clause) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < clause.size(); ++i) {
    if (i) os << ' ';
    os << clause[i].value();
  }
  os << ')';
  return os.str();
}

}  // namespace pigeon
