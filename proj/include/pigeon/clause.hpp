// Core CNF and clausal-proof data model.
//
// Literals are DIMACS-style signed integers. Clauses keep the exact order
// they were built in: the first literal of an added proof clause is the
// RAT pivot.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pigeon {

using Var = std::int64_t;

class Literal {
 public:
  constexpr Literal() = default;
  constexpr explicit Literal(std::int64_t value) : value_(value) {
    if (value == 0) throw std::invalid_argument("literal value must be nonzero");
  }

  static constexpr Literal positive(Var v) { return Literal(v); }
  static constexpr Literal negative(Var v) { return Literal(-v); }

  constexpr std::int64_t value() const { return value_; }
  constexpr Var var() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool is_negative() const { return value_ < 0; }
  constexpr Literal operator~() const { return Literal(-value_); }

  friend constexpr bool operator==(Literal, Literal) = default;
  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::int64_t value_ = 1;
};

// Ordered literal list; the empty clause is the empty list.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<std::int64_t> values);
  explicit Clause(std::span<const Literal> literals)
      : Clause(std::vector<Literal>(literals.begin(), literals.end())) {}

  std::span<const Literal> literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  Literal operator[](std::size_t i) const { return literals_[i]; }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  bool is_tautology() const;
  // True if both clauses contain the same literals, ignoring order.
  bool same_literals(const Clause& other) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

// Throws std::invalid_argument if a literal appears twice.
void require_no_duplicates(std::span<const Literal> literals);

struct CnfFormula {
  Var num_vars = 0;
  std::vector<Clause> clauses;

  // Throws std::invalid_argument if a literal is outside [1, num_vars].
  void validate() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

enum class LineKind { kAdd, kDelete };

struct ProofLine {
  LineKind kind = LineKind::kAdd;
  Clause clause;

  static ProofLine add(Clause c) { return {LineKind::kAdd, std::move(c)}; }
  static ProofLine remove(Clause c) { return {LineKind::kDelete, std::move(c)}; }

  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

struct Proof {
  std::vector<ProofLine> lines;

  std::size_t added_count() const;
  std::size_t deleted_count() const;
  // The last addition is the empty clause.
  bool is_complete() const;

  friend bool operator==(const Proof&, const Proof&) = default;
};

std::string to_string(const Clause& clause);

}  // namespace pigeon
