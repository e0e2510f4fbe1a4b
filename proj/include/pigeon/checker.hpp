// Forward DRAT checking.
//
// Each added clause must be RUP with respect to the working formula, or RAT
// on its first literal. Deleted clauses are matched by literal multiset.
// Top-level consequences of unit clauses are kept on the assignment trail
// between lines; every check pushes its assumptions above them and pops
// them again before returning.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pigeon/clause.hpp"
#include "pigeon/propagation.hpp"

namespace pigeon {

struct CheckOptions {
  // Deleting a clause that is not present rejects the proof instead of
  // producing a warning.
  bool strict_deletions = false;
};

enum class VerdictStatus { kAccepted, kRejected, kIncomplete };

struct Verdict {
  VerdictStatus status = VerdictStatus::kIncomplete;
  // 1-based index of the proof line that decided the verdict (the empty
  // clause for kAccepted, the failing line for kRejected); 0 otherwise.
  std::size_t line = 0;
  std::string reason;
  std::vector<std::string> warnings;

  bool accepted() const { return status == VerdictStatus::kAccepted; }
};

std::string to_string(VerdictStatus status);
std::string describe(const Verdict& verdict);

class DratChecker {
 public:
  explicit DratChecker(const CnfFormula& formula, CheckOptions opts = {});

  // Adds a clause without checking it.
  void add_clause(std::span<const Literal> clause);
  // Removes one copy of the clause. Returns false if it is not present.
  bool remove_clause(std::span<const Literal> clause);

  bool check_rup(std::span<const Literal> clause);
  // RAT on clause[0]. Precondition: clause is non-empty.
  bool check_rat(std::span<const Literal> clause);

  // Processes the next proof line. Returns the verdict once it is decided;
  // further lines are ignored afterwards.
  std::optional<Verdict> step(const ProofLine& line);
  // The verdict after the last line: kIncomplete if nothing decided it.
  Verdict finish();

  // The working formula is refuted by unit propagation alone.
  bool inconsistent() const { return inconsistent_; }
  std::uint64_t state_hash() const;
  std::size_t lines_processed() const { return line_; }
  std::size_t live_clauses() const { return db_.live_count(); }

 private:
  void ensure_var(std::span<const Literal> clause);
  // Attaches a stored clause and updates the top-level assignment.
  void settle(ClauseId id);
  void rebuild_top_level();
  // Assigns the complement of each literal; returns true if one of them is
  // already true (so the clause is trivially implied).
  bool assume_negation(std::span<const Literal> clause);
  // Same, over stored literals, leaving out `skip`.
  bool assume_negation(std::span<const LitCode> clause, LitCode skip);

  CheckOptions opts_;
  ClauseDatabase db_;
  Assignment assignment_;
  bool inconsistent_ = false;
  std::size_t line_ = 0;
  std::optional<Verdict> verdict_;
  std::vector<std::string> warnings_;
};

Verdict verify(const CnfFormula& formula, const Proof& proof, CheckOptions opts = {});

}  // namespace pigeon
