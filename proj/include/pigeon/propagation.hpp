// Unit propagation over an indexed clause database.
//
// Literals are stored in a dense code (2 * var + sign) so that per-literal
// tables are plain vectors. Every clause of size >= 2 is watched on its
// first two stored literals; the database may permute literals inside its
// own storage to maintain that, so callers that care about the original
// order (the RAT pivot) must keep their own copy.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "pigeon/clause.hpp"

namespace pigeon {

using LitCode = std::uint32_t;
using ClauseId = std::uint32_t;
inline constexpr ClauseId kNoClause = std::numeric_limits<ClauseId>::max();
inline constexpr Var kMaxDenseVar = (Var{1} << 31) - 1;

LitCode encode(Literal l);
inline Literal decode(LitCode code) {
  auto v = static_cast<std::int64_t>(code >> 1);
  return Literal((code & 1) ? -v : v);
}
inline constexpr LitCode negate(LitCode code) { return code ^ 1u; }
inline constexpr std::uint32_t var_of(LitCode code) { return code >> 1; }

enum class Value : std::int8_t { kFalse = -1, kUnset = 0, kTrue = 1 };

struct PropagationResult {
  bool conflict = false;
  ClauseId conflict_clause = kNoClause;
};

class Assignment;
class ClauseDatabase;

// Propagates every unprocessed trail entry to the unit-propagation fixpoint
// or to the first falsified watched clause.
PropagationResult propagate(ClauseDatabase& db, Assignment& assignment);

// Partial assignment with an ordered trail. Popping the trail back to a
// previous size restores the exact prior state.
class Assignment {
 public:
  void ensure_var(Var v);
  Var max_var() const { return static_cast<Var>(reason_.empty() ? 0 : reason_.size() - 1); }

  Value value(LitCode lit) const { return values_[lit]; }
  Value value(Literal lit) const { return values_[encode(lit)]; }

  // Precondition: the literal's variable is unassigned.
  void assign(LitCode lit, ClauseId reason);

  std::span<const LitCode> trail() const { return trail_; }
  std::size_t size() const { return trail_.size(); }
  ClauseId reason(std::uint32_t var) const { return reason_[var]; }

  // Unassigns everything past the first `size` trail entries.
  void backtrack(std::size_t size);
  void clear() { backtrack(0); }

  // Order-independent hash of the set of assigned literals.
  std::uint64_t hash() const;

  // Index of the next trail entry whose consequences are not yet propagated.
  std::size_t propagated() const { return head_; }

 private:
  friend PropagationResult propagate(ClauseDatabase&, Assignment&);
  std::vector<Value> values_;
  std::vector<ClauseId> reason_;
  std::vector<LitCode> trail_;
  std::size_t head_ = 0;
};

class ClauseDatabase {
 public:
  void ensure_var(Var v);

  // Stores the clause and indexes its occurrences. It is not watched until
  // attach() is called.
  ClauseId add(std::span<const Literal> literals);

  // Chooses watches for `id` relative to `assignment`, preferring true, then
  // unassigned, then false literals, and registers them. Unit and empty
  // clauses are not watched.
  void attach(ClauseId id, const Assignment& assignment);

  // Clears every watch list. Use before re-attaching all live clauses.
  void detach_all();

  // Finds a live clause with the same literal multiset.
  ClauseId find(std::span<const Literal> literals) const;
  // Marks the clause dead. Watches and occurrences are dropped lazily.
  void remove(ClauseId id);

  bool alive(ClauseId id) const { return slots_[id].alive; }
  std::span<const LitCode> literals(ClauseId id) const {
    return {arena_.data() + slots_[id].offset, slots_[id].size};
  }
  std::size_t capacity() const { return slots_.size(); }
  std::size_t live_count() const { return live_; }

  // Live clauses containing `lit`. Compacts the underlying list.
  std::span<const ClauseId> occurrences(LitCode lit);

  // Order-independent hash of the live clause multiset.
  std::uint64_t hash() const { return hash_; }

 private:
  friend PropagationResult propagate(ClauseDatabase&, Assignment&);

  struct Slot {
    std::size_t offset = 0;
    std::uint32_t size = 0;
    bool alive = true;
    std::uint64_t key = 0;
  };
  struct Watch {
    ClauseId clause;
    LitCode blocker;
  };

  std::span<LitCode> mutable_literals(ClauseId id) {
    return {arena_.data() + slots_[id].offset, slots_[id].size};
  }

  std::vector<LitCode> arena_;
  std::vector<Slot> slots_;
  std::vector<std::vector<Watch>> watches_;
  std::vector<std::vector<ClauseId>> occurrences_;
  std::unordered_multimap<std::uint64_t, ClauseId> by_key_;
  std::uint64_t hash_ = 0;
  std::size_t live_ = 0;
};

}  // namespace pigeon
