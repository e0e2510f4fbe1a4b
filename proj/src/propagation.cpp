#include "pigeon/propagation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pigeon {
namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Literal-order-independent key of a clause.
template <typename Range, typename ToCode>
std::uint64_t multiset_key(const Range& literals, ToCode to_code) {
  std::uint64_t sum = 0, xr = 0;
  std::size_t n = 0;
  for (const auto& l : literals) {
    auto h = mix64(to_code(l) + 0x9e3779b97f4a7c15ULL);
    sum += h;
    xr ^= h * 31;
    ++n;
  }
  return mix64(sum ^ mix64(xr + n));
}

int rank(Value v) { return v == Value::kTrue ? 2 : v == Value::kUnset ? 1 : 0; }

}  // namespace

LitCode encode(Literal l) {
  if (l.var() > kMaxDenseVar)
    throw std::out_of_range("variable " + std::to_string(l.var()) +
                            " exceeds the propagation engine's range");
  return static_cast<LitCode>(2 * l.var() + (l.is_negative() ? 1 : 0));
}

void Assignment::ensure_var(Var v) {
  auto needed = static_cast<std::size_t>(v) + 1;
  if (reason_.size() >= needed) return;
  reason_.resize(needed, kNoClause);
  values_.resize(2 * needed, Value::kUnset);
}

void Assignment::assign(LitCode lit, ClauseId reason) {
  values_[lit] = Value::kTrue;
  values_[negate(lit)] = Value::kFalse;
  reason_[var_of(lit)] = reason;
  trail_.push_back(lit);
}

void Assignment::backtrack(std::size_t size) {
  while (trail_.size() > size) {
    auto lit = trail_.back();
    trail_.pop_back();
    values_[lit] = Value::kUnset;
    values_[negate(lit)] = Value::kUnset;
    reason_[var_of(lit)] = kNoClause;
  }
  head_ = std::min(head_, size);
}

std::uint64_t Assignment::hash() const {
  std::uint64_t h = mix64(trail_.size());
  for (auto lit : trail_) h += mix64(lit);
  return h;
}

void ClauseDatabase::ensure_var(Var v) {
  auto needed = 2 * (static_cast<std::size_t>(v) + 1);
  if (watches_.size() >= needed) return;
  watches_.resize(needed);
  occurrences_.resize(needed);
}

ClauseId ClauseDatabase::add(std::span<const Literal> literals) {
  if (slots_.size() >= kNoClause) throw std::length_error("clause database is full");
  Var max_var = 0;
  for (auto l : literals) max_var = std::max(max_var, l.var());
  ensure_var(max_var);

  auto id = static_cast<ClauseId>(slots_.size());
  Slot slot;
  slot.offset = arena_.size();
  slot.size = static_cast<std::uint32_t>(literals.size());
  for (auto l : literals) {
    auto code = encode(l);
    arena_.push_back(code);
    occurrences_[code].push_back(id);
  }
  slot.key = multiset_key(literals, [](Literal l) { return encode(l); });
  slots_.push_back(slot);
  by_key_.emplace(slot.key, id);
  hash_ += mix64(slot.key);
  ++live_;
  return id;
}

void ClauseDatabase::attach(ClauseId id, const Assignment& assignment) {
  auto lits = mutable_literals(id);
  if (lits.size() < 2) return;
  for (std::size_t w = 0; w < 2; ++w) {
    std::size_t best = w;
    for (std::size_t i = w + 1; i < lits.size(); ++i)
      if (rank(assignment.value(lits[i])) > rank(assignment.value(lits[best]))) best = i;
    std::swap(lits[w], lits[best]);
  }
  watches_[lits[0]].push_back({id, lits[1]});
  watches_[lits[1]].push_back({id, lits[0]});
}

void ClauseDatabase::detach_all() {
  for (auto& ws : watches_) ws.clear();
}

ClauseId ClauseDatabase::find(std::span<const Literal> literals) const {
  auto key = multiset_key(literals, [](Literal l) { return encode(l); });
  std::vector<LitCode> wanted;
  wanted.reserve(literals.size());
  for (auto l : literals) wanted.push_back(encode(l));
  std::sort(wanted.begin(), wanted.end());

  auto [first, last] = by_key_.equal_range(key);
  std::vector<LitCode> have;
  for (auto it = first; it != last; ++it) {
    auto id = it->second;
    auto stored = this->literals(id);
    if (stored.size() != wanted.size()) continue;
    have.assign(stored.begin(), stored.end());
    std::sort(have.begin(), have.end());
    if (have == wanted) return id;
  }
  return kNoClause;
}

void ClauseDatabase::remove(ClauseId id) {
  auto& slot = slots_[id];
  if (!slot.alive) return;
  slot.alive = false;
  auto [first, last] = by_key_.equal_range(slot.key);
  for (auto it = first; it != last; ++it) {
    if (it->second == id) {
      by_key_.erase(it);
      break;
    }
  }
  hash_ -= mix64(slot.key);
  --live_;
}

std::span<const ClauseId> ClauseDatabase::occurrences(LitCode lit) {
  auto& list = occurrences_[lit];
  std::erase_if(list, [this](ClauseId id) { return !slots_[id].alive; });
  return list;
}

PropagationResult propagate(ClauseDatabase& db, Assignment& a) {
  while (a.head_ < a.trail_.size()) {
    const LitCode false_lit = negate(a.trail_[a.head_++]);
    auto& ws = db.watches_[false_lit];
    std::size_t i = 0, j = 0;
    const std::size_t end = ws.size();
    for (; i < end; ++i) {
      auto w = ws[i];
      if (!db.slots_[w.clause].alive) continue;
      if (a.values_[w.blocker] == Value::kTrue) {
        ws[j++] = w;
        continue;
      }
      auto lits = db.mutable_literals(w.clause);
      if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
      const LitCode other = lits[0];
      if (a.values_[other] == Value::kTrue) {
        ws[j++] = {w.clause, other};
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < lits.size(); ++k) {
        if (a.values_[lits[k]] != Value::kFalse) {
          std::swap(lits[1], lits[k]);
          db.watches_[lits[1]].push_back({w.clause, other});
          moved = true;
          break;
        }
      }
      if (moved) continue;

      ws[j++] = {w.clause, other};
      if (a.values_[other] == Value::kFalse) {
        for (++i; i < end; ++i) ws[j++] = ws[i];
        ws.resize(j);
        return {true, w.clause};
      }
      a.assign(other, w.clause);
    }
    ws.resize(j);
  }
  return {};
}

}  // namespace pigeon
