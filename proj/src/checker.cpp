#include "pigeon/checker.hpp"

#include <algorithm>

namespace pigeon {

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kAccepted:
      return "ACCEPTED";
    case VerdictStatus::kRejected:
      return "REJECTED";
    case VerdictStatus::kIncomplete:
      return "INCOMPLETE";
  }
  return "UNKNOWN";
}

std::string describe(const Verdict& verdict) {
  std::string s = to_string(verdict.status);
  if (verdict.status == VerdictStatus::kRejected)
    s += " at line " + std::to_string(verdict.line);
  if (!verdict.reason.empty()) s += ": " + verdict.reason;
  return s;
}

DratChecker::DratChecker(const CnfFormula& formula, CheckOptions opts) : opts_(opts) {
  db_.ensure_var(formula.num_vars);
  assignment_.ensure_var(formula.num_vars);
  for (const auto& c : formula.clauses) add_clause(c.literals());
}

void DratChecker::ensure_var(std::span<const Literal> clause) {
  Var max_var = 0;
  for (auto l : clause) max_var = std::max(max_var, l.var());
  db_.ensure_var(max_var);
  assignment_.ensure_var(max_var);
}

void DratChecker::add_clause(std::span<const Literal> clause) {
  ensure_var(clause);
  settle(db_.add(clause));
}

void DratChecker::settle(ClauseId id) {
  db_.attach(id, assignment_);
  if (inconsistent_) return;
  auto lits = db_.literals(id);
  if (lits.empty()) {
    inconsistent_ = true;
    return;
  }
  const Value first = assignment_.value(lits[0]);
  if (first == Value::kFalse) {
    inconsistent_ = true;
    return;
  }
  const bool unit = lits.size() == 1 || assignment_.value(lits[1]) == Value::kFalse;
  if (first == Value::kUnset && unit) {
    assignment_.assign(lits[0], id);
    if (propagate(db_, assignment_).conflict) inconsistent_ = true;
  }
}

bool DratChecker::remove_clause(std::span<const Literal> clause) {
  ensure_var(clause);
  const ClauseId id = db_.find(clause);
  if (id == kNoClause) return false;

  bool is_reason = false;
  for (auto lit : db_.literals(id)) {
    if (assignment_.value(lit) != Value::kUnset && assignment_.reason(var_of(lit)) == id)
      is_reason = true;
  }
  db_.remove(id);
  if (is_reason || inconsistent_) rebuild_top_level();
  return true;
}

void DratChecker::rebuild_top_level() {
  assignment_.clear();
  inconsistent_ = false;
  db_.detach_all();
  for (ClauseId id = 0; id < db_.capacity(); ++id)
    if (db_.alive(id)) settle(id);
}

bool DratChecker::assume_negation(std::span<const Literal> clause) {
  for (auto l : clause) {
    const auto code = encode(l);
    const Value v = assignment_.value(code);
    if (v == Value::kTrue) return true;
    if (v == Value::kUnset) assignment_.assign(negate(code), kNoClause);
  }
  return false;
}

bool DratChecker::assume_negation(std::span<const LitCode> clause, LitCode skip) {
  for (auto code : clause) {
    if (code == skip) continue;
    const Value v = assignment_.value(code);
    if (v == Value::kTrue) return true;
    if (v == Value::kUnset) assignment_.assign(negate(code), kNoClause);
  }
  return false;
}

bool DratChecker::check_rup(std::span<const Literal> clause) {
  if (inconsistent_) return true;
  ensure_var(clause);
  const auto mark = assignment_.size();
  const bool implied =
      assume_negation(clause) || propagate(db_, assignment_).conflict;
  assignment_.backtrack(mark);
  return implied;
}

bool DratChecker::check_rat(std::span<const Literal> clause) {
  if (clause.empty()) return false;
  if (inconsistent_) return true;
  ensure_var(clause);
  const auto mark = assignment_.size();
  if (assume_negation(clause.subspan(1)) || propagate(db_, assignment_).conflict) {
    assignment_.backtrack(mark);
    return true;
  }
  const LitCode pivot_complement = negate(encode(clause[0]));
  const auto base = assignment_.size();
  bool all_implied = true;
  for (ClauseId other : db_.occurrences(pivot_complement)) {
    const bool implied = assume_negation(db_.literals(other), pivot_complement) ||
                         propagate(db_, assignment_).conflict;
    assignment_.backtrack(base);
    if (!implied) {
      all_implied = false;
      break;
    }
  }
  assignment_.backtrack(mark);
  return all_implied;
}

std::optional<Verdict> DratChecker::step(const ProofLine& line) {
  if (verdict_) return verdict_;
  ++line_;
  const auto lits = line.clause.literals();

  if (line.kind == LineKind::kDelete) {
    if (!remove_clause(lits)) {
      std::string msg = "line " + std::to_string(line_) + ": deleted clause " +
                        to_string(line.clause) + " is not in the working formula";
      if (opts_.strict_deletions) {
        verdict_ = Verdict{VerdictStatus::kRejected, line_, msg, warnings_};
        return verdict_;
      }
      warnings_.push_back(std::move(msg));
    }
    return std::nullopt;
  }

  const bool ok = check_rup(lits) || check_rat(lits);
  if (!ok) {
    std::string reason =
        lits.empty() ? "the empty clause is not implied by unit propagation"
                     : "clause " + to_string(line.clause) + " fails RUP and RAT on pivot " +
                           std::to_string(lits[0].value());
    verdict_ = Verdict{VerdictStatus::kRejected, line_, std::move(reason), warnings_};
    return verdict_;
  }
  if (lits.empty()) {
    verdict_ = Verdict{VerdictStatus::kAccepted, line_, "", warnings_};
    return verdict_;
  }
  add_clause(lits);
  return std::nullopt;
}

Verdict DratChecker::finish() {
  if (verdict_) return *verdict_;
  return Verdict{VerdictStatus::kIncomplete, 0, "no empty clause was derived", warnings_};
}

std::uint64_t DratChecker::state_hash() const {
  std::uint64_t h = db_.hash() * 0x9e3779b97f4a7c15ULL;
  h ^= assignment_.hash() + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::uint64_t>(inconsistent_);
}

Verdict verify(const CnfFormula& formula, const Proof& proof, CheckOptions opts) {
  DratChecker checker(formula, opts);
  for (const auto& line : proof.lines)
    if (auto v = checker.step(line)) return *v;
  return checker.finish();
}

}  // namespace pigeon
