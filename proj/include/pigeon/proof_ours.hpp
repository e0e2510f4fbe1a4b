// Cubic-length DRAT refutation of the pairwise pigeonhole formula.
//
// Iteration k (from n-1 down to 1) removes pigeon k+1 and hole k+1:
//   1. define x'_ph <-> x_ph | (x_(k+1)h & x_p(k+1))        (pivot x'_ph)
//   2. define each non-final group's auxiliary y'_gh         (pivot y'_gh)
//   3. derive the pairwise clauses inside every group        (RAT on an x')
//   4. derive the at-least-one clause of every pigeon        (RUP)
// After iteration 1 the two unit clauses of layer 1 contradict the single
// pairwise clause of its only hole, so the empty clause is RUP.

#pragma once

#include <vector>

#include "pigeon/clause.hpp"
#include "pigeon/encodings.hpp"
#include "pigeon/proof_sink.hpp"

namespace pigeon {

struct IterationPlan {
  int n = 0;
  int k = 0;
  LayerLayout prev;  // layer k+1
  LayerLayout next;  // layer k
  GroupLayout groups;  // chain for the k+1 pigeons of layer k

  static IterationPlan first(int n, LayerStyle style = LayerStyle::kRecursiveAmo);
  // The plan for iteration k-1. Precondition: k > 1.
  IterationPlan following(LayerStyle style = LayerStyle::kRecursiveAmo) const;
};

struct GenerateOptions {
  // After iteration k, delete every clause of layer k+1.
  bool emit_deletions = false;
};

// Four definition clauses per new variable; for p = k only the two with a
// positive x'. With `all_pigeons` the p = k rows keep all four.
void emit_definitions(const IterationPlan& plan, ProofSink& sink, bool all_pigeons = false);
void emit_aux_definitions(const IterationPlan& plan, ProofSink& sink);
void emit_derived_group_clauses(const IterationPlan& plan, ProofSink& sink);
void emit_alo_clauses(const IterationPlan& plan, ProofSink& sink);

// All additions of one iteration, in emission order.
void emit_iteration(const IterationPlan& plan, ProofSink& sink);

void generate_ours(int n, const GenerateOptions& opts, ProofSink& sink);
Proof generate_ours(int n, const GenerateOptions& opts = {});

std::vector<ProofLine> definition_clauses(const IterationPlan& plan);
std::vector<ProofLine> y_definition_clauses(const IterationPlan& plan);
std::vector<ProofLine> derived_group_clauses(const IterationPlan& plan);
std::vector<ProofLine> alo_clauses(const IterationPlan& plan);

}  // namespace pigeon
