// Quartic-length baseline: the same reduction with full four-clause
// definitions for every new variable and a pairwise at-most-one encoding on
// every layer. Each pairwise clause (-x'_ph -x'_qh) is preceded by the
// helper (-x'_ph -x'_qh -x_p(k+1)); both are RUP.

#pragma once

#include <vector>

#include "pigeon/proof_ours.hpp"

namespace pigeon {

IterationPlan first_cook_plan(int n);

void emit_cook_definitions(const IterationPlan& plan, ProofSink& sink);
void emit_cook_pair_clauses(const IterationPlan& plan, ProofSink& sink);
void emit_cook_iteration(const IterationPlan& plan, ProofSink& sink);

void generate_cook(int n, const GenerateOptions& opts, ProofSink& sink);
Proof generate_cook(int n, const GenerateOptions& opts = {});

std::vector<ProofLine> cook_definitions(const IterationPlan& plan);
std::vector<ProofLine> cook_pair_clauses(const IterationPlan& plan);

}  // namespace pigeon
