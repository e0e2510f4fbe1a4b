#include "pigeon/proof_cook.hpp"

#include <optional>

namespace pigeon {

IterationPlan first_cook_plan(int n) { return IterationPlan::first(n, LayerStyle::kPairwise); }

void emit_cook_definitions(const IterationPlan& plan, ProofSink& sink) {
  emit_definitions(plan, sink, /*all_pigeons=*/true);
}

void emit_cook_pair_clauses(const IterationPlan& plan, ProofSink& sink) {
  const int k = plan.k;
  for (int h = 1; h <= k; ++h) {
    for (int p = 0; p <= k; ++p) {
      for (int q = p + 1; q <= k; ++q) {
        const auto lp = Literal::negative(plan.next.x_var(p, h));
        const auto lq = Literal::negative(plan.next.x_var(q, h));
        sink.add({lp, lq, Literal::negative(plan.prev.x_var(p, k + 1))});
        sink.add({lp, lq});
      }
    }
  }
}

void emit_cook_iteration(const IterationPlan& plan, ProofSink& sink) {
  emit_cook_definitions(plan, sink);
  emit_cook_pair_clauses(plan, sink);
  emit_alo_clauses(plan, sink);
}

void generate_cook(int n, const GenerateOptions& opts, ProofSink& sink) {
  auto plan = first_cook_plan(n);
  std::optional<IterationPlan> finished;
  DeletingSink deleter(sink);
  for (;;) {
    emit_cook_iteration(plan, sink);
    if (opts.emit_deletions) {
      if (finished)
        emit_cook_iteration(*finished, deleter);
      else
        standard_clauses(n, [&sink](std::span<const Literal> c) { sink.remove(c); });
    }
    if (plan.k == 1) break;
    auto upcoming = plan.following(LayerStyle::kPairwise);
    finished = std::move(plan);
    plan = std::move(upcoming);
  }
  sink.add(std::span<const Literal>{});
}

Proof generate_cook(int n, const GenerateOptions& opts) {
  ProofCollector collector;
  generate_cook(n, opts, collector);
  return collector.take();
}

std::vector<ProofLine> cook_definitions(const IterationPlan& plan) {
  ProofCollector c;
  emit_cook_definitions(plan, c);
  return c.take().lines;
}

std::vector<ProofLine> cook_pair_clauses(const IterationPlan& plan) {
  ProofCollector c;
  emit_cook_pair_clauses(plan, c);
  return c.take().lines;
}

}  // namespace pigeon
