#include "pigeon/proof_ours.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace pigeon {
namespace {

Literal pos(Var v) { return Literal::positive(v); }
Literal neg(Var v) { return Literal::negative(v); }

template <typename Emit>
std::vector<ProofLine> collect(Emit emit) {
  ProofCollector collector;
  emit(collector);
  return collector.take().lines;
}

}  // namespace

IterationPlan IterationPlan::first(int n, LayerStyle style) {
  if (n < 2 || n > kMaxPigeonN)
    throw std::invalid_argument("n must be in [2, " + std::to_string(kMaxPigeonN) +
                                "], got " + std::to_string(n));
  IterationPlan plan;
  plan.n = n;
  plan.k = n - 1;
  plan.prev = input_layout(n);
  plan.next = next_layer(plan.prev, style);
  plan.groups = pigeon::groups(n);
  return plan;
}

IterationPlan IterationPlan::following(LayerStyle style) const {
  if (k <= 1) throw std::out_of_range("iteration 1 is the last iteration");
  IterationPlan plan;
  plan.n = n;
  plan.k = k - 1;
  plan.prev = next;
  plan.next = next_layer(next, style);
  plan.groups = pigeon::groups(k);
  return plan;
}

void emit_definitions(const IterationPlan& plan, ProofSink& sink, bool all_pigeons) {
  const int k = plan.k;
  const auto& prev = plan.prev;
  for (int p = 0; p <= k; ++p) {
    for (int h = 1; h <= k; ++h) {
      const Var fresh = plan.next.x_var(p, h);
      const Var stay = prev.x_var(p, h);
      const Var moved_from = prev.x_var(p, k + 1);
      const Var removed_pigeon = prev.x_var(k + 1, h);
      if (p < k || all_pigeons) {
        sink.add({neg(fresh), pos(stay), pos(moved_from)});
        sink.add({neg(fresh), pos(stay), pos(removed_pigeon)});
      }
      sink.add({pos(fresh), neg(stay)});
      sink.add({pos(fresh), neg(moved_from), neg(removed_pigeon)});
    }
  }
}

void emit_aux_definitions(const IterationPlan& plan, ProofSink& sink) {
  for (int h = 1; h <= plan.k; ++h) {
    for (std::size_t g = 0; g < plan.groups.group_count(); ++g) {
      const auto& group = plan.groups.groups[g];
      if (!group.has_aux) continue;
      const auto lits = GroupLayout::literals(group, plan.next, h);
      const Var y = plan.next.y_var(static_cast<int>(g), h);
      sink.add({pos(y), lits[0], lits[1], lits[2]});
      for (auto l : lits) sink.add({neg(y), ~l});
    }
  }
}

void emit_derived_group_clauses(const IterationPlan& plan, ProofSink& sink) {
  for (int h = 1; h <= plan.k; ++h) {
    for (const auto& group : plan.groups.groups) {
      const auto lits = GroupLayout::literals(group, plan.next, h);
      // Only the first member can be a negated auxiliary, so the pivot
      // ~lits[j] is always a fresh x'.
      for (std::size_t j = 1; j < lits.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) sink.add({~lits[j], ~lits[i]});
    }
  }
}

void emit_alo_clauses(const IterationPlan& plan, ProofSink& sink) {
  std::vector<Literal> c;
  for (int p = 0; p <= plan.k; ++p) {
    c.clear();
    for (int h = 1; h <= plan.k; ++h) c.push_back(pos(plan.next.x_var(p, h)));
    sink.add(c);
  }
}

void emit_iteration(const IterationPlan& plan, ProofSink& sink) {
  emit_definitions(plan, sink);
  emit_aux_definitions(plan, sink);
  emit_derived_group_clauses(plan, sink);
  emit_alo_clauses(plan, sink);
}

void generate_ours(int n, const GenerateOptions& opts, ProofSink& sink) {
  auto plan = IterationPlan::first(n);
  std::optional<IterationPlan> finished;
  DeletingSink deleter(sink);
  for (;;) {
    emit_iteration(plan, sink);
    if (opts.emit_deletions) {
      if (finished)
        emit_iteration(*finished, deleter);
      else
        standard_clauses(n, [&sink](std::span<const Literal> c) { sink.remove(c); });
    }
    if (plan.k == 1) break;
    auto upcoming = plan.following();
    finished = std::move(plan);
    plan = std::move(upcoming);
  }
  sink.add(std::span<const Literal>{});
}

Proof generate_ours(int n, const GenerateOptions& opts) {
  ProofCollector collector;
  generate_ours(n, opts, collector);
  return collector.take();
}

std::vector<ProofLine> definition_clauses(const IterationPlan& plan) {
  return collect([&](ProofSink& s) { emit_definitions(plan, s); });
}
std::vector<ProofLine> y_definition_clauses(const IterationPlan& plan) {
  return collect([&](ProofSink& s) { emit_aux_definitions(plan, s); });
}
std::vector<ProofLine> derived_group_clauses(const IterationPlan& plan) {
  return collect([&](ProofSink& s) { emit_derived_group_clauses(plan, s); });
}
std::vector<ProofLine> alo_clauses(const IterationPlan& plan) {
  return collect([&](ProofSink& s) { emit_alo_clauses(plan, s); });
}

}  // namespace pigeon
