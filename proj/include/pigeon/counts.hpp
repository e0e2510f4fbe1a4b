// Exact clause counts of both proofs, per iteration and in closed form.
// All arithmetic is integral: the closed forms are evaluated scaled by the
// common denominator of their coefficients and then divided exactly.

#pragma once

#include <cstdint>
#include <vector>

namespace pigeon {

// Largest n the count functions accept without 64-bit overflow.
inline constexpr std::int64_t kMaxCountN = 20000;

struct IterationCount {
  std::int64_t k = 0;
  std::int64_t definitions = 0;
  // Group clauses for our proof, pair clauses for Cook's.
  std::int64_t group_or_pair = 0;
  std::int64_t alo = 0;

  std::int64_t total() const { return definitions + group_or_pair + alo; }
};

struct CountBreakdown {
  // Iterations in proof order, k = n-1 first.
  std::vector<IterationCount> per_iteration;
  // Sum of every iteration plus the empty clause.
  std::int64_t total = 0;
};

// Group clauses per hole at iteration k: floor(7k/2) - 4, and 1 for k = 1.
std::int64_t f_group(std::int64_t k);

std::int64_t count_ours(std::int64_t n);
CountBreakdown count_ours_breakdown(std::int64_t n);

std::int64_t count_cook(std::int64_t n);
CountBreakdown count_cook_breakdown(std::int64_t n);

}  // namespace pigeon
