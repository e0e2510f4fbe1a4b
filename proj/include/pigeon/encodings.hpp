// Pigeonhole CNF encodings and the variable layouts shared by the proof
// generators.
//
// Layer k of the reduction has k+1 pigeons (0..k) and k holes (1..k). The
// input layer is layer n. Ids are allocated layer by layer, from layer n
// downwards: first the (k+1)*k pigeon/hole variables, then one auxiliary
// variable per non-final group per hole.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pigeon/clause.hpp"

namespace pigeon {

// Upper bound on n accepted by the generators.
inline constexpr int kMaxPigeonN = 5000;

using ClauseCallback = std::function<void(std::span<const Literal>)>;

// Number of groups the at-most-one chain uses for `pigeons` literals.
int group_count(int pigeons);

struct LayerLayout {
  int n = 0;
  int layer = 0;
  Var x_base = 0;
  Var y_base = 0;
  // Non-final groups per hole, i.e. auxiliary variables per hole.
  int aux_groups = 0;

  int pigeons() const { return layer + 1; }
  int holes() const { return layer; }

  // Pigeon p in hole h, 0 <= p <= layer, 1 <= h <= layer.
  Var x_var(int p, int h) const;
  // Auxiliary variable of group g for hole h, 0 <= g < aux_groups.
  Var y_var(int g, int h) const;

  Var first_id() const { return x_base + 1; }
  Var last_id() const { return y_base + static_cast<Var>(aux_groups) * layer; }
};

enum class LayerStyle { kRecursiveAmo, kPairwise };

// The input layer of php_standard(n): x ids p*n + h, no auxiliaries.
LayerLayout input_layout(int n);
// The input layer of php_amo(n): same x ids, auxiliaries right after.
LayerLayout amo_input_layout(int n);
// Layer prev.layer - 1, allocated directly after `prev`.
LayerLayout next_layer(const LayerLayout& prev, LayerStyle style = LayerStyle::kRecursiveAmo);
// Layer k of the reduction of PHP(n), 1 <= k <= n. Layer n is the standard input layer.
LayerLayout layer_layout(int n, int k, LayerStyle style = LayerStyle::kRecursiveAmo);

// One literal slot of a group: either a pigeon variable of the hole, or the
// negated auxiliary variable of the previous group.
struct GroupMember {
  enum class Kind { kPigeon, kNegatedAux };
  Kind kind = Kind::kPigeon;
  int index = 0;

  friend bool operator==(const GroupMember&, const GroupMember&) = default;
};

struct Group {
  std::vector<GroupMember> members;
  // Non-final groups own the auxiliary variable with the group's index.
  bool has_aux = false;
};

// Hole-independent partition of one hole's pigeon literals into the chain
// of groups. Instantiate per hole with literals().
struct GroupLayout {
  std::vector<Group> groups;

  std::size_t group_count() const { return groups.size(); }
  const Group& final_group() const { return groups.back(); }

  static Literal literal(const GroupMember& m, const LayerLayout& layout, int hole);
  static std::vector<Literal> literals(const Group& g, const LayerLayout& layout, int hole);
};

// Group structure for `pigeon_count` >= 2 literals.
GroupLayout groups(int pigeon_count);

// Pairwise encoding: n+1 at-least-one clauses, then per hole every
// (-x_ph -x_qh), p < q.
CnfFormula php_standard(int n);
void standard_clauses(int n, const ClauseCallback& emit);

// Recursive at-most-one encoding with the same at-least-one clauses.
CnfFormula php_amo(int n);

}  // namespace pigeon
