#include "pigeon/encodings.hpp"

#include <stdexcept>
#include <string>

namespace pigeon {
namespace {

void require_n(int n, int min) {
  if (n < min || n > kMaxPigeonN)
    throw std::invalid_argument("n must be in [" + std::to_string(min) + ", " +
                                std::to_string(kMaxPigeonN) + "], got " + std::to_string(n));
}

}  // namespace

int group_count(int pigeons) {
  if (pigeons < 2) throw std::invalid_argument("a group chain needs at least 2 literals");
  return pigeons <= 4 ? 1 : (pigeons - 1) / 2;
}

Var LayerLayout::x_var(int p, int h) const {
  if (p < 0 || p > layer || h < 1 || h > layer)
    throw std::out_of_range("x(" + std::to_string(p) + "," + std::to_string(h) +
                            ") outside layer " + std::to_string(layer));
  return x_base + static_cast<Var>(p) * layer + h;
}

Var LayerLayout::y_var(int g, int h) const {
  if (g < 0 || g >= aux_groups || h < 1 || h > layer)
    throw std::out_of_range("y(" + std::to_string(g) + "," + std::to_string(h) +
                            ") outside layer " + std::to_string(layer));
  return y_base + static_cast<Var>(g) * layer + h;
}

LayerLayout input_layout(int n) {
  require_n(n, 1);
  LayerLayout l;
  l.n = n;
  l.layer = n;
  l.x_base = 0;
  l.y_base = static_cast<Var>(n) * (n + 1);
  return l;
}

LayerLayout amo_input_layout(int n) {
  auto l = input_layout(n);
  l.aux_groups = group_count(n + 1) - 1;
  return l;
}

LayerLayout next_layer(const LayerLayout& prev, LayerStyle style) {
  if (prev.layer <= 1) throw std::out_of_range("layer 1 is the last layer");
  LayerLayout l;
  l.n = prev.n;
  l.layer = prev.layer - 1;
  l.x_base = prev.last_id();
  l.y_base = l.x_base + static_cast<Var>(l.layer + 1) * l.layer;
  l.aux_groups = style == LayerStyle::kRecursiveAmo ? group_count(l.layer + 1) - 1 : 0;
  return l;
}

LayerLayout layer_layout(int n, int k, LayerStyle style) {
  require_n(n, 1);
  if (k < 1 || k > n)
    throw std::out_of_range("layer " + std::to_string(k) + " outside [1, " + std::to_string(n) +
                            "]");
  auto l = input_layout(n);
  while (l.layer > k) l = next_layer(l, style);
  return l;
}

Literal GroupLayout::literal(const GroupMember& m, const LayerLayout& layout, int hole) {
  return m.kind == GroupMember::Kind::kPigeon ? Literal::positive(layout.x_var(m.index, hole))
                                              : Literal::negative(layout.y_var(m.index, hole));
}

std::vector<Literal> GroupLayout::literals(const Group& g, const LayerLayout& layout, int hole) {
  std::vector<Literal> out;
  out.reserve(g.members.size());
  for (const auto& m : g.members) out.push_back(literal(m, layout, hole));
  return out;
}

GroupLayout groups(int pigeon_count) {
  const int count = group_count(pigeon_count);
  using Kind = GroupMember::Kind;
  GroupLayout layout;
  if (count == 1) {
    Group only;
    for (int p = 0; p < pigeon_count; ++p) only.members.push_back({Kind::kPigeon, p});
    layout.groups.push_back(std::move(only));
    return layout;
  }
  layout.groups.push_back(
      {{{Kind::kPigeon, 0}, {Kind::kPigeon, 1}, {Kind::kPigeon, 2}}, /*has_aux=*/true});
  for (int g = 1; g + 1 < count; ++g)
    layout.groups.push_back(
        {{{Kind::kNegatedAux, g - 1}, {Kind::kPigeon, 2 * g + 1}, {Kind::kPigeon, 2 * g + 2}},
         /*has_aux=*/true});
  Group last;
  last.members.push_back({Kind::kNegatedAux, count - 2});
  for (int p = 2 * count - 1; p < pigeon_count; ++p) last.members.push_back({Kind::kPigeon, p});
  layout.groups.push_back(std::move(last));
  return layout;
}

void standard_clauses(int n, const ClauseCallback& emit) {
  require_n(n, 1);
  const auto layout = input_layout(n);
  std::vector<Literal> c;
  for (int p = 0; p <= n; ++p) {
    c.clear();
    for (int h = 1; h <= n; ++h) c.push_back(Literal::positive(layout.x_var(p, h)));
    emit(c);
  }
  for (int h = 1; h <= n; ++h)
    for (int p = 0; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        const Literal pair[] = {Literal::negative(layout.x_var(p, h)),
                                Literal::negative(layout.x_var(q, h))};
        emit(pair);
      }
}

CnfFormula php_standard(int n) {
  CnfFormula f;
  f.num_vars = input_layout(n).last_id();
  standard_clauses(n, [&f](std::span<const Literal> c) { f.clauses.emplace_back(c); });
  return f;
}

CnfFormula php_amo(int n) {
  require_n(n, 1);
  CnfFormula f;
  const auto layout = amo_input_layout(n);
  const auto chain = groups(n + 1);
  f.num_vars = layout.last_id();

  std::vector<Literal> c;
  for (int p = 0; p <= n; ++p) {
    c.clear();
    for (int h = 1; h <= n; ++h) c.push_back(Literal::positive(layout.x_var(p, h)));
    f.clauses.emplace_back(c);
  }
  for (int h = 1; h <= n; ++h) {
    for (std::size_t g = 0; g < chain.group_count(); ++g) {
      const auto& group = chain.groups[g];
      const auto lits = GroupLayout::literals(group, layout, h);
      if (group.has_aux) {
        const auto y = Literal::positive(layout.y_var(static_cast<int>(g), h));
        f.clauses.push_back(Clause(std::vector<Literal>{y, lits[0], lits[1], lits[2]}));
        for (auto l : lits) f.clauses.push_back(Clause(std::vector<Literal>{~y, ~l}));
      }
      for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j)
          f.clauses.push_back(Clause(std::vector<Literal>{~lits[i], ~lits[j]}));
    }
  }
  return f;
}

}  // namespace pigeon
