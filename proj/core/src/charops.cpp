#include "charprod/charops.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "charprod/error.hpp"

namespace charprod {

namespace {

constexpr ElementIndex kAbsent = std::numeric_limits<ElementIndex>::max();

void require_group(const ClassFunction& f, const GroupPtr& g, const char* what) {
  if (f.group() != g) throw GroupMismatch(what);
}

Subgroup subgroup_of_classes(const GroupPtr& g, const std::vector<ClassIndex>& classes,
                             const char* what) {
  auto s = subgroup_from_mask(g, class_union_mask(*g, classes));
  if (!s) throw NotASubgroup(what);
  return *s;
}

Subgroup normal_closure(const GroupPtr& g, std::vector<ElementIndex> seed) {
  for (;;) {
    Subgroup s = subgroup_generated(g, seed);
    if (s.is_normal()) return s;
    seed = s.generators();
    for (ElementIndex h : s.generators()) {
      for (ElementIndex x : g->generator_indices()) {
        ElementIndex c = g->conjugate(h, x);
        if (!s.contains(c)) seed.push_back(c);
      }
    }
  }
}

}  // namespace

std::int64_t Decomposition::multiplicity(std::size_t irr) const {
  auto it = std::lower_bound(constituents.begin(), constituents.end(), irr,
                             [](const auto& c, std::size_t i) { return c.first < i; });
  if (it == constituents.end() || it->first != irr) return 0;
  return it->second;
}

Decomposition decompose(const ClassFunction& f, const CharacterTable& t) {
  require_group(f, t.group(), "decomposing against the table of another group");
  const Group& g = *t.group();
  const mpq_class inv_order(1, static_cast<unsigned long>(g.order()));
  Decomposition d;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& w = t.weighted_conjugate(i);
    Cyclotomic sum;
    for (ClassIndex j = 0; j < f.size(); ++j) {
      if (!f[j].is_zero()) sum += f[j] * w[j];
    }
    auto a = sum.scaled(inv_order).as_integer();
    if (!a || *a < 0) {
      throw NotACharacter("multiplicity of irreducible " + std::to_string(i) + " is " +
                          sum.scaled(inv_order).to_string());
    }
    if (*a > 0) d.constituents.emplace_back(i, *a);
  }
  ClassFunction rebuilt = ClassFunction::constant(t.group(), Cyclotomic(0));
  for (auto [i, a] : d.constituents) rebuilt += t[i].scaled(mpq_class(static_cast<long>(a)));
  if (!(rebuilt == f)) throw NotACharacter("constituents do not reconstruct the class function");
  return d;
}

Subgroup center_of(const ClassFunction& f) {
  const Cyclotomic d2 = f[0] * f[0].conj();
  std::vector<ClassIndex> classes;
  for (ClassIndex j = 0; j < f.size(); ++j) {
    if (f[j] * f[j].conj() == d2) classes.push_back(j);
  }
  return subgroup_of_classes(f.group(), classes, "center of a class function is not a subgroup");
}

Subgroup vanishing_off(const ClassFunction& f) {
  const Group& g = *f.group();
  std::vector<ElementIndex> support;
  for (ClassIndex j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) continue;
    const auto& members = g.classes()[j].members;
    support.insert(support.end(), members.begin(), members.end());
  }
  return subgroup_generated(f.group(), support);
}

Subgroup kernel_of(const ClassFunction& f) {
  std::vector<ClassIndex> classes;
  for (ClassIndex j = 0; j < f.size(); ++j) {
    if (f[j] == f[0]) classes.push_back(j);
  }
  return subgroup_of_classes(f.group(), classes, "kernel of a class function is not a subgroup");
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<ElementIndex> commutators;
  const auto& gens = g->generator_indices();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      ElementIndex x = gens[a];
      ElementIndex y = gens[b];
      ElementIndex c = g->multiply(g->multiply(g->inverse(x), g->inverse(y)), g->multiply(x, y));
      if (c != 0) commutators.push_back(c);
    }
  }
  return normal_closure(g, std::move(commutators));
}

std::vector<std::size_t> linear_character_indices(const CharacterTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degrees()[i] == 1) out.push_back(i);
  }
  const std::size_t expected = derived_subgroup(t.group()).index();
  if (out.size() != expected) {
    throw Error("table has " + std::to_string(out.size()) + " linear characters but |G:G'| = " +
                std::to_string(expected));
  }
  return out;
}

std::vector<ClassFunction> linear_characters(const CharacterTable& t) {
  std::vector<ClassFunction> out;
  for (std::size_t i : linear_character_indices(t)) out.push_back(t[i]);
  return out;
}

InducedContext::InducedContext(Subgroup subgroup, GroupPtr realization, TablePtr table)
    : subgroup_(std::move(subgroup)), group_(std::move(realization)), table_(std::move(table)) {
  const Group& parent = *subgroup_.parent();
  const Group& h = *group_;
  if (h.order() != subgroup_.order() || table_->group() != group_) {
    throw GroupMismatch("realization does not match the subgroup");
  }
  to_parent_.resize(h.order());
  from_parent_.assign(parent.order(), kAbsent);
  for (ElementIndex x = 0; x < h.order(); ++x) {
    auto y = parent.index_of(h.element(x));
    if (!y || !subgroup_.contains(*y)) throw NotASubgroup("realization leaves the subgroup");
    to_parent_[x] = *y;
    from_parent_[*y] = x;
  }
  for (const auto& cls : h.classes()) fusion_.push_back(parent.class_of(to_parent_[cls.representative]));
}

std::optional<ElementIndex> InducedContext::from_parent(ElementIndex g) const {
  ElementIndex x = from_parent_.at(g);
  if (x == kAbsent) return std::nullopt;
  return x;
}

ClassFunction restrict(const ClassFunction& f, const InducedContext& ctx) {
  require_group(f, ctx.parent(), "restricting a class function of another group");
  std::vector<Cyclotomic> values;
  values.reserve(ctx.class_fusion().size());
  for (ClassIndex j : ctx.class_fusion()) values.push_back(f[j]);
  return ClassFunction(ctx.group(), std::move(values));
}

ClassFunction induce(const ClassFunction& f, const InducedContext& ctx) {
  require_group(f, ctx.group(), "inducing a class function of another group");
  const Group& g = *ctx.parent();
  const Group& h = *ctx.group();
  std::vector<Cyclotomic> values(g.class_count());
  for (ClassIndex k = 0; k < h.class_count(); ++k) {
    if (f[k].is_zero()) continue;
    values[ctx.class_fusion()[k]] +=
        f[k].scaled(mpq_class(1, static_cast<unsigned long>(h.centralizer_order(k))));
  }
  for (ClassIndex j = 0; j < g.class_count(); ++j) {
    if (!values[j].is_zero()) {
      values[j] = values[j].scaled(mpq_class(static_cast<unsigned long>(g.centralizer_order(j))));
    }
  }
  return ClassFunction(ctx.parent(), std::move(values));
}

ClassFunction induce_by_sum(const ClassFunction& f, const InducedContext& ctx) {
  require_group(f, ctx.group(), "inducing a class function of another group");
  const Group& g = *ctx.parent();
  const Group& h = *ctx.group();
  std::vector<Cyclotomic> values(g.class_count());
  for (ClassIndex j = 0; j < g.class_count(); ++j) {
    ElementIndex r = g.classes()[j].representative;
    Cyclotomic sum;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      auto y = ctx.from_parent(g.conjugate(r, g.inverse(x)));
      if (y) sum += f[h.class_of(*y)];
    }
    values[j] = sum.scaled(mpq_class(1, static_cast<unsigned long>(h.order())));
  }
  return ClassFunction(ctx.parent(), std::move(values));
}

ClassFunction conjugate_character(const ClassFunction& f, ElementIndex g,
                                  const InducedContext& ctx) {
  require_group(f, ctx.group(), "conjugating a class function of another group");
  if (!ctx.subgroup().is_normal()) throw NotNormal("conjugation action needs a normal subgroup");
  const Group& parent = *ctx.parent();
  const Group& n = *ctx.group();
  if (g >= parent.order()) throw InvalidIndex("element index out of range");
  const ElementIndex g_inv = parent.inverse(g);
  std::vector<Cyclotomic> values;
  values.reserve(n.class_count());
  for (const auto& cls : n.classes()) {
    ElementIndex x = ctx.to_parent(cls.representative);
    ElementIndex y = *ctx.from_parent(parent.conjugate(x, g_inv));
    values.push_back(f[n.class_of(y)]);
  }
  return ClassFunction(ctx.group(), std::move(values));
}

CharacterOrbit stabilizer_and_orbit(const ClassFunction& f, const InducedContext& ctx) {
  const Group& g = *ctx.parent();
  std::vector<ElementIndex> stabilizer;
  std::vector<ClassFunction> orbit;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    ClassFunction fx = conjugate_character(f, x, ctx);
    if (fx == f) stabilizer.push_back(x);
    if (std::find(orbit.begin(), orbit.end(), fx) == orbit.end()) orbit.push_back(std::move(fx));
  }
  return {subgroup_generated(ctx.parent(), stabilizer), std::move(orbit)};
}

Subgroup transfer(const Subgroup& s, const GroupPtr& target) {
  const Group& from = *s.parent();
  boost::dynamic_bitset<> mask(target->order());
  for (ElementIndex x : s.elements()) {
    auto y = target->index_of(from.element(x));
    if (!y) throw NotASubgroup("element missing from the target group");
    mask.set(*y);
  }
  auto out = subgroup_from_mask(target, mask);
  if (!out) throw NotASubgroup("transferred set is not a subgroup");
  return *out;
}

std::size_t clifford_correspondent(const ClassFunction& chi, const ClassFunction& iota,
                                   const InducedContext& y_ctx, const InducedContext& stab_ctx,
                                   SubgroupCache& cache) {
  require_group(chi, stab_ctx.parent(), "character and stabilizer context disagree");
  require_group(iota, y_ctx.group(), "character and normal subgroup context disagree");
  auto y_in_stab = cache.context(transfer(y_ctx.subgroup(), stab_ctx.group()));
  const CharacterTable& t = stab_ctx.table();
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degrees()[i] * static_cast<std::int64_t>(stab_ctx.subgroup().index()) != chi[0]) continue;
    if (character_inner_product(restrict(t[i], *y_in_stab), iota) == 0) continue;
    if (!(induce(t[i], stab_ctx) == chi)) continue;
    if (found) throw NotUnique("two characters of the stabilizer induce to the same character");
    found = i;
  }
  if (!found) throw NoCorrespondent("no character of the stabilizer lies over the given one");
  return *found;
}

std::vector<std::size_t> irr_lying_over(const CharacterTable& t, const InducedContext& ctx,
                                        const ClassFunction& phi) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (character_inner_product(restrict(t[i], ctx), phi) != 0) out.push_back(i);
  }
  return out;
}

}  // namespace charprod
