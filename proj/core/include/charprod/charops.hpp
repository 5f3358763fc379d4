#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "charprod/character_table.hpp"
#include "charprod/class_function.hpp"
#include "charprod/group.hpp"
#include "charprod/subgroup_cache.hpp"

namespace charprod {

/// f = sum a_i chi_i with a_i > 0, in ascending irreducible index.
struct Decomposition {
  std::vector<std::pair<std::size_t, std::int64_t>> constituents;

  /// Number of distinct irreducible constituents.
  std::size_t eta() const noexcept { return constituents.size(); }
  std::int64_t multiplicity(std::size_t irr) const;
  bool contains(std::size_t irr) const { return multiplicity(irr) != 0; }
};

/// Throws NotACharacter when a multiplicity is negative or non-integral.
Decomposition decompose(const ClassFunction& f, const CharacterTable& t);

/// Z(f) = {g : |f(g)| = f(1)}.
Subgroup center_of(const ClassFunction& f);
/// V(f), the subgroup generated by the support of f.
Subgroup vanishing_off(const ClassFunction& f);
/// Ker(f) = {g : f(g) = f(1)}.
Subgroup kernel_of(const ClassFunction& f);

/// The derived subgroup, generated by conjugates of generator commutators.
Subgroup derived_subgroup(const GroupPtr& g);
/// Indices of the degree-1 irreducibles; their count is checked against
/// |G : G'|.
std::vector<std::size_t> linear_character_indices(const CharacterTable& t);
std::vector<ClassFunction> linear_characters(const CharacterTable& t);

/// A subgroup H of G together with its realization as a Group, its table,
/// and the fusion of H-classes into G-classes.
class InducedContext {
 public:
  InducedContext(Subgroup subgroup, GroupPtr realization, TablePtr table);

  const Subgroup& subgroup() const noexcept { return subgroup_; }
  const GroupPtr& parent() const noexcept { return subgroup_.parent(); }
  const GroupPtr& group() const noexcept { return group_; }
  const CharacterTable& table() const noexcept { return *table_; }
  const TablePtr& table_ptr() const noexcept { return table_; }
  const std::vector<ClassIndex>& class_fusion() const noexcept { return fusion_; }
  ElementIndex to_parent(ElementIndex h) const { return to_parent_[h]; }
  std::optional<ElementIndex> from_parent(ElementIndex g) const;

 private:
  Subgroup subgroup_;
  GroupPtr group_;
  TablePtr table_;
  std::vector<ClassIndex> fusion_;
  std::vector<ElementIndex> to_parent_;
  std::vector<ElementIndex> from_parent_;  // kAbsent outside H
};

ClassFunction restrict(const ClassFunction& f, const InducedContext& ctx);
/// Induction through the class fusion and centralizer orders.
ClassFunction induce(const ClassFunction& f, const InducedContext& ctx);
/// Induction by the defining sum (1/|H|) sum_{x in G} f(x g x^-1).
ClassFunction induce_by_sum(const ClassFunction& f, const InducedContext& ctx);

/// f^g(x) = f(g x g^-1) for f on a normal subgroup N and g in G.
/// Throws NotNormal.
ClassFunction conjugate_character(const ClassFunction& f, ElementIndex g,
                                  const InducedContext& ctx);

struct CharacterOrbit {
  Subgroup stabilizer;
  std::vector<ClassFunction> orbit;  // in order of first appearance
};

CharacterOrbit stabilizer_and_orbit(const ClassFunction& f, const InducedContext& ctx);

/// The same element set as a subgroup of another group that contains it.
/// Throws NotASubgroup when some element is missing.
Subgroup transfer(const Subgroup& s, const GroupPtr& target);

/// The unique xi in Irr(G_iota) over iota with xi^G = chi. `y_ctx` holds Y
/// inside G and `stab_ctx` holds G_iota inside G. Throws NoCorrespondent or
/// NotUnique.
std::size_t clifford_correspondent(const ClassFunction& chi, const ClassFunction& iota,
                                   const InducedContext& y_ctx, const InducedContext& stab_ctx,
                                   SubgroupCache& cache);

/// Indices of chi in Irr(G) with [chi_N, phi] != 0.
std::vector<std::size_t> irr_lying_over(const CharacterTable& t, const InducedContext& ctx,
                                        const ClassFunction& phi);

}  // namespace charprod
