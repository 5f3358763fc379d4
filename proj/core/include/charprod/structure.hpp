#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charprod/character_table.hpp"
#include "charprod/class_function.hpp"
#include "charprod/group.hpp"

namespace charprod {

/// All normal subgroups of a group, sorted by order and then by element
/// list. Member 0 is the trivial subgroup and the last member is the group.
struct NormalLattice {
  GroupPtr group;
  std::vector<Subgroup> normals;
  /// (a, b) whenever normals[a] is a proper subgroup of normals[b].
  std::vector<std::pair<std::size_t, std::size_t>> inclusion;

  std::optional<std::size_t> find(const Subgroup& s) const;
  /// Members covering normals[i], i.e. minimal proper overgroups.
  std::vector<std::size_t> covers(std::size_t i) const;
};

/// Kernels of the irreducibles, closed under intersection.
NormalLattice normal_lattice(const CharacterTable& t);

std::vector<Subgroup> normals_of_index(const NormalLattice& l, std::uint64_t p);

/// Normal Y with Z < Y and |Y : Z| = p. Throws NotAPGroup.
std::vector<Subgroup> chief_factor_above(const NormalLattice& l, const Subgroup& z);

/// G -> G/N, with G/N acting on the cosets of N.
class QuotientMap {
 public:
  const GroupPtr& source() const noexcept { return kernel_.parent(); }
  const Subgroup& kernel() const noexcept { return kernel_; }
  const GroupPtr& quotient() const noexcept { return quotient_; }
  ElementIndex project(ElementIndex g) const { return projection_.at(g); }
  /// Smallest source element over each quotient element.
  ElementIndex section(ElementIndex q) const { return section_.at(q); }

  /// Lift a class function of G/N to G.
  ClassFunction inflate(const ClassFunction& f) const;
  /// The class function of G/N that inflates to f. Throws NotNormal when
  /// f is not constant on the cosets of N.
  ClassFunction deflate(const ClassFunction& f) const;

 private:
  friend QuotientMap quotient(const GroupPtr& g, const Subgroup& n);
  explicit QuotientMap(Subgroup kernel) : kernel_(std::move(kernel)) {}

  Subgroup kernel_;
  GroupPtr quotient_;
  std::vector<ElementIndex> projection_;
  std::vector<ElementIndex> section_;
};

/// Throws NotNormal.
QuotientMap quotient(const GroupPtr& g, const Subgroup& n);

}  // namespace charprod
