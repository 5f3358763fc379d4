#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "charprod/permutation.hpp"

namespace charprod {

using ElementIndex = std::uint32_t;
using ClassIndex = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 10'000;

struct ConjugacyClass {
  ElementIndex representative;         // smallest member index
  std::vector<ElementIndex> members;   // sorted
  std::size_t size() const noexcept { return members.size(); }
};

/// A finite permutation group with every element enumerated.
///
/// Elements are indexed in breadth-first order from the identity (index 0),
/// multiplying on the right by the generators in the order given. Classes
/// are ordered by their smallest member, so the identity class is class 0.
/// Immutable after construction.
class Group {
 public:
  /// Breadth-first closure. `degree` is required when `generators` is empty.
  static std::shared_ptr<const Group> closure(std::vector<Permutation> generators,
                                              std::optional<std::size_t> degree = {},
                                              std::size_t cap = kDefaultClosureCap);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Element indices of the generators (same order as generators()).
  const std::vector<ElementIndex>& generator_indices() const noexcept { return generator_indices_; }

  const Permutation& element(ElementIndex i) const { return elements_.at(i); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<ElementIndex> index_of(const Permutation& p) const;

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverse_[a]; }
  /// g^-1 x g.
  ElementIndex conjugate(ElementIndex x, ElementIndex g) const {
    return multiply(multiply(inverse_[g], x), g);
  }
  ElementIndex power(ElementIndex a, std::int64_t k) const;
  std::uint64_t element_order(ElementIndex a) const { return element_orders_[a]; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  ClassIndex class_of(ElementIndex a) const { return class_of_[a]; }
  ClassIndex inverse_class(ClassIndex j) const { return inverse_class_[j]; }
  std::uint64_t centralizer_order(ClassIndex j) const { return order() / classes_[j].size(); }
  std::uint64_t representative_order(ClassIndex j) const {
    return element_orders_[classes_[j].representative];
  }
  /// Class of r^k for a representative r of class j.
  ClassIndex power_class(ClassIndex j, std::int64_t k) const;

  /// lcm of element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }
  /// p when the order is p^k with k >= 1.
  std::optional<std::uint32_t> prime() const noexcept { return prime_; }
  bool is_abelian() const noexcept { return classes_.size() == elements_.size(); }

 private:
  Group() = default;
  void enumerate(std::size_t cap);
  void build_classes();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementIndex> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex> index_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> table_;  // full multiplication table for small orders
  std::vector<std::uint64_t> element_orders_;
  std::vector<ConjugacyClass> classes_;
  std::vector<ClassIndex> class_of_;
  std::vector<ClassIndex> inverse_class_;
  std::uint64_t exponent_ = 1;
  std::optional<std::uint32_t> prime_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A subgroup of a parent Group, stored as an element mask.
class Subgroup {
 public:
  const GroupPtr& parent() const noexcept { return parent_; }
  const boost::dynamic_bitset<>& mask() const noexcept { return mask_; }
  const std::vector<ElementIndex>& elements() const noexcept { return elements_; }
  /// A small generating set (chosen greedily by ascending element index).
  const std::vector<ElementIndex>& generators() const noexcept { return generators_; }
  bool contains(ElementIndex a) const { return mask_.test(a); }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_->order() / elements_.size(); }
  bool is_normal() const noexcept { return is_normal_; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_->order(); }
  bool is_subgroup_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  friend Subgroup subgroup_generated(const GroupPtr&, std::span<const ElementIndex>);
  friend std::optional<Subgroup> subgroup_from_mask(const GroupPtr&, const boost::dynamic_bitset<>&);
  Subgroup() = default;

  GroupPtr parent_;
  boost::dynamic_bitset<> mask_;
  std::vector<ElementIndex> elements_;
  std::vector<ElementIndex> generators_;
  bool is_normal_ = false;
};

/// Smallest subgroup containing `seed`. Throws InvalidIndex on a bad index.
Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementIndex> seed);

/// The subgroup with exactly these elements, or nullopt when the set is not
/// closed under multiplication.
std::optional<Subgroup> subgroup_from_mask(const GroupPtr& g, const boost::dynamic_bitset<>& mask);

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

/// Element mask of a union of conjugacy classes.
boost::dynamic_bitset<> class_union_mask(const Group& g, std::span<const ClassIndex> classes);

}  // namespace charprod
