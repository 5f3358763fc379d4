#include "charprod/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "charprod/error.hpp"

namespace charprod {

namespace {

constexpr std::size_t kTableLimit = 1024;

std::optional<std::uint32_t> prime_of_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return static_cast<std::uint32_t>(p);
}

}  // namespace

std::shared_ptr<const Group> Group::closure(std::vector<Permutation> generators,
                                            std::optional<std::size_t> degree,
                                            std::size_t cap) {
  if (generators.empty() && !degree) {
    throw EmptyGeneratorSet("no generators and no explicit degree");
  }
  std::size_t n = degree.value_or(generators.empty() ? 0 : generators.front().degree());
  for (auto& s : generators) {
    if (s.degree() > n && degree) throw DegreeMismatch("generator exceeds the declared degree");
    if (s.degree() != n) {
      if (degree) {
        s = s.extended(n);
      } else {
        throw DegreeMismatch("generators have different degrees");
      }
    }
  }
  std::shared_ptr<Group> g(new Group());
  g->degree_ = n;
  g->generators_ = std::move(generators);
  g->enumerate(cap);
  g->build_classes();
  return g;
}

void Group::enumerate(std::size_t cap) {
  Permutation identity(degree_);
  elements_.push_back(identity);
  index_.emplace(identity, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& s : generators_) {
      Permutation y = elements_[head] * s;
      if (index_.contains(y)) continue;
      if (elements_.size() >= cap) {
        throw ClosureCapExceeded("group closure exceeds the cap of " + std::to_string(cap) +
                                 " elements");
      }
      index_.emplace(y, static_cast<ElementIndex>(elements_.size()));
      elements_.push_back(std::move(y));
    }
  }
  const std::size_t n = elements_.size();
  for (const auto& s : generators_) generator_indices_.push_back(index_.at(s));

  inverse_.resize(n);
  element_orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    element_orders_[i] = elements_[i].order();
    exponent_ = std::lcm(exponent_, element_orders_[i]);
  }
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
      }
    }
  }
  prime_ = prime_of_power(n);
}

void Group::build_classes() {
  const std::size_t n = elements_.size();
  constexpr ClassIndex kUnset = ~ClassIndex{0};
  class_of_.assign(n, kUnset);
  for (ElementIndex x = 0; x < n; ++x) {
    if (class_of_[x] != kUnset) continue;
    auto id = static_cast<ClassIndex>(classes_.size());
    ConjugacyClass cls{x, {x}};
    class_of_[x] = id;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      for (ElementIndex s : generator_indices_) {
        ElementIndex y = conjugate(cls.members[head], s);
        if (class_of_[y] == kUnset) {
          class_of_[y] = id;
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
  inverse_class_.resize(classes_.size());
  for (ClassIndex j = 0; j < classes_.size(); ++j) {
    inverse_class_[j] = class_of_[inverse_[classes_[j].representative]];
  }
}

std::optional<ElementIndex> Group::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex Group::multiply(ElementIndex a, ElementIndex b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementIndex Group::power(ElementIndex a, std::int64_t k) const {
  auto o = static_cast<std::int64_t>(element_orders_[a]);
  k %= o;
  if (k < 0) k += o;
  ElementIndex result = 0;
  ElementIndex base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return result;
}

ClassIndex Group::power_class(ClassIndex j, std::int64_t k) const {
  const auto& cls = classes_.at(j);
  ClassIndex result = class_of_[power(cls.representative, k)];
  assert(cls.members.size() < 2 || class_of_[power(cls.members.back(), k)] == result);
  return result;
}

namespace {

// Closure of `gens` inside g, extending the element list `elems` in place.
void extend_closure(const Group& g, const std::vector<ElementIndex>& gens,
                    std::vector<ElementIndex>& elems, boost::dynamic_bitset<>& mask) {
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (ElementIndex s : gens) {
      ElementIndex y = g.multiply(elems[head], s);
      if (!mask.test(y)) {
        mask.set(y);
        elems.push_back(y);
      }
    }
  }
}

bool closed_under_conjugation(const Group& g, const std::vector<ElementIndex>& gens,
                              const boost::dynamic_bitset<>& mask) {
  for (ElementIndex h : gens) {
    for (ElementIndex s : g.generator_indices()) {
      if (!mask.test(g.conjugate(h, s))) return false;
    }
  }
  return true;
}

}  // namespace

Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementIndex> seed) {
  Subgroup h;
  h.parent_ = g;
  h.mask_.resize(g->order());
  h.mask_.set(0);
  std::vector<ElementIndex> elems{0};
  std::vector<ElementIndex> sorted_seed(seed.begin(), seed.end());
  std::sort(sorted_seed.begin(), sorted_seed.end());
  for (ElementIndex s : sorted_seed) {
    if (s >= g->order()) throw InvalidIndex("element index out of range");
    if (h.mask_.test(s)) continue;
    h.generators_.push_back(s);
    extend_closure(*g, h.generators_, elems, h.mask_);
  }
  std::sort(elems.begin(), elems.end());
  h.elements_ = std::move(elems);
  h.is_normal_ = closed_under_conjugation(*g, h.generators_, h.mask_);
  return h;
}

std::optional<Subgroup> subgroup_from_mask(const GroupPtr& g, const boost::dynamic_bitset<>& mask) {
  if (mask.size() != g->order() || !mask.test(0)) return std::nullopt;
  std::vector<ElementIndex> seed;
  for (auto i = mask.find_first(); i != boost::dynamic_bitset<>::npos; i = mask.find_next(i)) {
    seed.push_back(static_cast<ElementIndex>(i));
  }
  Subgroup h = subgroup_generated(g, seed);
  if (h.mask_ != mask) return std::nullopt;
  return h;
}

Subgroup whole_group(const GroupPtr& g) {
  return subgroup_generated(g, g->generator_indices());
}

Subgroup trivial_subgroup(const GroupPtr& g) { return subgroup_generated(g, {}); }

boost::dynamic_bitset<> class_union_mask(const Group& g, std::span<const ClassIndex> classes) {
  boost::dynamic_bitset<> mask(g.order());
  for (ClassIndex j : classes) {
    for (ElementIndex x : g.classes().at(j).members) mask.set(x);
  }
  return mask;
}

}  // namespace charprod
