#include "charprod/subgroup_cache.hpp"

#include <algorithm>
#include <unordered_set>

#include "charprod/charops.hpp"
#include "charprod/error.hpp"

namespace charprod {

namespace detail {

std::size_t PermutationSetHash::operator()(const std::vector<Permutation>& v) const noexcept {
  std::size_t h = v.size();
  std::hash<Permutation> hp;
  for (const auto& p : v) h = h * 1099511628211ULL ^ hp(p);
  return h;
}

std::size_t SubgroupKeyHash::operator()(const SubgroupKey& k) const noexcept {
  std::size_t h = std::hash<const Group*>{}(k.parent);
  std::vector<boost::dynamic_bitset<>::block_type> blocks;
  boost::to_block_range(k.mask, std::back_inserter(blocks));
  for (auto b : blocks) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(b);
  return h;
}

}  // namespace detail

namespace {

// Greedy generators: walk the sorted elements, keeping each one that is not
// yet in the span of those kept.
std::vector<Permutation> greedy_generators(const std::vector<Permutation>& sorted) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation> span{Permutation(sorted.front().degree())};
  std::vector<Permutation> list(span.begin(), span.end());
  for (const auto& p : sorted) {
    if (span.contains(p)) continue;
    gens.push_back(p);
    for (std::size_t head = 0; head < list.size(); ++head) {
      for (const auto& s : gens) {
        Permutation y = list[head] * s;
        if (span.insert(y).second) list.push_back(std::move(y));
      }
    }
  }
  return gens;
}

}  // namespace

void SubgroupCache::pin(const GroupPtr& g) {
  std::lock_guard lock(pinned_mutex_);
  pinned_.emplace(g.get(), g);
}

GroupPtr SubgroupCache::realize(const Subgroup& s) {
  const Group& parent = *s.parent();
  std::vector<Permutation> key;
  key.reserve(s.order());
  for (ElementIndex x : s.elements()) key.push_back(parent.element(x));
  std::sort(key.begin(), key.end());
  return groups_.get(key, [&] {
    GroupPtr g = Group::closure(greedy_generators(key), parent.degree(), key.size() + 1);
    if (g->order() != key.size()) throw NotASubgroup("element set is not closed");
    return g;
  });
}

TablePtr SubgroupCache::table(const GroupPtr& g) {
  pin(g);
  return tables_.get(g.get(), [&] { return std::make_shared<const CharacterTable>(dixon_table(g)); });
}

std::shared_ptr<const InducedContext> SubgroupCache::context(const Subgroup& s) {
  pin(s.parent());
  return contexts_.get(detail::SubgroupKey{s.parent().get(), s.mask()}, [&] {
    GroupPtr g = realize(s);
    return std::make_shared<const InducedContext>(s, g, table(g));
  });
}

}  // namespace charprod
