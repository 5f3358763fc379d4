#pragma once

#include <cstddef>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "charprod/character_table.hpp"
#include "charprod/group.hpp"

namespace charprod {

class InducedContext;

namespace detail {

// Thread-safe memo: one computation per key, concurrent readers wait on it.
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
 public:
  template <class Compute>
  std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
    std::unique_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      auto pending = it->second;
      lock.unlock();
      return pending.get();
    }
    std::promise<std::shared_ptr<const Value>> promise;
    auto future = promise.get_future().share();
    entries_.emplace(key, future);
    lock.unlock();
    try {
      promise.set_value(compute());
    } catch (...) {
      promise.set_exception(std::current_exception());
      lock.lock();
      entries_.erase(key);
      lock.unlock();
    }
    return future.get();
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<Key, std::shared_future<std::shared_ptr<const Value>>, Hash> entries_;
};

struct PermutationSetHash {
  std::size_t operator()(const std::vector<Permutation>& v) const noexcept;
};

struct SubgroupKey {
  const Group* parent;
  boost::dynamic_bitset<> mask;
  friend bool operator==(const SubgroupKey&, const SubgroupKey&) = default;
};

struct SubgroupKeyHash {
  std::size_t operator()(const SubgroupKey& k) const noexcept;
};

}  // namespace detail

/// Memoizes subgroup realizations, character tables and induction
/// contexts. Safe for concurrent use.
///
/// A subgroup is realized as a Group whose identity depends only on its set
/// of permutations, so a subgroup reached from different parents (say Y
/// inside G and inside a stabilizer of G) shares one realization and one
/// table.
class SubgroupCache {
 public:
  SubgroupCache() = default;
  SubgroupCache(const SubgroupCache&) = delete;
  SubgroupCache& operator=(const SubgroupCache&) = delete;

  GroupPtr realize(const Subgroup& s);
  TablePtr table(const GroupPtr& g);
  std::shared_ptr<const InducedContext> context(const Subgroup& s);

  std::size_t table_count() const { return tables_.size(); }

 private:
  detail::Memo<std::vector<Permutation>, Group, detail::PermutationSetHash> groups_;
  detail::Memo<const Group*, CharacterTable> tables_;
  detail::Memo<detail::SubgroupKey, InducedContext, detail::SubgroupKeyHash> contexts_;
  // Keeps every group whose table is memoized alive, so pointer keys stay valid.
  std::mutex pinned_mutex_;
  std::unordered_map<const Group*, GroupPtr> pinned_;

  void pin(const GroupPtr& g);
};

}  // namespace charprod
