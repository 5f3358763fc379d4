#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charprod/group.hpp"

namespace charprod {

/// One manifest entry. Either `generators` (cycle text, one permutation per
/// line) or `product_of` (ids of earlier entries) describes the group.
struct GroupSpec {
  std::string id;
  std::string description;
  std::string generators;
  std::vector<std::string> product_of;
  std::uint64_t expected_order = 0;
  std::optional<std::uint64_t> expected_classes;
  std::optional<std::uint32_t> prime;
};

/// Closure of the generators in `text` (perm-core file format).
GroupPtr parse_group(std::string_view text, std::size_t cap = kDefaultClosureCap);

/// Direct product on disjoint point sets: a on the first points, b after.
std::vector<Permutation> direct_product_generators(const Group& a, const Group& b);

class Catalog {
 public:
  /// The manifest compiled into the library.
  static const Catalog& builtin();
  /// Throws ManifestError.
  static Catalog from_json(std::string_view text);

  /// Adds the entries of another manifest file; later ids replace earlier.
  void load_file(const std::filesystem::path& path);
  void merge(const Catalog& other);

  const std::vector<GroupSpec>& entries() const noexcept { return entries_; }
  const GroupSpec* find(std::string_view id) const;

  /// Builds and checks an entry. Throws UnknownId, or ManifestError when the
  /// order, class count or prime disagree with the entry.
  GroupPtr group(std::string_view id, std::size_t cap = kDefaultClosureCap) const;

 private:
  std::vector<Permutation> generators_of(const GroupSpec& spec, std::size_t& degree,
                                         std::size_t cap, int depth) const;
  void merge_entry(GroupSpec spec);

  std::vector<GroupSpec> entries_;
};

/// Catalog::builtin().group(id).
GroupPtr builtin(std::string_view id, std::size_t cap = kDefaultClosureCap);

}  // namespace charprod
