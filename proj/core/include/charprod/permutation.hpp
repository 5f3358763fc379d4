#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charprod {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Products act on the right:
/// (a * b)[i] == b[a[i]], i.e. apply a first, then b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  /// Builds from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  /// lcm of cycle lengths.
  std::uint64_t order() const;
  /// Same permutation on a larger point set (extra points fixed).
  Permutation extended(std::size_t degree) const;
  /// Relabels points i -> i + offset on a set of `degree` points.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  /// Disjoint cycles in 1-based text form, e.g. "(1 2 3)(4 5)"; "()" for
  /// the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Parses one permutation in cycle notation (1-based points). Column
/// offsets in errors are relative to `line_no`'s text.
Permutation parse_permutation(std::string_view text, std::size_t line_no = 1,
                              std::optional<std::size_t> degree = {});

struct GeneratorList {
  std::vector<Permutation> generators;
  std::size_t degree = 0;
};

/// Parses the generator file format: one permutation per line, `#` comments,
/// optional `degree=N` header. All generators are padded to the common
/// degree.
GeneratorList parse_generators(std::string_view text);

}  // namespace charprod

template <>
struct std::hash<charprod::Permutation> {
  std::size_t operator()(const charprod::Permutation& p) const noexcept;
};
