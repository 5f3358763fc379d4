#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charprod/class_function.hpp"

namespace charprod {

/// Class multiplication coefficients a(i,j,k) = #{(x,y) in C_i x C_j : xy = z}
/// for a fixed z in C_k.
class ClassConstants {
 public:
  explicit ClassConstants(std::size_t classes)
      : classes_(classes), data_(classes * classes * classes, 0) {}
  std::size_t classes() const noexcept { return classes_; }
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * classes_ + j) * classes_ + k];
  }
  std::uint32_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * classes_ + j) * classes_ + k];
  }

 private:
  std::size_t classes_;
  std::vector<std::uint32_t> data_;
};

ClassConstants class_constants(const Group& g);

/// The irreducible characters of a group.
///
/// Index order is deterministic: the principal character first, then by
/// degree, then lexicographically by canonical values class by class.
class CharacterTable {
 public:
  /// Takes the rows as given; no verification (see verify_orthogonality).
  CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return irreducibles_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles_.at(i); }
  const std::vector<ClassFunction>& irreducibles() const noexcept { return irreducibles_; }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  std::optional<std::uint32_t> prime() const noexcept { return group_->prime(); }

  /// |C_j| * conj(chi_i(g_j)), precomputed for fast inner products.
  const std::vector<Cyclotomic>& weighted_conjugate(std::size_t i) const {
    return weighted_conj_.at(i);
  }
  /// Index of an irreducible equal to f, if any.
  std::optional<std::size_t> find(const ClassFunction& f) const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::int64_t> degrees_;
  std::vector<std::vector<Cyclotomic>> weighted_conj_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// The exact character table by the Dixon-Schneider method. Throws
/// EigensplitStall or LiftInconsistent on internal failure.
CharacterTable dixon_table(const GroupPtr& g);

/// Both orthogonality relations, checked exactly.
bool verify_orthogonality(const CharacterTable& t);

namespace detail {

/// Smallest prime q with q = 1 (mod e) and q > 2 * ceil(sqrt(n)).
std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t n);

}  // namespace detail

}  // namespace charprod
