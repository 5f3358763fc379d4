#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "charprod/cyclotomic.hpp"
#include "charprod/group.hpp"

namespace charprod {

/// A function on a group that is constant on conjugacy classes, stored as
/// one exact value per class. Values of order dividing exp(G) are held in
/// Q(zeta_exp(G)).
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction constant(GroupPtr group, const Cyclotomic& value);
  /// The principal character 1_G.
  static ClassFunction principal(GroupPtr group);
  /// The regular character.
  static ClassFunction regular(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](ClassIndex j) const { return values_.at(j); }
  const Cyclotomic& at_element(ElementIndex x) const { return values_[group_->class_of(x)]; }
  std::size_t size() const noexcept { return values_.size(); }

  /// f(1) as an integer when it is one.
  std::optional<std::int64_t> degree() const { return values_.front().as_integer(); }
  bool is_zero() const;

  ClassFunction conj() const;
  ClassFunction scaled(const mpq_class& q) const;

  ClassFunction& operator+=(const ClassFunction& b);
  ClassFunction& operator-=(const ClassFunction& b);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// Pointwise product. Throws GroupMismatch.
ClassFunction product(const ClassFunction& a, const ClassFunction& b);

/// (1/|G|) sum_j |C_j| a(j) conj(b(j)). Throws GroupMismatch.
mpq_class inner_product(const ClassFunction& a, const ClassFunction& b);

/// Inner product of two characters. Throws IntegralityViolation when the
/// result is not a nonnegative integer.
std::int64_t character_inner_product(const ClassFunction& a, const ClassFunction& b);

}  // namespace charprod
