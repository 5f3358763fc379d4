#include "charprod/class_function.hpp"

#include <algorithm>
#include <string>

#include "charprod/error.hpp"

namespace charprod {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw GroupMismatch("class functions live on different groups");
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count()) {
    throw std::invalid_argument("class function needs one value per conjugacy class");
  }
  const auto e = static_cast<std::uint32_t>(group_->exponent());
  for (auto& v : values_) {
    if (v.order() != e && e % v.order() == 0) v = v.embed(e);
  }
}

ClassFunction ClassFunction::constant(GroupPtr group, const Cyclotomic& value) {
  std::vector<Cyclotomic> values(group->class_count(), value);
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction ClassFunction::principal(GroupPtr group) { return constant(std::move(group), 1); }

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Cyclotomic> values(group->class_count(), 0);
  values[0] = static_cast<std::int64_t>(group->order());
  return ClassFunction(std::move(group), std::move(values));
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& z) { return z.is_zero(); });
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

ClassFunction ClassFunction::scaled(const mpq_class& q) const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.scaled(q);
  return r;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& b) {
  require_same_group(*this, b);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += b.values_[j];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& b) {
  require_same_group(*this, b);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= b.values_[j];
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> values;
  values.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) values.push_back(a[j] * b[j]);
  return ClassFunction(a.group(), std::move(values));
}

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const Group& g = *a.group();
  Cyclotomic sum;
  for (ClassIndex j = 0; j < a.size(); ++j) {
    if (a[j].is_zero() || b[j].is_zero()) continue;
    Cyclotomic term = a[j] * b[j].conj();
    sum += term.scaled(mpq_class(static_cast<unsigned long>(g.classes()[j].size())));
  }
  sum = sum.scaled(mpq_class(1, static_cast<unsigned long>(g.order())));
  auto q = sum.as_rational();
  if (!q) throw IntegralityViolation("inner product is not rational: " + sum.to_string());
  return *q;
}

std::int64_t character_inner_product(const ClassFunction& a, const ClassFunction& b) {
  mpq_class q = inner_product(a, b);
  if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_slong_p()) {
    throw IntegralityViolation("character inner product is " + q.get_str());
  }
  return q.get_num().get_si();
}

}  // namespace charprod
