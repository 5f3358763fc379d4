#include <gtest/gtest.h>

#include <numeric>

#include "charprod/catalog.hpp"
#include "charprod/error.hpp"
#include "charprod/group.hpp"

using namespace charprod;

namespace {

GroupPtr d8() { return parse_group("(1 2 3 4)\n(1 3)"); }

}  // namespace

TEST(Group, ClosureOfDihedral8) {
  GroupPtr g = d8();
  EXPECT_EQ(g->order(), 8u);
  EXPECT_EQ(g->class_count(), 5u);
  EXPECT_EQ(g->exponent(), 4u);
  EXPECT_EQ(g->prime(), 2u);
  EXPECT_FALSE(g->is_abelian());
  EXPECT_TRUE(g->element(0).is_identity());
}

TEST(Group, ClassesPartitionTheGroup) {
  for (const char* id : {"dihedral8", "sl23", "heisenberg3", "quaternion16"}) {
    GroupPtr g = builtin(id);
    std::size_t total = 0;
    for (ClassIndex j = 0; j < g->class_count(); ++j) {
      const auto& cls = g->classes()[j];
      total += cls.size();
      EXPECT_EQ(g->order() % cls.size(), 0u);
      EXPECT_EQ(cls.representative, cls.members.front());
      for (ElementIndex x : cls.members) EXPECT_EQ(g->class_of(x), j);
      if (j > 0) EXPECT_LT(g->classes()[j - 1].representative, cls.representative);
    }
    EXPECT_EQ(total, g->order()) << id;
  }
}

TEST(Group, ConjugationAndInverses) {
  GroupPtr g = builtin("sl23");
  for (ElementIndex x = 0; x < g->order(); ++x) {
    EXPECT_EQ(g->multiply(x, g->inverse(x)), 0u);
    for (ElementIndex y = 0; y < g->order(); y += 5) {
      EXPECT_EQ(g->class_of(g->conjugate(x, y)), g->class_of(x));
      EXPECT_EQ(g->element(g->conjugate(x, y)), g->element(y).inverse() * g->element(x) * g->element(y));
    }
  }
}

TEST(Group, PowerMapsAndInverseClasses) {
  GroupPtr g = builtin("heisenberg3");
  for (ClassIndex j = 0; j < g->class_count(); ++j) {
    EXPECT_EQ(g->power_class(j, -1), g->inverse_class(j));
    EXPECT_EQ(g->power_class(j, static_cast<std::int64_t>(g->representative_order(j))), 0u);
    EXPECT_EQ(g->power_class(j, 1), j);
  }
}

TEST(Group, EmptyGeneratorsNeedADegree) {
  EXPECT_THROW(Group::closure({}), EmptyGeneratorSet);
  GroupPtr g = Group::closure({}, 3);
  EXPECT_EQ(g->order(), 1u);
  EXPECT_EQ(g->class_count(), 1u);
  EXPECT_FALSE(g->prime().has_value());
}

TEST(Group, MixedDegreesThrow) {
  EXPECT_THROW(Group::closure({parse_permutation("(1 2)"), parse_permutation("(1 2 3)")}), DegreeMismatch);
}

TEST(Group, ClosureCap) {
  EXPECT_THROW(parse_group("(1 2 3 4 5 6 7 8)\n(1 2)", 1000), ClosureCapExceeded);
  EXPECT_EQ(parse_group("(1 2 3 4 5 6 7)\n(1 2)", 5040)->order(), 5040u);
}

TEST(Group, NonPrimePowerOrder) {
  GroupPtr s3 = parse_group("(1 2 3)\n(1 2)");
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_FALSE(s3->prime().has_value());
}

TEST(Group, SubgroupGeneratedAndNormality) {
  GroupPtr g = d8();
  auto rotation = *g->index_of(parse_permutation("(1 2 3 4)"));
  auto reflection = *g->index_of(parse_permutation("(1 3)", 1, 4));
  std::vector<ElementIndex> r{rotation};
  Subgroup c4 = subgroup_generated(g, r);
  EXPECT_EQ(c4.order(), 4u);
  EXPECT_TRUE(c4.is_normal());
  EXPECT_EQ(c4.index(), 2u);
  std::vector<ElementIndex> s{reflection};
  Subgroup c2 = subgroup_generated(g, s);
  EXPECT_EQ(c2.order(), 2u);
  EXPECT_FALSE(c2.is_normal());
  EXPECT_TRUE(trivial_subgroup(g).is_subgroup_of(c2));
  EXPECT_TRUE(whole_group(g).is_whole());
  std::vector<ElementIndex> bad{99};
  EXPECT_THROW(subgroup_generated(g, bad), InvalidIndex);
}

TEST(Group, SubgroupFromMask) {
  GroupPtr g = d8();
  std::vector<ClassIndex> classes{0, 3};
  auto center = subgroup_from_mask(g, class_union_mask(*g, classes));
  ASSERT_TRUE(center.has_value());
  EXPECT_EQ(center->order(), 2u);
  EXPECT_TRUE(center->is_normal());
  std::vector<ClassIndex> not_closed{0, 1};
  auto mask = class_union_mask(*g, not_closed);
  EXPECT_FALSE(subgroup_from_mask(g, mask).has_value());
}

TEST(Group, LargeGroupsUseHashedMultiplication) {
  GroupPtr g = parse_group("(1 2 3 4 5 6 7)\n(1 2)");
  for (ElementIndex x = 0; x < g->order(); x += 97) {
    for (ElementIndex y = 0; y < g->order(); y += 101) {
      EXPECT_EQ(g->element(g->multiply(x, y)), g->element(x) * g->element(y));
    }
  }
  EXPECT_EQ(g->class_count(), 15u);
}
