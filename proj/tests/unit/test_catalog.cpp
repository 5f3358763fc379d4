#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "charprod/catalog.hpp"
#include "charprod/character_table.hpp"
#include "charprod/error.hpp"

using namespace charprod;

namespace {

std::vector<std::int64_t> sorted_degrees(const GroupPtr& g) {
  auto d = dixon_table(g).degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Catalog, BuiltinEntriesMatchTheirRecords) {
  const Catalog& c = Catalog::builtin();
  EXPECT_GE(c.entries().size(), 30u);
  for (const auto& e : c.entries()) {
    GroupPtr g = c.group(e.id);
    EXPECT_EQ(g->order(), e.expected_order) << e.id;
    if (e.expected_classes) EXPECT_EQ(g->class_count(), *e.expected_classes) << e.id;
    EXPECT_EQ(g->prime(), e.prime) << e.id;
    EXPECT_FALSE(e.description.empty()) << e.id;
  }
}

TEST(Catalog, RequiredIds) {
  for (const char* id : {"dihedral8", "quaternion8", "sl23", "heisenberg3", "heisenberg5", "extraspecial_exp_p2_3",
                         "wreath2", "wreath3", "trivial"}) {
    EXPECT_NE(Catalog::builtin().find(id), nullptr) << id;
  }
  EXPECT_EQ(Catalog::builtin().find("nonexistent"), nullptr);
  EXPECT_THROW(builtin("nonexistent"), UnknownId);
}

TEST(Catalog, ParseGroupExamples) {
  EXPECT_EQ(parse_group("(1 2 3 4)\n(1 3)")->order(), 8u);
  EXPECT_EQ(parse_group("(1 2)(3 4)\n(1 3)(2 4)")->order(), 4u);
  EXPECT_EQ(parse_group("(1 2 3)\n(1 2)")->order(), 6u);
  EXPECT_FALSE(parse_group("(1 2 3)\n(1 2)")->prime().has_value());
  EXPECT_THROW(parse_group("(1 2 3 4 5 6 7 8)\n(1 2)", 1000), ClosureCapExceeded);
  EXPECT_THROW(parse_group("(1 2"), ParseError);
}

TEST(Catalog, ExtraspecialGroupsAreDistinguishedByExponent) {
  GroupPtr h = builtin("heisenberg3");
  GroupPtr e = builtin("extraspecial_exp_p2_3");
  EXPECT_EQ(h->order(), e->order());
  EXPECT_EQ(h->class_count(), e->class_count());
  EXPECT_EQ(sorted_degrees(h), sorted_degrees(e));
  EXPECT_EQ(h->exponent(), 3u);
  EXPECT_EQ(e->exponent(), 9u);
  EXPECT_EQ(builtin("heisenberg5")->exponent(), 5u);
  EXPECT_EQ(builtin("extraspecial_exp_p2_5")->exponent(), 25u);
}

TEST(Catalog, Wreath2IsDihedral8) {
  EXPECT_EQ(sorted_degrees(builtin("wreath2")), sorted_degrees(builtin("dihedral8")));
  EXPECT_EQ(builtin("wreath2")->exponent(), 4u);
}

TEST(Catalog, DirectProducts) {
  GroupPtr a = builtin("heisenberg3");
  GroupPtr b = builtin("cyclic3");
  auto gens = direct_product_generators(*a, *b);
  GroupPtr p = Group::closure(gens, a->degree() + b->degree());
  EXPECT_EQ(p->order(), 81u);
  EXPECT_EQ(p->class_count(), a->class_count() * b->class_count());
  EXPECT_EQ(builtin("heisenberg3_x_cyclic3")->class_count(), 33u);
}

TEST(Catalog, FromJson) {
  Catalog c = Catalog::from_json(R"json([
    {"id": "c6", "description": "cyclic of order 6", "generators": "(1 2 3 4 5 6)", "expected_order": 6},
    {"id": "c6xc6", "description": "product", "product_of": ["c6", "c6"], "expected_order": 36,
     "expected_classes": 36}
  ])json");
  ASSERT_EQ(c.entries().size(), 2u);
  EXPECT_EQ(c.group("c6xc6")->order(), 36u);
  EXPECT_FALSE(c.group("c6")->prime().has_value());

  EXPECT_THROW(Catalog::from_json("{"), ManifestError);
  EXPECT_THROW(Catalog::from_json(R"json([{"id": "x"}])json"), ManifestError);
  Catalog wrong = Catalog::from_json(
      R"json([{"id": "c4", "description": "d", "generators": "(1 2 3 4)", "expected_order": 5}])json");
  EXPECT_THROW(wrong.group("c4"), ManifestError);
  Catalog wrong_prime = Catalog::from_json(
      R"json([{"id": "c4", "description": "d", "generators": "(1 2 3 4)", "expected_order": 4, "prime": 3}])json");
  EXPECT_THROW(wrong_prime.group("c4"), ManifestError);
}

TEST(Catalog, MergeReplacesById) {
  Catalog c = Catalog::builtin();
  const std::size_t before = c.entries().size();
  c.merge(Catalog::from_json(R"json([
    {"id": "dihedral8", "description": "relabelled", "generators": "(1 3 2 4)\n(1 2)", "expected_order": 8,
     "prime": 2},
    {"id": "cyclic7", "description": "cyclic of order 7", "generators": "(1 2 3 4 5 6 7)", "expected_order": 7,
     "prime": 7}
  ])json"));
  EXPECT_EQ(c.entries().size(), before + 1);
  EXPECT_EQ(c.find("dihedral8")->description, "relabelled");
  EXPECT_EQ(c.group("cyclic7")->order(), 7u);
}

TEST(Catalog, LoadFile) {
  auto path = std::filesystem::temp_directory_path() / "charprod_catalog_test.json";
  {
    std::ofstream out(path);
    out << R"json([{"id": "klein", "description": "Klein four", "generators": "(1 2)(3 4)\n(1 3)(2 4)",
               "expected_order": 4, "expected_classes": 4, "prime": 2}])json";
  }
  Catalog c;
  c.load_file(path);
  EXPECT_EQ(c.group("klein")->order(), 4u);
  std::filesystem::remove(path);
  EXPECT_THROW(c.load_file(path), ManifestError);
}
