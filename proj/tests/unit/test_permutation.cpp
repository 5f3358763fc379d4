#include <gtest/gtest.h>

#include "charprod/error.hpp"
#include "charprod/permutation.hpp"

using namespace charprod;

TEST(Permutation, ParsesCycleNotation) {
  Permutation p = parse_permutation("(1 2 3)(4 5)");
  EXPECT_EQ(p.degree(), 5u);
  EXPECT_EQ(p[0], 1u);
  EXPECT_EQ(p[2], 0u);
  EXPECT_EQ(p[3], 4u);
  EXPECT_EQ(p.to_cycle_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(p.order(), 6u);
}

TEST(Permutation, IdentityPrintsAsEmptyCycle) {
  Permutation p = parse_permutation("()");
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.to_cycle_string(), "()");
  EXPECT_EQ(Permutation(4).to_cycle_string(), "()");
}

TEST(Permutation, ProductActsOnTheRight) {
  Permutation a = parse_permutation("(1 2)", 1, 3);
  Permutation b = parse_permutation("(2 3)", 1, 3);
  // apply a, then b: 1 -> 2 -> 3
  EXPECT_EQ((a * b).to_cycle_string(), "(1 3 2)");
  EXPECT_EQ((b * a).to_cycle_string(), "(1 2 3)");
}

TEST(Permutation, InversePowerAndOrder) {
  Permutation p = parse_permutation("(1 2 3 4)(5 6)");
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.pow(2).to_cycle_string(), "(1 3)(2 4)");
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_TRUE(p.pow(4).is_identity());
  EXPECT_EQ(p.order(), 4u);
}

TEST(Permutation, ExtendAndShift) {
  Permutation p = parse_permutation("(1 2)");
  EXPECT_EQ(p.extended(4).degree(), 4u);
  EXPECT_EQ(p.shifted(2, 4).to_cycle_string(), "(3 4)");
}

TEST(Permutation, DegreeMismatchThrows) {
  Permutation a = parse_permutation("(1 2)");
  Permutation b = parse_permutation("(1 2 3)");
  EXPECT_THROW(a * b, DegreeMismatch);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0}), std::invalid_argument);
}

TEST(Permutation, ParseErrorsCarryPosition) {
  try {
    parse_permutation("(1 2)(3");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 8u);
  }
  EXPECT_THROW(parse_permutation("(1 x)"), ParseError);
  EXPECT_THROW(parse_permutation("(0 1)"), ParseError);
  EXPECT_THROW(parse_permutation("(1 2 1)"), ParseError);
  EXPECT_THROW(parse_permutation("(1 2)(2 3)"), ParseError);
  EXPECT_THROW(parse_permutation(""), ParseError);
}

TEST(Permutation, GeneratorFileFormat) {
  GeneratorList list = parse_generators("# dihedral group\ndegree=6\n(1 2 3 4)\n\n(1 3)\n");
  EXPECT_EQ(list.degree, 6u);
  ASSERT_EQ(list.generators.size(), 2u);
  EXPECT_EQ(list.generators[0].degree(), 6u);
  EXPECT_EQ(list.generators[1].to_cycle_string(), "(1 3)");
}

TEST(Permutation, GeneratorsPadToCommonDegree) {
  GeneratorList list = parse_generators("(1 2)\n(3 4 5)");
  EXPECT_EQ(list.degree, 5u);
  EXPECT_EQ(list.generators[0].degree(), 5u);
}

TEST(Permutation, GeneratorErrorsReportTheLine) {
  try {
    parse_generators("(1 2)\n(3 4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_generators("degree=2\n(1 2 3)"), ParseError);
  EXPECT_THROW(parse_generators("degree=x\n(1 2)"), ParseError);
}

TEST(Permutation, HashAgreesWithEquality) {
  Permutation a = parse_permutation("(1 2 3)");
  Permutation b = parse_permutation("(2 3 1)");
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::hash<Permutation>{}(a), std::hash<Permutation>{}(b));
}
