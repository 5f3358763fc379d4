#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "charprod/catalog.hpp"
#include "charprod/error.hpp"
#include "charprod/render.hpp"
#include "charprod/verify.hpp"

using namespace charprod;

namespace {

std::size_t first_of_degree(const CharacterTable& t, std::int64_t d) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degrees()[i] == d) return i;
  }
  throw std::logic_error("no character of that degree");
}

const std::vector<Statement> kAll = parse_statements("A,B,C,lemma,bound,fixtures");

std::map<std::pair<std::string, Status>, std::size_t> status_histogram(const VerificationReport& r) {
  std::map<std::pair<std::string, Status>, std::size_t> out;
  for (const auto& c : r.checks) ++out[{c.statement, c.status}];
  return out;
}

}  // namespace

TEST(Verify, ParseStatements) {
  EXPECT_EQ(parse_statements("bound,A,A,C"), (std::vector<Statement>{Statement::A, Statement::C, Statement::Bound}));
  EXPECT_EQ(kAll.size(), 6u);
  EXPECT_TRUE(parse_statements("").empty());
  EXPECT_THROW(parse_statements("A,D"), std::invalid_argument);
  EXPECT_EQ(statement_name(Statement::Lemma), "lemma");
  EXPECT_EQ(status_name(Status::HypothesisNotMet), "hypothesis-not-met");
}

TEST(Verify, EmptyStatementListGivesEmptyReport) {
  VerificationReport r = verify_group("dihedral8", builtin("dihedral8"), {});
  EXPECT_TRUE(r.checks.empty());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.order, 8u);
}

TEST(Verify, PGroupsHaveNoFailures) {
  for (const char* id : {"dihedral8", "quaternion8", "heisenberg3", "extraspecial_exp_p2_3", "wreath3",
                         "modular16", "semidihedral16"}) {
    VerificationReport r = verify_group(id, builtin(id), kAll);
    Summary s = r.summary();
    EXPECT_EQ(s.fail, 0u) << id << '\n' << render_report_text(r);
    EXPECT_GT(s.pass, 0u) << id;
  }
}

TEST(Verify, EveryPairAppearsOncePerStatement) {
  GroupPtr g = builtin("heisenberg3");
  VerificationReport r = verify_group("heisenberg3", g, parse_statements("A,B"));
  const std::size_t k = g->class_count();
  for (const char* st : {"A", "B"}) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& c : r.checks) {
      if (c.statement != st) continue;
      ++seen[{c.instance["chi"].get<std::size_t>(), c.instance["psi"].get<std::size_t>()}];
      if (c.status == Status::Fail) EXPECT_TRUE(c.witness.has_value());
    }
    EXPECT_EQ(seen.size(), k * k) << st;
    for (const auto& [pair, n] : seen) EXPECT_EQ(n, 1u);
  }
}

TEST(Verify, Dihedral8Fixtures) {
  VerificationReport r = verify_group("dihedral8", builtin("dihedral8"), parse_statements("C,fixtures"));
  std::size_t principal_hits = 0;
  std::size_t index_p = 0;
  for (const auto& c : r.checks) {
    if (c.statement == "eta of induced principal") {
      ++index_p;
      EXPECT_EQ(c.status, Status::Pass);
      EXPECT_EQ((*c.witness)["eta"], 2);
    }
    if (c.statement == "principal in chi chibar") {
      ++principal_hits;
      EXPECT_EQ(c.status, Status::Pass);
    }
    if (c.statement == "C(iii)" && c.instance["degree"] == 2) {
      EXPECT_EQ(c.status, Status::HypothesisNotMet);
      EXPECT_EQ((*c.witness)["eta"], 4);
    }
  }
  EXPECT_EQ(index_p, 3u);
  EXPECT_EQ(principal_hits, 5u);
}

TEST(Verify, SL23RunsInFixtureMode) {
  GroupPtr g = builtin("sl23");
  VerificationReport r = verify_group("sl23", g, kAll);
  EXPECT_FALSE(r.prime.has_value());
  CharacterTable t = dixon_table(g);
  const std::size_t chi = first_of_degree(t, 3);
  bool seen = false;
  for (const auto& c : r.checks) {
    if (c.statement == "A" || c.statement == "B" || c.statement == "lemma" || c.statement == "bound") {
      EXPECT_EQ(c.status, Status::Skipped);
    }
    if (c.statement == "C(i)") {
      EXPECT_EQ(c.status, Status::HypothesisNotMet);
      if (c.instance["chi"] == chi) {
        EXPECT_EQ((*c.witness)["value"], 2);
        seen = true;
      }
    }
  }
  EXPECT_TRUE(seen);
  EXPECT_EQ(r.summary().fail, 0u);
}

TEST(Verify, TrivialGroupIsNotAPGroup) {
  VerificationReport r = verify_group("trivial", builtin("trivial"), kAll);
  EXPECT_EQ(r.summary().fail, 0u);
  EXPECT_EQ(r.summary().pass + r.summary().hypothesis_not_met + r.summary().skipped, r.checks.size());
}

TEST(Verify, JsonIsIndependentOfJobCount) {
  GroupPtr g = builtin("wreath3");
  auto a = render_report_json(verify_group("wreath3", g, kAll, 1)).dump();
  auto b = render_report_json(verify_group("wreath3", g, kAll, 3)).dump();
  EXPECT_EQ(a, b);
}

TEST(Verify, GeneratorOrderDoesNotChangeOutcomes) {
  GroupPtr a = parse_group("(1 4 7)(2 5 8)(3 6 9)\n(4 5 6)(7 9 8)");
  GroupPtr b = parse_group("(4 5 6)(7 9 8)\n(1 4 7)(2 5 8)(3 6 9)");
  EXPECT_EQ(status_histogram(verify_group("a", a, kAll)), status_histogram(verify_group("b", b, kAll)));
}

TEST(Verify, MonomialWitnesses) {
  SubgroupCache cache;
  for (const char* id : {"heisenberg3", "extraspecial_exp_p2_3", "wreath3", "heisenberg5"}) {
    GroupPtr g = builtin(id);
    TablePtr t = cache.table(g);
    for (std::size_t i = 0; i < t->size(); ++i) {
      MonomialWitness w = monomial_witness_search(g, i, cache);
      auto ctx = cache.context(w.h);
      EXPECT_EQ(*w.alpha.degree(), 1);
      EXPECT_EQ(w.alpha.group(), ctx->group());
      EXPECT_EQ(induce_by_sum(w.alpha, *ctx), (*t)[i]) << id << ' ' << i;
      ClassFunction sq = induce_by_sum(product(w.alpha, w.alpha), *ctx);
      EXPECT_EQ(character_inner_product(sq, sq), 1);
      EXPECT_EQ(sq, (*t)[w.induced_square]);
      EXPECT_EQ(w.h.index(), static_cast<std::size_t>(t->degrees()[i]));
    }
  }
}

TEST(Verify, LinearCharacterHasTrivialWitness) {
  SubgroupCache cache;
  GroupPtr g = builtin("heisenberg3");
  MonomialWitness w = monomial_witness_search(g, 1, cache);
  EXPECT_TRUE(w.h.is_whole());
  EXPECT_TRUE(w.chain.empty());
}

TEST(Verify, WitnessErrors) {
  SubgroupCache cache;
  GroupPtr q8 = builtin("quaternion8");
  CharacterTable t = dixon_table(q8);
  EXPECT_THROW(monomial_witness_search(q8, first_of_degree(t, 2), cache), HypothesisNotMet);
  EXPECT_THROW(monomial_witness_search(builtin("sl23"), 0, cache), NotAPGroup);
  EXPECT_THROW(monomial_witness_search(q8, 99, cache), InvalidIndex);
}

TEST(Verify, RunSuiteKeepsOrder) {
  auto reports = run_suite(Catalog::builtin(), {"cyclic3", "dihedral8"}, parse_statements("A"));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].group_id, "cyclic3");
  EXPECT_EQ(reports[1].group_id, "dihedral8");
  EXPECT_THROW(run_suite(Catalog::builtin(), {"missing"}, parse_statements("A")), UnknownId);
}

TEST(Verify, RenderedReportShape) {
  auto j = render_report_json(verify_group("cyclic3", builtin("cyclic3"), parse_statements("A,C")));
  EXPECT_EQ(j["group"]["id"], "cyclic3");
  EXPECT_EQ(j["group"]["order"], 3);
  EXPECT_EQ(j["group"]["p"], 3);
  EXPECT_EQ(j["checks"].size(), 9u + 9u);
  EXPECT_EQ(j["summary"]["fail"], 0);
}
