#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "charprod/catalog.hpp"
#include "charprod/charops.hpp"
#include "charprod/error.hpp"
#include "charprod/structure.hpp"
#include "charprod/subgroup_cache.hpp"
#include "charprod/verify.hpp"
#include "oracles.hpp"

using namespace charprod;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void fail(const std::string& what) {
    if (outcome_.ok) outcome_.detail = what;
    outcome_.ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void note(const std::string& what) {
    if (outcome_.ok) outcome_.detail = what;
  }
  Outcome take() { return std::move(outcome_); }

 private:
  Outcome outcome_;
};

std::vector<std::string> catalog_ids(bool p_groups_only, bool odd_only = false) {
  std::vector<std::string> out;
  for (const auto& e : Catalog::builtin().entries()) {
    if (p_groups_only && !e.prime) continue;
    if (odd_only && (!e.prime || *e.prime == 2)) continue;
    out.push_back(e.id);
  }
  return out;
}

std::size_t first_of_degree(const CharacterTable& t, std::int64_t d) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degrees()[i] == d) return i;
  }
  return t.size();
}

void sl23_fixture(Checker& c) {
  GroupPtr g = builtin("sl23");
  VerificationReport r = verify_group("sl23", g, {Statement::C});
  CharacterTable t = dixon_table(g);
  const std::size_t chi = first_of_degree(t, 3);
  c.expect(chi < t.size(), "no irreducible of degree 3");
  if (chi == t.size()) return;
  c.expect(inner_product(product(t[chi], t[chi]), t[chi]) == 2, "[chi^2, chi] != 2");
  bool reported = false;
  for (const auto& check : r.checks) {
    if (check.statement == "C(i)" && check.instance["chi"] == chi) {
      reported = (*check.witness)["value"] == 2;
    }
  }
  c.expect(reported, "report does not carry [chi^2, chi] = 2");
  c.note("chi(1) = 3, [chi^2, chi] = 2");
}

void dihedral8_fixture(Checker& c) {
  GroupPtr g = builtin("dihedral8");
  CharacterTable t = dixon_table(g);
  const std::size_t chi = first_of_degree(t, 2);
  Decomposition d = decompose(product(t[chi], t[chi]), t);
  auto linears = linear_character_indices(t);
  c.expect(linears.size() == 4, "expected four linear characters");
  c.expect(d.eta() == 4, "eta(chi^2) != 4");
  std::vector<std::size_t> got;
  for (auto [i, m] : d.constituents) {
    c.expect(m == 1, "multiplicity other than 1");
    got.push_back(i);
  }
  c.expect(got == linears, "constituents are not the linear characters");
  c.note("chi^2 = sum of the 4 linear characters, eta = 4");
}

void induced_principal(Checker& c) {
  std::size_t count = 0;
  for (const auto& id : catalog_ids(true)) {
    GroupPtr g = builtin(id);
    SubgroupCache cache;
    TablePtr t = cache.table(g);
    NormalLattice l = normal_lattice(*t);
    const std::uint32_t p = *g->prime();
    for (const auto& n : normals_of_index(l, p)) {
      auto ctx = cache.context(n);
      Decomposition d = decompose(induce(ClassFunction::principal(ctx->group()), *ctx), *t);
      c.expect(d.eta() == p, id + ": eta(1_N^G) = " + std::to_string(d.eta()));
      ++count;
    }
  }
  c.note(std::to_string(count) + " index-p normal subgroups");
}

void theorem_suites(Checker& c) {
  auto reports = run_suite(Catalog::builtin(), catalog_ids(false), parse_statements("A,B,C,lemma,bound"), 1);
  Summary total;
  for (const auto& r : reports) {
    Summary s = r.summary();
    if (s.fail != 0) c.fail(r.group_id + ": " + std::to_string(s.fail) + " failing entries");
    total += s;
  }
  std::ostringstream os;
  os << reports.size() << " groups, pass " << total.pass << ", fail " << total.fail << ", hypothesis-not-met "
     << total.hypothesis_not_met << ", skipped " << total.skipped;
  c.note(os.str());
}

void eta_bound(Checker& c) {
  std::size_t count = 0;
  for (const auto& id : catalog_ids(true)) {
    GroupPtr g = builtin(id);
    CharacterTable t = dixon_table(g);
    const std::int64_t p = *g->prime();
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::int64_t d = t.degrees()[i];
      std::int64_t n = 0;
      while (d % p == 0) {
        d /= p;
        ++n;
      }
      c.expect(d == 1, id + ": degree is not a power of p");
      if (n == 0) continue;
      const std::size_t eta = decompose(product(t[i], t[i].conj()), t).eta();
      c.expect(static_cast<std::int64_t>(eta) >= 2 * n * (p - 1) + 1,
               id + ": eta(chi chibar) = " + std::to_string(eta) + " below the bound");
      ++count;
    }
  }
  c.note(std::to_string(count) + " nonlinear characters");
}

void monomial_witnesses(Checker& c) {
  std::size_t count = 0;
  for (const auto& id : catalog_ids(true, true)) {
    GroupPtr g = builtin(id);
    SubgroupCache cache;
    TablePtr t = cache.table(g);
    for (std::size_t i = 0; i < t->size(); ++i) {
      try {
        MonomialWitness w = monomial_witness_search(g, i, cache);
        auto ctx = cache.context(w.h);
        c.expect(w.alpha.degree() == 1, id + ": alpha is not linear");
        c.expect(induce_by_sum(w.alpha, *ctx) == (*t)[i], id + ": alpha^G != chi");
        ClassFunction sq = induce_by_sum(product(w.alpha, w.alpha), *ctx);
        c.expect(character_inner_product(sq, sq) == 1, id + ": (alpha^2)^G is reducible");
        ++count;
      } catch (const Error& e) {
        c.fail(id + " chi " + std::to_string(i) + ": " + e.what());
      }
    }
  }
  c.note(std::to_string(count) + " characters");
}

void table_properties(Checker& c) {
  std::mt19937_64 rng(20240601);
  std::size_t pairs = 0;
  for (const auto& id : catalog_ids(false)) {
    GroupPtr g = builtin(id);
    SubgroupCache cache;
    TablePtr t = cache.table(g);
    c.expect(verify_orthogonality(*t), id + ": orthogonality");
    std::int64_t sum = 0;
    for (auto d : t->degrees()) sum += d * d;
    c.expect(sum == static_cast<std::int64_t>(g->order()), id + ": sum of squared degrees");
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g->order() - 1));
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<ElementIndex> seed{pick(rng)};
      if (trial % 3 == 2) seed.push_back(pick(rng));
      auto ctx = cache.context(subgroup_generated(g, seed));
      const CharacterTable& th = ctx->table();
      std::uniform_int_distribution<std::size_t> pick_f(0, th.size() - 1);
      const ClassFunction& f = th[pick_f(rng)];
      ClassFunction ind = induce(f, *ctx);
      for (std::size_t x = 0; x < t->size(); ++x) {
        if (inner_product(ind, (*t)[x]) != inner_product(f, restrict((*t)[x], *ctx))) {
          c.fail(id + ": Frobenius reciprocity");
        }
      }
      ++pairs;
    }
  }
  c.note(std::to_string(pairs) + " (subgroup, character) pairs");
}

void oracle_equivalence(Checker& c) {
  std::size_t lattices = 0;
  std::size_t tables = 0;
  for (const auto& e : Catalog::builtin().entries()) {
    if (e.expected_order > 64) continue;
    GroupPtr g = builtin(e.id);
    CharacterTable t = dixon_table(g);
    oracle::Masks engine;
    for (const auto& n : normal_lattice(t).normals) engine.insert(n.mask());
    c.expect(engine == oracle::normal_subgroups_exhaustive(g), e.id + ": normal lattice");
    ++lattices;
    if (e.expected_order > 24) continue;
    auto brute = oracle::irreducibles(g);
    bool same = brute.size() == t.size();
    for (const auto& chi : brute) same = same && t.find(chi).has_value();
    c.expect(same, e.id + ": character table");
    ++tables;
  }
  c.note(std::to_string(lattices) + " lattices, " + std::to_string(tables) + " tables");
}

struct Criterion {
  int number;
  std::string name;
  std::function<void(Checker&)> run;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "SL(2,3) degree-3 character has [chi^2, chi] = 2", sl23_fixture, 5.0},
      {2, "D8 degree-2 character squares to the sum of the linear characters", dihedral8_fixture, 1.0},
      {3, "eta(1_N^G) = p for every index-p normal subgroup", induced_principal, 0.0},
      {4, "statements A, B, C, lemma and bound over the catalog have no failures", theorem_suites, 300.0},
      {5, "eta(chi chibar) >= 2n(p-1)+1 for chi(1) = p^n", eta_bound, 0.0},
      {6, "monomial witnesses for every character of odd-order p-groups", monomial_witnesses, 0.0},
      {7, "orthogonality, degree sum and Frobenius reciprocity", table_properties, 0.0},
      {8, "normal lattices and small tables agree with brute force", oracle_equivalence, 0.0},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(checker);
    } catch (const std::exception& e) {
      checker.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && seconds >= cr.limit_seconds) {
      checker.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
    }
    Outcome o = checker.take();
    if (!o.ok) ++failures;
    std::printf("[%s] %d. %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", cr.number, cr.name.c_str(), seconds,
                o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
