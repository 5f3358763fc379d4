#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "charprod/catalog.hpp"
#include "charprod/character_table.hpp"
#include "charprod/charops.hpp"
#include "charprod/structure.hpp"
#include "charprod/subgroup_cache.hpp"

namespace charprod {

enum class Statement { A, B, C, Lemma, Bound, Fixtures };

/// Parses a comma-separated list such as "A,B,C,lemma,bound". Throws
/// std::invalid_argument on an unknown name. The result is in canonical
/// order without duplicates.
std::vector<Statement> parse_statements(std::string_view text);
std::string_view statement_name(Statement s);

enum class Status { Pass, Fail, HypothesisNotMet, Skipped };
std::string_view status_name(Status s);

struct CheckResult {
  std::string statement;
  nlohmann::json instance;
  Status status = Status::Pass;
  std::optional<nlohmann::json> witness;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t skipped = 0;
  Summary& operator+=(const Summary& o);
};

struct VerificationReport {
  std::string group_id;
  std::uint64_t order = 0;
  std::optional<std::uint32_t> prime;
  std::vector<CheckResult> checks;

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
};

/// Table, lattice, product decompositions and restriction data of one
/// group, computed once and shared by the checks. Immutable after
/// construction.
class GroupAnalysis {
 public:
  struct Options {
    bool products = true;
    bool restrictions = true;
    unsigned jobs = 1;
  };

  GroupAnalysis(GroupPtr group, SubgroupCache& cache, Options options);

  const GroupPtr& group() const noexcept { return group_; }
  const CharacterTable& table() const noexcept { return *table_; }
  const NormalLattice& lattice() const noexcept { return lattice_; }
  SubgroupCache& cache() const noexcept { return cache_; }
  std::optional<std::uint32_t> prime() const noexcept { return group_->prime(); }

  /// Decomposition of chi_i * chi_j.
  const Decomposition& product(std::size_t i, std::size_t j) const;
  /// Index of the complex conjugate of chi_i.
  std::size_t conjugate_index(std::size_t i) const { return conjugate_.at(i); }
  const Subgroup& center(std::size_t i) const { return centers_.at(i); }
  const Subgroup& vanishing(std::size_t i) const { return vanishing_.at(i); }

  /// The context of normals[n] and the matrix [theta_N, gamma], indexed
  /// [theta][gamma].
  const InducedContext& normal_context(std::size_t n) const { return *contexts_.at(n); }
  const std::vector<std::vector<std::int64_t>>& restriction(std::size_t n) const {
    return restriction_.at(n);
  }

 private:
  GroupPtr group_;
  SubgroupCache& cache_;
  TablePtr table_;
  NormalLattice lattice_;
  std::vector<std::size_t> conjugate_;
  std::vector<Subgroup> centers_;
  std::vector<Subgroup> vanishing_;
  std::vector<Decomposition> products_;  // upper triangle, row major
  std::vector<std::shared_ptr<const InducedContext>> contexts_;
  std::vector<std::vector<std::vector<std::int64_t>>> restriction_;
};

std::vector<CheckResult> check_theorem_A(const GroupAnalysis& a);
std::vector<CheckResult> check_theorem_B(const GroupAnalysis& a);
/// p-groups get pass/fail; other groups run in fixture mode and report raw
/// values with status hypothesis-not-met.
std::vector<CheckResult> check_theorem_C(const GroupAnalysis& a);
std::vector<CheckResult> check_lemma_counting(const GroupAnalysis& a);
std::vector<CheckResult> check_eta_bound(const GroupAnalysis& a);
/// eta(1_N^G) = p for index-p normals, and 1_G in chi * conj(chi).
std::vector<CheckResult> check_fixtures(const GroupAnalysis& a);

struct DescentStep {
  enum class Kind { Quotient, Clifford };
  Kind kind = Kind::Clifford;
  std::uint64_t group_order = 0;
  std::int64_t degree = 0;
  std::uint64_t kernel_order = 0;      // quotient steps
  std::uint64_t y_order = 0;           // Clifford steps from here on
  std::size_t iota = 0;                // index in Irr(Y)
  std::uint64_t stabilizer_order = 0;
  std::size_t correspondent = 0;       // index in Irr(G_iota)
  std::int64_t correspondent_degree = 0;
};

struct MonomialWitness {
  std::size_t chi = 0;
  std::vector<DescentStep> chain;
  Subgroup h;
  /// A linear character of the realization of h.
  ClassFunction alpha;
  /// Index of (alpha^2)^G in Irr(G).
  std::size_t induced_square = 0;
};

/// H <= G and alpha in Lin(H) with alpha^G = chi_index and (alpha^2)^G
/// irreducible, found by Clifford descent with backtracking and checked by
/// explicit induction. Throws NotAPGroup, HypothesisNotMet (p = 2 and
/// eta(chi^2) >= 2) or SearchExhausted.
MonomialWitness monomial_witness_search(const GroupPtr& g, std::size_t chi_index,
                                        SubgroupCache& cache);

/// All requested statements for one group, in canonical statement order.
VerificationReport verify_group(std::string id, const GroupPtr& g,
                                const std::vector<Statement>& statements, unsigned jobs = 1);

/// verify_group over catalog ids, in the order given.
std::vector<VerificationReport> run_suite(const Catalog& catalog, const std::vector<std::string>& ids,
                                          const std::vector<Statement>& statements,
                                          unsigned jobs = 1,
                                          std::size_t cap = kDefaultClosureCap);

}  // namespace charprod
