#include "charprod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "charprod/error.hpp"

namespace charprod {

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

template <class F>
std::vector<CheckResult> collect_rows(std::size_t rows, unsigned jobs, F&& row) {
  std::vector<std::vector<CheckResult>> parts(rows);
  parallel_for(rows, jobs, [&](std::size_t i) { parts[i] = row(i); });
  std::vector<CheckResult> out;
  for (auto& part : parts) {
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

std::uint32_t require_p(const GroupAnalysis& a) {
  if (!a.prime()) throw NotAPGroup("statement requires a group of prime power order");
  return *a.prime();
}

CheckResult make(std::string statement, nlohmann::json instance, Status status,
                 std::optional<nlohmann::json> witness = {}) {
  return {std::move(statement), std::move(instance), status, std::move(witness)};
}

nlohmann::json pair_instance(std::size_t i, std::size_t j) { return {{"chi", i}, {"psi", j}}; }

nlohmann::json constituents_json(const Decomposition& d) {
  auto out = nlohmann::json::array();
  for (auto [i, m] : d.constituents) out.push_back({i, m});
  return out;
}

std::size_t triangle_index(std::size_t k, std::size_t i, std::size_t j) {
  return i * k - i * (i - 1) / 2 + (j - i);
}

}  // namespace

std::vector<Statement> parse_statements(std::string_view text) {
  std::vector<Statement> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view name = text.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      Statement s;
      if (name == "A") s = Statement::A;
      else if (name == "B") s = Statement::B;
      else if (name == "C") s = Statement::C;
      else if (name == "lemma") s = Statement::Lemma;
      else if (name == "bound") s = Statement::Bound;
      else if (name == "fixtures") s = Statement::Fixtures;
      else throw std::invalid_argument("unknown statement '" + std::string(name) + "'");
      out.push_back(s);
    }
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view statement_name(Statement s) {
  switch (s) {
    case Statement::A: return "A";
    case Statement::B: return "B";
    case Statement::C: return "C";
    case Statement::Lemma: return "lemma";
    case Statement::Bound: return "bound";
    case Statement::Fixtures: return "fixtures";
  }
  return "?";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::HypothesisNotMet: return "hypothesis-not-met";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Summary& Summary::operator+=(const Summary& o) {
  pass += o.pass;
  fail += o.fail;
  hypothesis_not_met += o.hypothesis_not_met;
  skipped += o.skipped;
  return *this;
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::HypothesisNotMet: ++s.hypothesis_not_met; break;
      case Status::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

GroupAnalysis::GroupAnalysis(GroupPtr group, SubgroupCache& cache, Options options)
    : group_(std::move(group)), cache_(cache), table_(cache.table(group_)),
      lattice_(normal_lattice(*table_)) {
  const CharacterTable& t = *table_;
  const std::size_t k = t.size();
  for (std::size_t i = 0; i < k; ++i) {
    auto c = t.find(t[i].conj());
    if (!c) throw NotACharacter("conjugate of an irreducible is missing from the table");
    conjugate_.push_back(*c);
    centers_.push_back(center_of(t[i]));
    vanishing_.push_back(vanishing_off(t[i]));
  }
  if (options.products) {
    std::vector<std::vector<Decomposition>> rows(k);
    parallel_for(k, options.jobs, [&](std::size_t i) {
      for (std::size_t j = i; j < k; ++j) rows[i].push_back(decompose(charprod::product(t[i], t[j]), t));
    });
    for (auto& row : rows) {
      for (auto& d : row) products_.push_back(std::move(d));
    }
  }
  if (options.restrictions) {
    const std::size_t m = lattice_.normals.size();
    contexts_.resize(m);
    restriction_.resize(m);
    parallel_for(m, options.jobs, [&](std::size_t n) {
      auto ctx = cache_.context(lattice_.normals[n]);
      const CharacterTable& tn = ctx->table();
      const mpq_class inv(1, static_cast<unsigned long>(ctx->group()->order()));
      std::vector<std::vector<std::int64_t>> mat(k, std::vector<std::int64_t>(tn.size(), 0));
      for (std::size_t theta = 0; theta < k; ++theta) {
        ClassFunction res = restrict(t[theta], *ctx);
        ClassFunction rebuilt = ClassFunction::constant(ctx->group(), Cyclotomic(0));
        for (std::size_t gamma = 0; gamma < tn.size(); ++gamma) {
          Cyclotomic sum;
          const auto& w = tn.weighted_conjugate(gamma);
          for (ClassIndex c = 0; c < res.size(); ++c) sum += res[c] * w[c];
          auto v = sum.scaled(inv).as_integer();
          if (!v || *v < 0) throw IntegralityViolation("restriction multiplicity is not a count");
          mat[theta][gamma] = *v;
          if (*v != 0) rebuilt += tn[gamma].scaled(mpq_class(static_cast<long>(*v)));
        }
        if (!(rebuilt == res)) throw NotACharacter("restriction does not decompose exactly");
      }
      // Frobenius reciprocity against explicit induction.
      for (std::size_t gamma = 0; gamma < tn.size(); ++gamma) {
        ClassFunction expected = ClassFunction::constant(group_, Cyclotomic(0));
        for (std::size_t theta = 0; theta < k; ++theta) {
          if (mat[theta][gamma] != 0) expected += t[theta].scaled(mpq_class(static_cast<long>(mat[theta][gamma])));
        }
        if (!(induce(tn[gamma], *ctx) == expected)) {
          throw NotACharacter("induction disagrees with the restriction multiplicities");
        }
      }
      contexts_[n] = std::move(ctx);
      restriction_[n] = std::move(mat);
    });
  }
}

const Decomposition& GroupAnalysis::product(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (products_.empty()) throw std::logic_error("product decompositions were not computed");
  return products_.at(triangle_index(table_->size(), i, j));
}

std::vector<CheckResult> check_theorem_A(const GroupAnalysis& a) {
  const std::uint32_t p = require_p(a);
  const CharacterTable& t = a.table();
  const std::size_t k = t.size();
  return collect_rows(k, 1, [&](std::size_t i) {
    std::vector<CheckResult> row;
    for (std::size_t j = 0; j < k; ++j) {
      if (i > j) {
        row.push_back(make("A", pair_instance(i, j), Status::Skipped,
                           nlohmann::json{{"duplicate_of", pair_instance(j, i)}}));
        continue;
      }
      const Decomposition& d = a.product(i, j);
      if (d.eta() >= p) {
        row.push_back(make("A", pair_instance(i, j), Status::HypothesisNotMet,
                           nlohmann::json{{"eta", d.eta()}}));
        continue;
      }
      ClassFunction prod = product(t[i], t[j]);
      const Subgroup z = center_of(prod);
      const Subgroup v = vanishing_off(prod);
      const auto both = a.vanishing(i).mask() & a.vanishing(j).mask();
      std::optional<nlohmann::json> failure;
      for (auto [theta, m] : d.constituents) {
        if (z.mask() != a.center(theta).mask()) {
          failure = nlohmann::json{{"theta", theta}, {"condition", "Z(chi psi) = Z(theta)"},
                                   {"z_product", z.order()}, {"z_theta", a.center(theta).order()}};
        } else if (!a.vanishing(theta).is_subgroup_of(v)) {
          failure = nlohmann::json{{"theta", theta}, {"condition", "V(theta) <= V(chi psi)"},
                                   {"v_theta", a.vanishing(theta).order()}, {"v_product", v.order()}};
        } else if (!v.mask().is_subset_of(both)) {
          failure = nlohmann::json{{"theta", theta}, {"condition", "V(chi psi) <= V(chi) n V(psi)"},
                                   {"v_product", v.order()}};
        }
        if (failure) break;
      }
      if (failure) {
        (*failure)["constituents"] = constituents_json(d);
        row.push_back(make("A", pair_instance(i, j), Status::Fail, failure));
      } else {
        row.push_back(make("A", pair_instance(i, j), Status::Pass,
                           nlohmann::json{{"eta", d.eta()}, {"z_order", z.order()}, {"v_order", v.order()}}));
      }
    }
    return row;
  });
}

std::vector<CheckResult> check_theorem_B(const GroupAnalysis& a) {
  const std::uint32_t p = require_p(a);
  const CharacterTable& t = a.table();
  const std::size_t k = t.size();
  const auto& normals = a.lattice().normals;
  return collect_rows(k, 1, [&](std::size_t i) {
    std::vector<CheckResult> row;
    for (std::size_t j = 0; j < k; ++j) {
      if (i > j) {
        row.push_back(make("B", pair_instance(i, j), Status::Skipped,
                           nlohmann::json{{"duplicate_of", pair_instance(j, i)}}));
        continue;
      }
      const Decomposition& d = a.product(i, j);
      if (d.eta() >= p) {
        row.push_back(make("B", pair_instance(i, j), Status::HypothesisNotMet,
                           nlohmann::json{{"eta", d.eta()}}));
        continue;
      }
      std::size_t normals_used = 0;
      std::size_t gammas = 0;
      std::optional<nlohmann::json> failure;
      for (std::size_t n = 0; n < normals.size() && !failure; ++n) {
        const auto& mat = a.restriction(n);
        const std::size_t kn = mat.front().size();
        std::vector<std::size_t> alphas;
        for (std::size_t alpha = 0; alpha < kn; ++alpha) {
          bool only_chi = mat[i][alpha] != 0;
          for (std::size_t theta = 0; theta < k && only_chi; ++theta) {
            if (theta != i && mat[theta][alpha] != 0) only_chi = false;
          }
          if (only_chi) alphas.push_back(alpha);
        }
        if (alphas.empty()) continue;
        ++normals_used;
        for (std::size_t gamma = 0; gamma < kn && !failure; ++gamma) {
          std::int64_t over = 0;
          for (auto [theta, m] : d.constituents) over += m * mat[theta][gamma];
          if (over == 0) continue;
          ++gammas;
          std::vector<std::size_t> induced;
          for (std::size_t theta = 0; theta < k; ++theta) {
            if (mat[theta][gamma] != 0) induced.push_back(theta);
          }
          auto base = nlohmann::json{{"N", n}, {"N_order", normals[n].order()}, {"alpha", alphas.front()},
                                     {"gamma", gamma}, {"induced", induced}};
          for (std::size_t theta : induced) {
            if (!d.contains(theta)) {
              failure = base;
              (*failure)["condition"] = "constituents of gamma^G lie in chi psi";
            }
          }
          if (!failure && induced.size() != 1) {
            failure = base;
            (*failure)["condition"] = "eta(gamma^G) = 1";
          } else if (!failure && normals[n].index() == p && mat[induced.front()][gamma] != 1) {
            failure = base;
            (*failure)["condition"] = "gamma^G irreducible for |G:N| = p";
            (*failure)["multiplicity"] = mat[induced.front()][gamma];
          }
        }
      }
      if (failure) {
        row.push_back(make("B", pair_instance(i, j), Status::Fail, failure));
      } else {
        row.push_back(make("B", pair_instance(i, j), Status::Pass,
                           nlohmann::json{{"eta", d.eta()}, {"normals", normals_used}, {"gammas", gammas}}));
      }
    }
    return row;
  });
}

std::vector<CheckResult> check_theorem_C(const GroupAnalysis& a) {
  const CharacterTable& t = a.table();
  const std::size_t k = t.size();
  const auto p = a.prime();
  const auto linears = linear_character_indices(t);
  std::vector<CheckResult> c1, c2, c3;
  for (std::size_t i = 0; i < k; ++i) {
    const Decomposition& sq = a.product(i, i);
    const std::int64_t deg = t.degrees()[i];
    const nlohmann::json instance{{"chi", i}, {"degree", deg}};
    nlohmann::json lin_values = nlohmann::json::array();
    std::vector<std::size_t> hit;
    for (std::size_t l : linears) {
      lin_values.push_back({{"lambda", l}, {"value", sq.multiplicity(l)}});
      if (sq.multiplicity(l) != 0) hit.push_back(l);
    }
    bool has_degree = std::any_of(sq.constituents.begin(), sq.constituents.end(),
                                  [&](const auto& c) { return t.degrees()[c.first] == deg; });
    if (!p) {
      const nlohmann::json reason = "not a p-group";
      c1.push_back(make("C(i)", instance, Status::HypothesisNotMet,
                        nlohmann::json{{"reason", reason}, {"value", sq.multiplicity(i)}}));
      c2.push_back(make("C(ii)", instance, Status::HypothesisNotMet,
                        nlohmann::json{{"reason", reason}, {"values", lin_values}}));
      c3.push_back(make("C(iii)", instance, Status::HypothesisNotMet,
                        nlohmann::json{{"reason", reason}, {"eta", sq.eta()},
                                       {"constituent_of_degree", has_degree}}));
      continue;
    }
    if (i == 0) {
      c1.push_back(make("C(i)", instance, Status::HypothesisNotMet,
                        nlohmann::json{{"reason", "principal character"}}));
    } else {
      auto v = sq.multiplicity(i);
      c1.push_back(make("C(i)", instance, v == 0 ? Status::Pass : Status::Fail,
                        nlohmann::json{{"value", v}}));
    }
    if (*p == 2) {
      c2.push_back(make("C(ii)", instance, Status::HypothesisNotMet,
                        nlohmann::json{{"reason", "p = 2"}, {"values", lin_values}}));
    } else if (deg == 1) {
      c2.push_back(make("C(ii)", instance, Status::HypothesisNotMet,
                        nlohmann::json{{"reason", "linear character"}}));
    } else {
      c2.push_back(make("C(ii)", instance, hit.empty() ? Status::Pass : Status::Fail,
                        nlohmann::json{{"nonzero", hit}}));
    }
    if (*p == 2 && sq.eta() >= 2) {
      c3.push_back(make("C(iii)", instance, Status::HypothesisNotMet,
                        nlohmann::json{{"reason", "p = 2 and eta(chi^2) >= p"}, {"eta", sq.eta()}}));
      continue;
    }
    nlohmann::json w{{"eta", sq.eta()}, {"constituent_of_degree", has_degree}};
    Status status = has_degree ? Status::Pass : Status::Fail;
    try {
      MonomialWitness m = monomial_witness_search(a.group(), i, a.cache());
      w["h_order"] = m.h.order();
      w["h_index"] = m.h.index();
      w["induced_square"] = m.induced_square;
      w["steps"] = m.chain.size();
    } catch (const Error& e) {
      status = Status::Fail;
      w["error"] = e.what();
    }
    c3.push_back(make("C(iii)", instance, status, w));
  }
  for (auto* part : {&c2, &c3}) {
    for (auto& r : *part) c1.push_back(std::move(r));
  }
  return c1;
}

std::vector<CheckResult> check_lemma_counting(const GroupAnalysis& a) {
  const std::uint32_t p = require_p(a);
  std::vector<CheckResult> out;
  for (std::size_t n = 0; n < a.lattice().normals.size(); ++n) {
    const auto& mat = a.restriction(n);
    for (std::size_t phi = 0; phi < mat.front().size(); ++phi) {
      std::size_t count = 0;
      for (const auto& row : mat) count += row[phi] != 0 ? 1 : 0;
      out.push_back(make("lemma", nlohmann::json{{"N", n}, {"phi", phi}},
                         count == 1 || count >= p ? Status::Pass : Status::Fail,
                         nlohmann::json{{"count", count}, {"N_order", a.lattice().normals[n].order()}}));
    }
  }
  return out;
}

std::vector<CheckResult> check_eta_bound(const GroupAnalysis& a) {
  const std::uint32_t p = require_p(a);
  const CharacterTable& t = a.table();
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::int64_t deg = t.degrees()[i];
    const nlohmann::json instance{{"chi", i}, {"degree", deg}};
    std::int64_t n = 0;
    while (deg % p == 0) {
      deg /= p;
      ++n;
    }
    if (deg != 1) {
      out.push_back(make("bound", instance, Status::Fail,
                         nlohmann::json{{"error", "degree is not a power of p"}}));
      continue;
    }
    if (n == 0) {
      out.push_back(make("bound", instance, Status::Skipped, nlohmann::json{{"reason", "linear character"}}));
      continue;
    }
    const auto eta = static_cast<std::int64_t>(a.product(i, a.conjugate_index(i)).eta());
    const std::int64_t bound = 2 * n * (static_cast<std::int64_t>(p) - 1) + 1;
    out.push_back(make("bound", instance, eta >= bound ? Status::Pass : Status::Fail,
                       nlohmann::json{{"eta", eta}, {"bound", bound}, {"n", n}}));
  }
  return out;
}

std::vector<CheckResult> check_fixtures(const GroupAnalysis& a) {
  const CharacterTable& t = a.table();
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Decomposition& d = a.product(i, a.conjugate_index(i));
    out.push_back(make("principal in chi chibar", nlohmann::json{{"chi", i}},
                       d.contains(0) ? Status::Pass : Status::Fail,
                       nlohmann::json{{"eta", d.eta()}, {"multiplicity", d.multiplicity(0)}}));
  }
  if (auto p = a.prime()) {
    const auto& normals = a.lattice().normals;
    for (std::size_t n = 0; n < normals.size(); ++n) {
      if (normals[n].index() != *p) continue;
      auto ctx = a.cache().context(normals[n]);
      Decomposition d = decompose(induce(ClassFunction::principal(ctx->group()), *ctx), t);
      out.push_back(make("eta of induced principal", nlohmann::json{{"N", n}},
                         d.eta() == *p ? Status::Pass : Status::Fail,
                         nlohmann::json{{"eta", d.eta()}, {"constituents", constituents_json(d)}}));
    }
  }
  return out;
}

namespace {

struct Found {
  Subgroup h;
  ClassFunction alpha;  // on the cached realization of h
};

class Descent {
 public:
  explicit Descent(SubgroupCache& cache) : cache_(cache) {}

  std::optional<Found> run(const GroupPtr& g, const ClassFunction& chi, std::vector<DescentStep>& chain);
  std::optional<std::size_t> induced_square(const GroupPtr& g, const ClassFunction& chi, const Found& f);

 private:
  std::optional<Found> through_quotient(const GroupPtr& g, const ClassFunction& chi, const Subgroup& kernel,
                                        std::vector<DescentStep>& chain);
  std::optional<Found> through_clifford(const GroupPtr& g, const ClassFunction& chi,
                                        std::vector<DescentStep>& chain);

  SubgroupCache& cache_;
};

std::optional<std::size_t> Descent::induced_square(const GroupPtr& g, const ClassFunction& chi,
                                                   const Found& f) {
  auto ctx = cache_.context(f.h);
  if (f.alpha.group() != ctx->group() || f.alpha.degree() != 1) return std::nullopt;
  if (!(induce(f.alpha, *ctx) == chi)) return std::nullopt;
  Decomposition d = decompose(induce(product(f.alpha, f.alpha), *ctx), *cache_.table(g));
  if (d.eta() != 1 || d.constituents.front().second != 1) return std::nullopt;
  return d.constituents.front().first;
}

std::optional<Found> Descent::run(const GroupPtr& g, const ClassFunction& chi,
                                  std::vector<DescentStep>& chain) {
  if (chi.degree() == 1) {
    Subgroup h = whole_group(g);
    auto ctx = cache_.context(h);
    return Found{h, restrict(chi, *ctx)};
  }
  Subgroup kernel = kernel_of(chi);
  if (!kernel.is_trivial()) return through_quotient(g, chi, kernel, chain);
  return through_clifford(g, chi, chain);
}

std::optional<Found> Descent::through_quotient(const GroupPtr& g, const ClassFunction& chi,
                                               const Subgroup& kernel, std::vector<DescentStep>& chain) {
  QuotientMap q = quotient(g, kernel);
  DescentStep step;
  step.kind = DescentStep::Kind::Quotient;
  step.group_order = g->order();
  step.degree = *chi.degree();
  step.kernel_order = kernel.order();
  chain.push_back(step);
  auto sub = run(q.quotient(), q.deflate(chi), chain);
  if (sub) {
    boost::dynamic_bitset<> mask(g->order());
    for (ElementIndex x = 0; x < g->order(); ++x) {
      if (sub->h.contains(q.project(x))) mask.set(x);
    }
    auto h = subgroup_from_mask(g, mask);
    if (!h) throw NotASubgroup("preimage of a subgroup is not closed");
    auto ctx = cache_.context(*h);
    auto bar = cache_.context(sub->h);
    std::vector<Cyclotomic> values;
    for (const auto& cls : ctx->group()->classes()) {
      ElementIndex image = *bar->from_parent(q.project(ctx->to_parent(cls.representative)));
      values.push_back(sub->alpha.at_element(image));
    }
    Found f{*h, ClassFunction(ctx->group(), std::move(values))};
    if (induced_square(g, chi, f)) return f;
  }
  chain.pop_back();
  return std::nullopt;
}

std::optional<Found> Descent::through_clifford(const GroupPtr& g, const ClassFunction& chi,
                                               std::vector<DescentStep>& chain) {
  const std::int64_t deg = *chi.degree();
  const NormalLattice lattice = normal_lattice(*cache_.table(g));
  const Subgroup z = center_of(chi);
  auto z_ctx = cache_.context(z);
  const ClassFunction zeta = restrict(chi, *z_ctx).scaled(mpq_class(1, static_cast<long>(deg)));
  for (const Subgroup& y : chief_factor_above(lattice, z)) {
    auto y_ctx = cache_.context(y);
    auto z_in_y = cache_.context(transfer(z, y_ctx->group()));
    const ClassFunction chi_y = restrict(chi, *y_ctx);
    const CharacterTable& ty = y_ctx->table();
    for (std::size_t iota = 0; iota < ty.size(); ++iota) {
      if (ty.degrees()[iota] != 1) continue;
      if (!(restrict(ty[iota], *z_in_y) == zeta)) continue;
      if (character_inner_product(chi_y, ty[iota]) == 0) continue;
      CharacterOrbit orbit = stabilizer_and_orbit(ty[iota], *y_ctx);
      if (orbit.stabilizer.is_whole()) continue;
      auto stab_ctx = cache_.context(orbit.stabilizer);
      std::size_t corr = clifford_correspondent(chi, ty[iota], *y_ctx, *stab_ctx, cache_);
      DescentStep step;
      step.group_order = g->order();
      step.degree = deg;
      step.y_order = y.order();
      step.iota = iota;
      step.stabilizer_order = orbit.stabilizer.order();
      step.correspondent = corr;
      step.correspondent_degree = stab_ctx->table().degrees()[corr];
      if (step.correspondent_degree * static_cast<std::int64_t>(orbit.stabilizer.index()) != deg) {
        throw NoCorrespondent("correspondent degree times index differs from the degree");
      }
      chain.push_back(step);
      auto sub = run(stab_ctx->group(), stab_ctx->table()[corr], chain);
      if (sub) {
        Found f{transfer(sub->h, g), sub->alpha};
        if (induced_square(g, chi, f)) return f;
      }
      chain.pop_back();
    }
  }
  return std::nullopt;
}

}  // namespace

MonomialWitness monomial_witness_search(const GroupPtr& g, std::size_t chi_index, SubgroupCache& cache) {
  auto p = g->prime();
  if (!p && g->order() != 1) throw NotAPGroup("monomial witness search needs a p-group");
  TablePtr t = cache.table(g);
  if (chi_index >= t->size()) throw InvalidIndex("character index out of range");
  const ClassFunction& chi = (*t)[chi_index];
  if (p && *p == 2) {
    Decomposition sq = decompose(product(chi, chi), *t);
    if (sq.eta() >= 2) {
      throw HypothesisNotMet("p = 2 and chi^2 has " + std::to_string(sq.eta()) + " constituents");
    }
  }
  Descent descent(cache);
  std::vector<DescentStep> chain;
  auto found = descent.run(g, chi, chain);
  if (!found) throw SearchExhausted("every descent branch failed for character " + std::to_string(chi_index));
  auto square = descent.induced_square(g, chi, *found);
  if (!square) throw SearchExhausted("descent result fails the induction check");
  return MonomialWitness{chi_index, std::move(chain), std::move(found->h), std::move(found->alpha), *square};
}

VerificationReport verify_group(std::string id, const GroupPtr& g, const std::vector<Statement>& statements,
                                unsigned jobs) {
  VerificationReport report;
  report.group_id = std::move(id);
  report.order = g->order();
  report.prime = g->prime();
  if (statements.empty()) return report;

  const bool p_group = g->prime().has_value();
  auto wants = [&](Statement s) { return std::find(statements.begin(), statements.end(), s) != statements.end(); };
  SubgroupCache cache;
  GroupAnalysis::Options options;
  options.jobs = jobs;
  options.restrictions = p_group && (wants(Statement::B) || wants(Statement::Lemma));
  GroupAnalysis a(g, cache, options);

  std::vector<std::vector<CheckResult>> parts(statements.size());
  parallel_for(statements.size(), jobs, [&](std::size_t s) {
    const Statement st = statements[s];
    const bool needs_p = st == Statement::A || st == Statement::B || st == Statement::Lemma ||
                         st == Statement::Bound;
    if (needs_p && !p_group) {
      parts[s].push_back(make(std::string(statement_name(st)), nlohmann::json::object(), Status::Skipped,
                              nlohmann::json{{"reason", "not a p-group"}}));
      return;
    }
    switch (st) {
      case Statement::A: parts[s] = check_theorem_A(a); break;
      case Statement::B: parts[s] = check_theorem_B(a); break;
      case Statement::C: parts[s] = check_theorem_C(a); break;
      case Statement::Lemma: parts[s] = check_lemma_counting(a); break;
      case Statement::Bound: parts[s] = check_eta_bound(a); break;
      case Statement::Fixtures: parts[s] = check_fixtures(a); break;
    }
  });
  for (auto& part : parts) {
    for (auto& r : part) report.checks.push_back(std::move(r));
  }
  return report;
}

std::vector<VerificationReport> run_suite(const Catalog& catalog, const std::vector<std::string>& ids,
                                          const std::vector<Statement>& statements, unsigned jobs,
                                          std::size_t cap) {
  std::vector<VerificationReport> out;
  for (const auto& id : ids) out.push_back(verify_group(id, catalog.group(id, cap), statements, jobs));
  return out;
}

}  // namespace charprod
