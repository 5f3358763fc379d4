#include "charprod/structure.hpp"

#include <algorithm>
#include <set>

#include "charprod/charops.hpp"
#include "charprod/error.hpp"

namespace charprod {

namespace {

bool lattice_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

}  // namespace

std::optional<std::size_t> NormalLattice::find(const Subgroup& s) const {
  auto it = std::lower_bound(normals.begin(), normals.end(), s, lattice_less);
  if (it == normals.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - normals.begin());
}

std::vector<std::size_t> NormalLattice::covers(std::size_t i) const {
  std::vector<std::size_t> above;
  for (auto [a, b] : inclusion) {
    if (a == i) above.push_back(b);
  }
  std::vector<std::size_t> out;
  for (std::size_t b : above) {
    bool minimal = std::none_of(above.begin(), above.end(), [&](std::size_t c) {
      return c != b && normals[c].is_subgroup_of(normals[b]);
    });
    if (minimal) out.push_back(b);
  }
  return out;
}

NormalLattice normal_lattice(const CharacterTable& t) {
  const GroupPtr& g = t.group();
  std::set<boost::dynamic_bitset<>> masks;
  for (const auto& chi : t.irreducibles()) masks.insert(kernel_of(chi).mask());
  boost::dynamic_bitset<> all(g->order());
  all.set();
  masks.insert(all);
  std::vector<boost::dynamic_bitset<>> frontier(masks.begin(), masks.end());
  while (!frontier.empty()) {
    std::vector<boost::dynamic_bitset<>> fresh;
    std::vector<boost::dynamic_bitset<>> current(masks.begin(), masks.end());
    for (const auto& a : frontier) {
      for (const auto& b : current) {
        auto c = a & b;
        if (masks.insert(c).second) fresh.push_back(std::move(c));
      }
    }
    frontier = std::move(fresh);
  }
  NormalLattice l{g, {}, {}};
  for (const auto& m : masks) {
    auto s = subgroup_from_mask(g, m);
    if (!s || !s->is_normal()) throw NotASubgroup("kernel intersection is not a normal subgroup");
    l.normals.push_back(std::move(*s));
  }
  std::sort(l.normals.begin(), l.normals.end(), lattice_less);
  for (std::size_t a = 0; a < l.normals.size(); ++a) {
    for (std::size_t b = a + 1; b < l.normals.size(); ++b) {
      if (l.normals[a].order() < l.normals[b].order() && l.normals[a].is_subgroup_of(l.normals[b])) {
        l.inclusion.emplace_back(a, b);
      }
    }
  }
  return l;
}

std::vector<Subgroup> normals_of_index(const NormalLattice& l, std::uint64_t p) {
  std::vector<Subgroup> out;
  for (const auto& n : l.normals) {
    if (n.index() == p) out.push_back(n);
  }
  return out;
}

std::vector<Subgroup> chief_factor_above(const NormalLattice& l, const Subgroup& z) {
  auto p = l.group->prime();
  if (!p) throw NotAPGroup("chief factors are only computed for p-groups");
  if (!z.is_normal()) throw NotNormal("chief factors need a normal subgroup below");
  std::vector<Subgroup> out;
  for (const auto& y : l.normals) {
    if (y.order() == z.order() * *p && z.is_subgroup_of(y)) out.push_back(y);
  }
  return out;
}

QuotientMap quotient(const GroupPtr& gp, const Subgroup& n) {
  if (n.parent() != gp) throw GroupMismatch("subgroup of another group");
  if (!n.is_normal()) throw NotNormal("quotient by a subgroup that is not normal");
  const Group& g = *gp;
  constexpr ElementIndex kUnset = ~ElementIndex{0};
  std::vector<ElementIndex> coset_of(g.order(), kUnset);
  std::vector<ElementIndex> reps;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    auto c = static_cast<ElementIndex>(reps.size());
    reps.push_back(x);
    for (ElementIndex h : n.elements()) coset_of[g.multiply(h, x)] = c;
  }
  auto action = [&](ElementIndex x) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) images[c] = coset_of[g.multiply(reps[c], x)];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (ElementIndex s : g.generator_indices()) gens.push_back(action(s));

  QuotientMap q(n);
  q.quotient_ = Group::closure(std::move(gens), reps.size(), reps.size() + 1);
  if (q.quotient_->order() != reps.size()) throw NotNormal("coset action has the wrong order");
  q.projection_.resize(g.order());
  q.section_.assign(reps.size(), kUnset);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    ElementIndex image = *q.quotient_->index_of(action(x));
    q.projection_[x] = image;
    if (q.section_[image] == kUnset) q.section_[image] = x;
  }
  return q;
}

ClassFunction QuotientMap::inflate(const ClassFunction& f) const {
  if (f.group() != quotient_) throw GroupMismatch("inflating a class function of another group");
  const Group& g = *source();
  std::vector<Cyclotomic> values;
  values.reserve(g.class_count());
  for (const auto& cls : g.classes()) values.push_back(f.at_element(projection_[cls.representative]));
  return ClassFunction(source(), std::move(values));
}

ClassFunction QuotientMap::deflate(const ClassFunction& f) const {
  if (f.group() != source()) throw GroupMismatch("deflating a class function of another group");
  const Group& g = *source();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (!(f.at_element(x) == f.at_element(section_[projection_[x]]))) {
      throw NotNormal("class function is not constant on cosets of the kernel");
    }
  }
  std::vector<Cyclotomic> values;
  for (const auto& cls : quotient_->classes()) values.push_back(f.at_element(section_[cls.representative]));
  return ClassFunction(quotient_, std::move(values));
}

}  // namespace charprod
