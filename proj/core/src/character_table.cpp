#include "charprod/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "charprod/error.hpp"

namespace charprod {

namespace {

// Arithmetic in GF(q) for q < 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q) : q_(q) {}
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q_ - b) % q_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % q_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
    std::uint64_t r = 1;
    a %= q_;
    while (k != 0) {
      if (k & 1U) r = mul(r, a);
      a = mul(a, a);
      k >>= 1U;
    }
    return r;
  }
  // Extended Euclid.
  std::uint64_t inv(std::uint64_t a) const {
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(q_), new_r = static_cast<std::int64_t>(a % q_);
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw LiftInconsistent("attempted to invert zero in GF(q)");
    if (t < 0) t += static_cast<std::int64_t>(q_);
    return static_cast<std::uint64_t>(t);
  }
  std::uint64_t from_int(std::int64_t a) const {
    auto m = static_cast<std::int64_t>(q_);
    a %= m;
    return static_cast<std::uint64_t>(a < 0 ? a + m : a);
  }

 private:
  std::uint64_t q_;
};

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t primitive_root_of_unity(const PrimeField& f, std::uint64_t e) {
  const std::uint64_t q = f.q();
  std::vector<std::uint64_t> factors;
  std::uint64_t m = q - 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    factors.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool generator = std::all_of(factors.begin(), factors.end(),
                                 [&](std::uint64_t p) { return f.pow(g, (q - 1) / p) != 1; });
    if (generator) return f.pow(g, (q - 1) / e);
  }
  return 1;  // q == 2, e == 1
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(const PrimeField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const std::uint64_t inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c];
      for (std::size_t t = c; t < cols; ++t) m[r][t] = f.sub(m[r][t], f.mul(factor, m[rank][t]));
    }
    pivots.push_back(c);
    ++rank;
  }
  m.resize(rank);
  return pivots;
}

// Basis (as rows) of the right null space of a square matrix.
Matrix null_space(const PrimeField& f, Matrix m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> pivots = row_reduce(f, m);
  Matrix basis;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (low to high) via Hessenberg reduction.
Row characteristic_polynomial(const PrimeField& f, Matrix h) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t r = c + 1;
    while (r < n && h[r][c] == 0) ++r;
    if (r == n) continue;
    if (r != c + 1) {
      std::swap(h[r], h[c + 1]);
      for (auto& row : h) std::swap(row[r], row[c + 1]);
    }
    const std::uint64_t inv = f.inv(h[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      const std::uint64_t u = f.mul(h[i][c], inv);
      if (u == 0) continue;
      for (std::size_t t = 0; t < n; ++t) h[i][t] = f.sub(h[i][t], f.mul(u, h[c + 1][t]));
      for (std::size_t t = 0; t < n; ++t) h[t][c + 1] = f.add(h[t][c + 1], f.mul(u, h[t][i]));
    }
  }
  std::vector<Row> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Row next(m + 1, 0);
    const std::uint64_t diag = h[m - 1][m - 1];
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      next[i + 1] = f.add(next[i + 1], p[m - 1][i]);
      next[i] = f.sub(next[i], f.mul(diag, p[m - 1][i]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const std::uint64_t coef = f.mul(t, h[m - i - 1][m - 1]);
      if (coef == 0) continue;
      for (std::size_t s = 0; s < p[m - i - 1].size(); ++s) {
        next[s] = f.sub(next[s], f.mul(coef, p[m - i - 1][s]));
      }
    }
    p[m] = std::move(next);
  }
  return p[n];
}

// Class matrix (M_i)_{j,k} = a(i,j,k) mod q.
Matrix class_matrix(const Group& g, ClassIndex i, const PrimeField& f) {
  const std::size_t k = g.class_count();
  Matrix m(k, Row(k, 0));
  for (ClassIndex target = 0; target < k; ++target) {
    const ElementIndex z = g.classes()[target].representative;
    for (ElementIndex x : g.classes()[i].members) {
      ClassIndex j = g.class_of(g.multiply(g.inverse(x), z));
      m[j][target] = f.add(m[j][target], 1);
    }
  }
  return m;
}

struct Eigenspace {
  Matrix basis;                // rows in reduced echelon form
  std::vector<std::size_t> pivots;
};

std::vector<Eigenspace> split(const Eigenspace& space, const Matrix& m, const PrimeField& f) {
  const std::size_t d = space.basis.size();
  const std::size_t k = m.size();
  Matrix a(d, Row(d, 0));
  for (std::size_t r = 0; r < d; ++r) {
    Row image(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l) {
        if (m[j][l] != 0 && space.basis[r][l] != 0) acc = f.add(acc, f.mul(m[j][l], space.basis[r][l]));
      }
      image[j] = acc;
    }
    for (std::size_t s = 0; s < d; ++s) a[s][r] = image[space.pivots[s]];
  }
  Row poly = characteristic_polynomial(f, a);
  std::vector<Eigenspace> parts;
  std::size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < f.q() && found < d; ++lambda) {
    std::uint64_t value = 0;
    for (std::size_t i = poly.size(); i-- > 0;) value = f.add(f.mul(value, lambda), poly[i]);
    if (value != 0) continue;
    Matrix shifted = a;
    for (std::size_t s = 0; s < d; ++s) shifted[s][s] = f.sub(shifted[s][s], lambda);
    Matrix coords = null_space(f, shifted);
    Eigenspace part;
    for (const Row& c : coords) {
      Row v(k, 0);
      for (std::size_t r = 0; r < d; ++r) {
        if (c[r] == 0) continue;
        for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(c[r], space.basis[r][l]));
      }
      part.basis.push_back(std::move(v));
    }
    part.pivots = row_reduce(f, part.basis);
    found += part.basis.size();
    parts.push_back(std::move(part));
  }
  if (found != d) throw EigensplitStall("class matrix is not diagonalizable on an eigenspace");
  return parts;
}

bool precedes(const ClassFunction& a, const ClassFunction& b, std::int64_t da, std::int64_t db) {
  if (da != db) return da < db;
  for (std::size_t j = 0; j < a.size(); ++j) {
    int c = Cyclotomic::compare(a[j], b[j]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

namespace detail {

std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t n) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (root * root < n) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= n) --root;
  const std::uint64_t bound = 2 * root;
  for (std::uint64_t q = e + 1;; q += e) {
    if (q > bound && is_prime(q)) return q;
  }
}

}  // namespace detail

ClassConstants class_constants(const Group& g) {
  const std::size_t k = g.class_count();
  ClassConstants a(k);
  for (ClassIndex i = 0; i < k; ++i) {
    for (ClassIndex target = 0; target < k; ++target) {
      const ElementIndex z = g.classes()[target].representative;
      for (ElementIndex x : g.classes()[i].members) {
        ++a.at(i, g.class_of(g.multiply(g.inverse(x), z)), target);
      }
    }
  }
  return a;
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {
  for (const auto& chi : irreducibles_) {
    if (chi.group() != group_) throw GroupMismatch("table row on a different group");
    auto d = chi.degree();
    degrees_.push_back(d.value_or(0));
    std::vector<Cyclotomic> w;
    w.reserve(chi.size());
    for (ClassIndex j = 0; j < chi.size(); ++j) {
      w.push_back(chi[j].conj().scaled(mpq_class(static_cast<unsigned long>(group_->classes()[j].size()))));
    }
    weighted_conj_.push_back(std::move(w));
  }
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    if (irreducibles_[i] == f) return i;
  }
  return std::nullopt;
}

CharacterTable dixon_table(const GroupPtr& gp) {
  const Group& g = *gp;
  const std::size_t k = g.class_count();
  const std::uint64_t n = g.order();
  const std::uint64_t e = g.exponent();
  const std::uint64_t q = detail::dixon_prime(e, n);
  if (q >= (1ULL << 32)) throw LiftInconsistent("modulus for the Dixon method exceeds 32 bits");
  const PrimeField f(q);

  // (1) + (2): split GF(q)^k into common eigenspaces of the class matrices.
  Eigenspace whole;
  for (std::size_t i = 0; i < k; ++i) {
    Row v(k, 0);
    v[i] = 1;
    whole.basis.push_back(std::move(v));
    whole.pivots.push_back(i);
  }
  std::vector<Eigenspace> spaces{whole};
  for (ClassIndex i = 1; i < k; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Eigenspace& s) { return s.basis.size() == 1; })) break;
    const Matrix m = class_matrix(g, i, f);
    std::vector<Eigenspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, m, f)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces) {
    if (s.basis.size() != 1) throw EigensplitStall("class matrices left an eigenspace of dimension > 1");
  }
  if (spaces.size() != k) throw EigensplitStall("eigenspace count differs from class count");

  // Power classes per class, shared by every character.
  std::vector<std::vector<ClassIndex>> powers(k);
  for (ClassIndex j = 0; j < k; ++j) {
    const std::uint64_t o = g.representative_order(j);
    for (std::uint64_t t = 0; t < o; ++t) powers[j].push_back(g.power_class(j, static_cast<std::int64_t>(t)));
  }
  const std::uint64_t zeta = primitive_root_of_unity(f, e);
  const auto working_order = static_cast<std::uint32_t>(e);

  std::vector<ClassFunction> rows;
  std::vector<std::int64_t> degrees;
  for (const auto& s : spaces) {
    // (3): central character omega, normalized at the identity class.
    Row omega = s.basis.front();
    if (omega[0] == 0) throw LiftInconsistent("eigenvector vanishes at the identity class");
    const std::uint64_t scale = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, scale);

    std::uint64_t norm = 0;
    for (ClassIndex j = 0; j < k; ++j) {
      norm = f.add(norm, f.mul(f.mul(omega[j], omega[g.inverse_class(j)]),
                               f.inv(g.classes()[j].size() % q)));
    }
    if (norm == 0) throw LiftInconsistent("degree normalization vanishes mod q");
    const std::uint64_t degree_sq = f.mul(n % q, f.inv(norm));
    std::int64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d == 0 && f.mul(d, d) == degree_sq) {
        degree = static_cast<std::int64_t>(d);
        break;
      }
    }
    if (degree == 0) throw LiftInconsistent("no admissible degree lifts the normalization");

    Row chi_mod(k);
    for (ClassIndex j = 0; j < k; ++j) {
      chi_mod[j] = f.mul(f.mul(omega[j], static_cast<std::uint64_t>(degree)), f.inv(g.classes()[j].size() % q));
    }

    // (4): eigenvalue multiplicities by the mod-q Fourier sum over powers.
    std::vector<Cyclotomic> values;
    values.reserve(k);
    for (ClassIndex j = 0; j < k; ++j) {
      const std::uint64_t o = powers[j].size();
      const std::uint64_t w = f.pow(zeta, e / o);
      const std::uint64_t w_inv = f.inv(w);
      const std::uint64_t o_inv = f.inv(o % q);
      std::vector<std::int64_t> raw(e, 0);
      std::int64_t total = 0;
      for (std::uint64_t r = 0; r < o; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t step = f.pow(w_inv, r);
        std::uint64_t twiddle = 1;
        for (std::uint64_t t = 0; t < o; ++t) {
          acc = f.add(acc, f.mul(chi_mod[powers[j][t]], twiddle));
          twiddle = f.mul(twiddle, step);
        }
        const std::uint64_t mult = f.mul(acc, o_inv);
        if (mult > static_cast<std::uint64_t>(degree)) {
          throw LiftInconsistent("eigenvalue multiplicity does not lift to [0, degree]");
        }
        raw[r * (e / o)] = static_cast<std::int64_t>(mult);
        total += static_cast<std::int64_t>(mult);
      }
      if (total != degree) throw LiftInconsistent("eigenvalue multiplicities do not sum to the degree");
      values.push_back(Cyclotomic::from_powers(working_order, raw));
    }
    rows.emplace_back(gp, std::move(values));
    degrees.push_back(degree);
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  const ClassFunction principal = ClassFunction::principal(gp);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool pa = rows[a] == principal;
    const bool pb = rows[b] == principal;
    if (pa != pb) return pa;
    return precedes(rows[a], rows[b], degrees[a], degrees[b]);
  });
  std::vector<ClassFunction> sorted;
  sorted.reserve(k);
  for (std::size_t i : order) sorted.push_back(rows[i]);

  CharacterTable table(gp, std::move(sorted));
  // (5)
  if (!verify_orthogonality(table)) throw LiftInconsistent("lifted table fails orthogonality");
  return table;
}

bool verify_orthogonality(const CharacterTable& t) {
  const Group& g = *t.group();
  const std::size_t k = g.class_count();
  if (t.size() != k) return false;
  const auto n = static_cast<unsigned long>(g.order());
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Cyclotomic sum;
      for (ClassIndex j = 0; j < k; ++j) sum += t[a][j] * t.weighted_conjugate(b)[j];
      if (sum != Cyclotomic(static_cast<std::int64_t>(a == b ? n : 0))) return false;
    }
  }
  std::vector<std::vector<Cyclotomic>> conjugates(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (ClassIndex y = 0; y < k; ++y) conjugates[i].push_back(t[i][y].conj());
  }
  for (ClassIndex x = 0; x < k; ++x) {
    for (ClassIndex y = 0; y < k; ++y) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < k; ++i) sum += t[i][x] * conjugates[i][y];
      const std::int64_t expected = x == y ? static_cast<std::int64_t>(g.centralizer_order(x)) : 0;
      if (sum != Cyclotomic(expected)) return false;
    }
  }
  return true;
}

}  // namespace charprod
