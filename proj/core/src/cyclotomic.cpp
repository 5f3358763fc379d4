#include "charprod/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace charprod {

namespace detail {

struct FieldData {
  std::uint32_t order;
  std::size_t phi;
  std::vector<std::int64_t> modulus;  // monic, low to high, size phi + 1
};

}  // namespace detail

namespace {

using detail::BigRep;
using detail::FieldData;
using detail::SmallRep;

// Thrown by the int64 path; the operation is then redone with mpz.
struct Overflow {};

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return -a;
}
inline bool zero_coeff(std::int64_t a) { return a == 0; }
inline bool one_coeff(std::int64_t a) { return a == 1; }
inline int sign(std::int64_t a) { return (a > 0) - (a < 0); }
inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (a == kMin || b == kMin) throw Overflow{};
  return std::gcd(a, b);
}
inline std::int64_t divexact(std::int64_t a, std::int64_t b) { return a / b; }
inline std::int64_t from_small(std::int64_t a, std::int64_t /*tag*/) { return a; }

inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class neg(const mpz_class& a) { return -a; }
inline bool zero_coeff(const mpz_class& a) { return sgn(a) == 0; }
inline bool one_coeff(const mpz_class& a) { return a == 1; }
inline int sign(const mpz_class& a) { return sgn(a); }
inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline mpz_class from_small(std::int64_t a, const mpz_class& /*tag*/) {
  return mpz_class(static_cast<long>(a));
}

template <class Int>
void normalize(detail::CoeffRep<Int>& r) {
  if (sign(r.den) < 0) {
    r.den = neg(r.den);
    for (auto& c : r.num) c = neg(c);
  }
  if (one_coeff(r.den)) return;
  bool all_zero = true;
  Int g = r.den;
  for (const auto& c : r.num) {
    if (zero_coeff(c)) continue;
    all_zero = false;
    g = gcd(g, c);
    if (one_coeff(g)) return;
  }
  if (all_zero) {
    r.den = Int(1);
    return;
  }
  r.den = divexact(r.den, g);
  for (auto& c : r.num) c = divexact(c, g);
}

// Reduces `raw` modulo x^e - 1 and then the cyclotomic polynomial.
template <class Int>
void reduce(std::vector<Int>& raw, const FieldData& f) {
  if (raw.size() > f.order) {
    for (std::size_t i = f.order; i < raw.size(); ++i) {
      if (!zero_coeff(raw[i])) raw[i % f.order] = add(raw[i % f.order], raw[i]);
    }
    raw.resize(f.order, Int(0));
  }
  for (std::size_t i = raw.size(); i-- > f.phi;) {
    if (zero_coeff(raw[i])) continue;
    const Int c = raw[i];
    for (std::size_t t = 0; t < f.phi; ++t) {
      const std::int64_t m = f.modulus[t];
      if (m == 0) continue;
      raw[i - f.phi + t] = sub(raw[i - f.phi + t], mul(c, from_small(m, c)));
    }
    raw[i] = Int(0);
  }
  raw.resize(f.phi, Int(0));
}

template <class Int>
detail::CoeffRep<Int> add_rep(const detail::CoeffRep<Int>& a, const detail::CoeffRep<Int>& b,
                              bool subtract) {
  detail::CoeffRep<Int> r;
  r.num.resize(a.num.size());
  if (a.den == b.den) {
    for (std::size_t i = 0; i < a.num.size(); ++i) {
      r.num[i] = subtract ? sub(a.num[i], b.num[i]) : add(a.num[i], b.num[i]);
    }
    r.den = a.den;
  } else {
    for (std::size_t i = 0; i < a.num.size(); ++i) {
      Int x = mul(a.num[i], b.den);
      Int y = mul(b.num[i], a.den);
      r.num[i] = subtract ? sub(x, y) : add(x, y);
    }
    r.den = mul(a.den, b.den);
  }
  normalize(r);
  return r;
}

template <class Int>
detail::CoeffRep<Int> mul_rep(const detail::CoeffRep<Int>& a, const detail::CoeffRep<Int>& b,
                              const FieldData& f) {
  detail::CoeffRep<Int> r;
  const std::size_t n = a.num.size();
  std::vector<Int> raw(2 * n - 1, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (zero_coeff(a.num[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (zero_coeff(b.num[j])) continue;
      raw[i + j] = add(raw[i + j], mul(a.num[i], b.num[j]));
    }
  }
  reduce(raw, f);
  r.num = std::move(raw);
  r.den = mul(a.den, b.den);
  normalize(r);
  return r;
}

// Applies x^i -> x^(i*k mod e) to every coefficient.
template <class Int>
detail::CoeffRep<Int> galois_rep(const detail::CoeffRep<Int>& a, const FieldData& f,
                                 std::uint64_t k) {
  std::vector<Int> raw(f.order, Int(0));
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    if (zero_coeff(a.num[i])) continue;
    std::size_t slot = (i * k) % f.order;
    raw[slot] = add(raw[slot], a.num[i]);
  }
  reduce(raw, f);
  detail::CoeffRep<Int> r{std::move(raw), a.den};
  return r;
}

template <class Int>
detail::CoeffRep<Int> embed_rep(const detail::CoeffRep<Int>& a, const FieldData& to,
                                std::uint32_t stride) {
  std::vector<Int> raw((a.num.size() - 1) * stride + 1, Int(0));
  for (std::size_t i = 0; i < a.num.size(); ++i) raw[i * stride] = a.num[i];
  reduce(raw, to);
  return {std::move(raw), a.den};
}

bool fits(const mpz_class& z) { return z.fits_slong_p(); }

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] = sub(num[i - dn + t], mul(c, den[t]));
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division is not exact");
  }
  return q;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint32_t, std::vector<std::int64_t>>& poly_cache() {
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  return cache;
}

std::map<std::uint32_t, std::unique_ptr<FieldData>>& field_cache() {
  static std::map<std::uint32_t, std::unique_ptr<FieldData>> cache;
  return cache;
}

const std::vector<std::int64_t>& cyclotomic_polynomial_locked(std::uint32_t n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divide_exact(num, cyclotomic_polynomial_locked(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

const FieldData* field(std::uint32_t e) {
  if (e == 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard lock(registry_mutex());
  auto& cache = field_cache();
  if (auto it = cache.find(e); it != cache.end()) return it->second.get();
  auto data = std::make_unique<FieldData>();
  data->order = e;
  data->modulus = cyclotomic_polynomial_locked(e);
  data->phi = data->modulus.size() - 1;
  return cache.emplace(e, std::move(data)).first->second.get();
}

BigRep to_big(const SmallRep& s) {
  BigRep b;
  b.num.reserve(s.num.size());
  for (auto c : s.num) b.num.emplace_back(static_cast<long>(c));
  b.den = static_cast<long>(s.den);
  return b;
}

std::string rational_text(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  return field(n)->modulus;
}

Cyclotomic::Cyclotomic() : Cyclotomic(std::int64_t{0}) {}

Cyclotomic::Cyclotomic(std::int64_t n) : field_(field(1)), rep_(SmallRep{{n}, 1}) {}

Cyclotomic::Cyclotomic(const mpq_class& q) : field_(field(1)) {
  BigRep b{{q.get_num()}, q.get_den()};
  *this = Cyclotomic(field_, std::move(b));
}

Cyclotomic::Cyclotomic(const FieldData* f, SmallRep rep) : field_(f), rep_(std::move(rep)) {}

Cyclotomic::Cyclotomic(const FieldData* f, BigRep rep) : field_(f) {
  normalize(rep);
  bool small = fits(rep.den) && std::all_of(rep.num.begin(), rep.num.end(), [](const mpz_class& c) { return fits(c); });
  if (small) {
    SmallRep s;
    s.den = rep.den.get_si();
    s.num.reserve(rep.num.size());
    for (const auto& c : rep.num) s.num.push_back(c.get_si());
    rep_ = std::move(s);
  } else {
    rep_ = std::move(rep);
  }
}

BigRep Cyclotomic::big() const {
  if (const auto* s = std::get_if<SmallRep>(&rep_)) return to_big(*s);
  return std::get<BigRep>(rep_);
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t e, std::int64_t k) {
  const FieldData* f = field(e);
  auto ee = static_cast<std::int64_t>(e);
  k %= ee;
  if (k < 0) k += ee;
  std::vector<std::int64_t> raw(e, 0);
  raw[static_cast<std::size_t>(k)] = 1;
  reduce(raw, *f);  // coefficients of cyclotomic polynomials stay tiny
  return Cyclotomic(f, SmallRep{std::move(raw), 1});
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t e, std::span<const mpq_class> coeffs) {
  const FieldData* f = field(e);
  mpz_class common = 1;
  for (const auto& c : coeffs) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> raw;
  raw.reserve(std::max<std::size_t>(coeffs.size(), f->phi));
  for (const auto& c : coeffs) raw.push_back(c.get_num() * (common / c.get_den()));
  if (raw.size() < f->phi) raw.resize(f->phi, 0);
  reduce(raw, *f);
  return Cyclotomic(f, BigRep{std::move(raw), common});
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t e, std::span<const std::int64_t> coeffs) {
  const FieldData* f = field(e);
  try {
    std::vector<std::int64_t> raw(coeffs.begin(), coeffs.end());
    if (raw.size() < f->phi) raw.resize(f->phi, 0);
    reduce(raw, *f);
    return Cyclotomic(f, SmallRep{std::move(raw), 1});
  } catch (const Overflow&) {
    std::vector<mpq_class> q;
    for (auto c : coeffs) q.emplace_back(static_cast<long>(c));
    return from_powers(e, q);
  }
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_rational = [&](std::string_view s) {
    s = trim(s);
    mpq_class q;
    if (s.empty() || q.set_str(std::string(s), 10) != 0) {
      throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    }
    q.canonicalize();
    return q;
  };
  text = trim(text);
  if (!text.starts_with("z(")) return Cyclotomic(parse_rational(text));
  if (!text.ends_with(")")) throw std::invalid_argument("malformed cyclotomic text");
  std::string_view body = text.substr(2, text.size() - 3);
  std::size_t semi = body.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("missing ';' in cyclotomic text");
  mpq_class e = parse_rational(body.substr(0, semi));
  if (e.get_den() != 1 || e <= 0 || !e.get_num().fits_uint_p()) {
    throw std::invalid_argument("cyclotomic order must be a positive integer");
  }
  std::vector<mpq_class> coeffs;
  std::string_view rest = body.substr(semi + 1);
  while (true) {
    std::size_t comma = rest.find(',');
    coeffs.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  auto order = static_cast<std::uint32_t>(e.get_num().get_ui());
  if (coeffs.size() != field(order)->phi) {
    throw std::invalid_argument("coefficient count does not match phi(e)");
  }
  return from_powers(order, coeffs);
}

std::uint32_t Cyclotomic::order() const noexcept { return field_->order; }

std::size_t Cyclotomic::dimension() const noexcept { return field_->phi; }

mpq_class Cyclotomic::coefficient(std::size_t i) const {
  if (const auto* s = std::get_if<SmallRep>(&rep_)) {
    mpq_class q(mpz_class(static_cast<long>(s->num.at(i))), mpz_class(static_cast<long>(s->den)));
    return q;
  }
  const auto& b = std::get<BigRep>(rep_);
  return mpq_class(b.num.at(i), b.den);
}

std::vector<mpq_class> Cyclotomic::coefficients() const {
  std::vector<mpq_class> out;
  for (std::size_t i = 0; i < dimension(); ++i) out.push_back(coefficient(i));
  return out;
}

Cyclotomic Cyclotomic::embed(std::uint32_t e) const {
  if (e == order()) return *this;
  if (e % order() != 0) throw std::invalid_argument("embedding requires order | e");
  const FieldData* to = field(e);
  const std::uint32_t stride = e / order();
  if (const auto* s = std::get_if<SmallRep>(&rep_)) {
    try {
      return Cyclotomic(to, embed_rep(*s, *to, stride));
    } catch (const Overflow&) {
    }
  }
  return Cyclotomic(to, embed_rep(big(), *to, stride));
}

std::optional<Cyclotomic> Cyclotomic::lower(std::uint32_t d) const {
  if (d == 0 || order() % d != 0) throw std::invalid_argument("lowering requires d | order");
  if (d == order()) return *this;
  // Solve this = sum_k c_k zeta_d^k over Q by elimination on the embedded basis.
  const std::size_t rows = dimension();
  const std::size_t cols = euler_phi(d);
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t k = 0; k < cols; ++k) {
    Cyclotomic b = root_of_unity(d, static_cast<std::int64_t>(k)).embed(order());
    for (std::size_t r = 0; r < rows; ++r) m[r][k] = b.coefficient(r);
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][cols] = coefficient(r);
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    mpq_class inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t t = 0; t <= cols; ++t) m[r][t] -= f * m[rank][t];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (sgn(m[r][cols]) != 0) return std::nullopt;
  }
  std::vector<mpq_class> coeffs(cols, 0);
  for (std::size_t i = 0; i < rank; ++i) coeffs[pivots[i]] = m[i][cols];
  return from_powers(d, coeffs);
}

bool Cyclotomic::is_zero() const noexcept {
  return std::visit([](const auto& r) {
    return std::all_of(r.num.begin(), r.num.end(), [](const auto& c) { return zero_coeff(c); });
  }, rep_);
}

bool Cyclotomic::is_rational() const noexcept {
  return std::visit([](const auto& r) {
    return std::all_of(r.num.begin() + 1, r.num.end(), [](const auto& c) { return zero_coeff(c); });
  }, rep_);
}

bool Cyclotomic::is_integral() const noexcept {
  return std::visit([](const auto& r) { return one_coeff(r.den); }, rep_);
}

std::optional<mpq_class> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coefficient(0);
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  if (!is_rational()) return std::nullopt;
  if (const auto* s = std::get_if<SmallRep>(&rep_)) {
    if (s->den != 1) return std::nullopt;
    return s->num[0];
  }
  return std::nullopt;  // a big value never fits in int64
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const auto e = static_cast<std::int64_t>(order());
  k %= e;
  if (k < 0) k += e;
  if (std::gcd(k, e) != 1) throw std::invalid_argument("Galois exponent must be coprime to the order");
  if (k == 1 % e) return *this;
  const auto uk = static_cast<std::uint64_t>(k);
  if (const auto* s = std::get_if<SmallRep>(&rep_)) {
    try {
      return Cyclotomic(field_, galois_rep(*s, *field_, uk));
    } catch (const Overflow&) {
    }
  }
  return Cyclotomic(field_, galois_rep(big(), *field_, uk));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::scaled(const mpq_class& q) const {
  if (sgn(q) == 0) return Cyclotomic(field_, SmallRep{std::vector<std::int64_t>(dimension(), 0), 1});
  if (const auto* s = std::get_if<SmallRep>(&rep_)) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      try {
        SmallRep r = *s;
        const std::int64_t n = q.get_num().get_si();
        const std::int64_t d = q.get_den().get_si();
        for (auto& c : r.num) c = mul(c, n);
        r.den = mul(r.den, d);
        normalize(r);
        return Cyclotomic(field_, std::move(r));
      } catch (const Overflow&) {
      }
    }
  }
  BigRep r = big();
  for (auto& c : r.num) c *= q.get_num();
  r.den *= q.get_den();
  return Cyclotomic(field_, std::move(r));
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<long double> sum = 0;
  const long double step = 2.0L * std::numbers::pi_v<long double> / order();
  for (std::size_t i = 0; i < dimension(); ++i) {
    mpq_class c = coefficient(i);
    if (sgn(c) == 0) continue;
    long double w = c.get_d();
    sum += w * std::complex<long double>(std::cos(step * i), std::sin(step * i));
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rational_text(coefficient(0));
  std::string out = "z(" + std::to_string(order()) + ";";
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (i != 0) out += ',';
    out += rational_text(coefficient(i));
  }
  return out + ")";
}

std::size_t Cyclotomic::hash() const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(order());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  std::visit([&](const auto& r) {
    for (const auto& c : r.num) {
      if constexpr (std::is_same_v<std::decay_t<decltype(c)>, std::int64_t>) {
        mix(std::hash<std::int64_t>{}(c));
      } else {
        mix(std::hash<std::string>{}(c.get_str(16)));
      }
    }
  }, rep_);
  return h;
}

Cyclotomic Cyclotomic::operator-() const {
  if (const auto* s = std::get_if<SmallRep>(&rep_)) {
    try {
      SmallRep r = *s;
      for (auto& c : r.num) c = neg(c);
      return Cyclotomic(field_, std::move(r));
    } catch (const Overflow&) {
    }
  }
  BigRep r = big();
  for (auto& c : r.num) c = -c;
  return Cyclotomic(field_, std::move(r));
}

template <class Op>
Cyclotomic Cyclotomic::combine(const Cyclotomic& a, const Cyclotomic& b, Op op) {
  if (a.field_ != b.field_) {
    const std::uint32_t l = std::lcm(a.order(), b.order());
    return combine(a.embed(l), b.embed(l), op);
  }
  const FieldData* f = a.field_;
  const auto* sa = std::get_if<SmallRep>(&a.rep_);
  const auto* sb = std::get_if<SmallRep>(&b.rep_);
  if (sa != nullptr && sb != nullptr) {
    try {
      return Cyclotomic(f, op(*sa, *sb, *f));
    } catch (const Overflow&) {
    }
  }
  return Cyclotomic(f, op(a.big(), b.big(), *f));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  *this = combine(*this, b, [](const auto& x, const auto& y, const FieldData&) {
    return add_rep(x, y, false);
  });
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) {
  *this = combine(*this, b, [](const auto& x, const auto& y, const FieldData&) {
    return add_rep(x, y, true);
  });
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) {
  *this = *this * b;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  return Cyclotomic::combine(a, b, [](const auto& x, const auto& y, const FieldData& f) {
    return mul_rep(x, y, f);
  });
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const std::uint32_t l = std::lcm(a.order(), b.order());
    return a.embed(l) == b.embed(l);
  }
  const auto* sa = std::get_if<SmallRep>(&a.rep_);
  const auto* sb = std::get_if<SmallRep>(&b.rep_);
  if (sa != nullptr && sb != nullptr) return sa->den == sb->den && sa->num == sb->num;
  if (sa != nullptr || sb != nullptr) return false;  // canonical: a fitting value is never big
  const auto& ba = std::get<BigRep>(a.rep_);
  const auto& bb = std::get<BigRep>(b.rep_);
  return ba.den == bb.den && ba.num == bb.num;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const std::uint32_t l = std::lcm(a.order(), b.order());
    return compare(a.embed(l), b.embed(l));
  }
  const auto* sa = std::get_if<SmallRep>(&a.rep_);
  const auto* sb = std::get_if<SmallRep>(&b.rep_);
  if (sa != nullptr && sb != nullptr) {
    for (std::size_t i = 0; i < sa->num.size(); ++i) {
      __int128 x = static_cast<__int128>(sa->num[i]) * sb->den;
      __int128 y = static_cast<__int128>(sb->num[i]) * sa->den;
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    int c = cmp(a.coefficient(i), b.coefficient(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.to_string(); }

}  // namespace charprod
