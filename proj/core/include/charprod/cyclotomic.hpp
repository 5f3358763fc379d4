#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace charprod {

namespace detail {

struct FieldData;

// Coefficients over a common positive denominator, gcd-reduced. Values are
// kept in the int64 form whenever they fit; the mpz form is the fallback.
template <class Int>
struct CoeffRep {
  std::vector<Int> num;
  Int den;
};

using SmallRep = CoeffRep<std::int64_t>;
using BigRep = CoeffRep<mpz_class>;

}  // namespace detail

/// An exact element of the cyclotomic field Q(zeta_e).
///
/// Stored as the canonical residue modulo the e-th cyclotomic polynomial in
/// the power basis 1, x, ..., x^(phi(e)-1), so two values of the same order
/// are equal iff their coefficients are. Binary operations on values of
/// different orders work in the field of the lcm order.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Cyclotomic(int n) : Cyclotomic(static_cast<std::int64_t>(n)) {}  // NOLINT
  explicit Cyclotomic(const mpq_class& q);

  /// zeta_e^k. Depends only on k mod e.
  static Cyclotomic root_of_unity(std::uint32_t e, std::int64_t k);
  /// sum_k coeffs[k] x^k reduced into Q(zeta_e); any length is accepted.
  static Cyclotomic from_powers(std::uint32_t e, std::span<const mpq_class> coeffs);
  static Cyclotomic from_powers(std::uint32_t e, std::span<const std::int64_t> coeffs);
  /// Inverse of to_string(). Throws std::invalid_argument.
  static Cyclotomic parse(std::string_view text);

  std::uint32_t order() const noexcept;
  /// phi(order()), the number of canonical coefficients.
  std::size_t dimension() const noexcept;
  mpq_class coefficient(std::size_t i) const;
  std::vector<mpq_class> coefficients() const;

  /// The same value in Q(zeta_e); requires order() | e.
  Cyclotomic embed(std::uint32_t e) const;
  /// The same value in Q(zeta_d) when it lies there (d | order()).
  std::optional<Cyclotomic> lower(std::uint32_t d) const;

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// All canonical coefficients are integers (an algebraic integer).
  bool is_integral() const noexcept;
  std::optional<mpq_class> as_rational() const;
  /// The rational integer this value equals, or nullopt (NotAnInteger).
  std::optional<std::int64_t> as_integer() const;

  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// The Galois automorphism zeta -> zeta^k, gcd(k, e) = 1.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic scaled(const mpq_class& q) const;

  /// Floating-point value for display only.
  std::complex<double> approx() const;
  /// Rational values print as "3" or "-1/2"; others as "z(e;c0,c1,...)".
  std::string to_string() const;
  std::size_t hash() const noexcept;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order: lexicographic on canonical coefficients in the common
  /// field. Used only to fix deterministic orderings.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(const detail::FieldData* field, detail::SmallRep rep);
  Cyclotomic(const detail::FieldData* field, detail::BigRep rep);
  template <class Op>
  static Cyclotomic combine(const Cyclotomic& a, const Cyclotomic& b, Op op);
  detail::BigRep big() const;

  const detail::FieldData* field_;
  std::variant<detail::SmallRep, detail::BigRep> rep_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);
/// Coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

}  // namespace charprod

template <>
struct std::hash<charprod::Cyclotomic> {
  std::size_t operator()(const charprod::Cyclotomic& z) const noexcept { return z.hash(); }
};
