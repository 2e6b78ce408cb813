#pragma once

// Exact scalar arithmetic: GMP rationals, sparse polynomials over Q in the
// formal variables b, u, N, normalized rational functions, and the Scalar
// union used by every symmetric-function computation.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hurwitz/errors.hpp"

namespace hurwitz {

using BigInt = mpz_class;
using BigRat = mpq_class;

std::string to_string(const BigRat& q);
// Canonical n/d; throws DivisionByZero when d = 0.
BigRat rat(const BigInt& n, const BigInt& d);
BigRat parse_rational(std::string_view text);

// Formal variables. The declaration order is the monomial order b < u < N.
enum class Var : unsigned { B = 0, U = 1, N = 2 };
inline constexpr unsigned kNumVars = 3;

const char* var_name(Var v) noexcept;

using VarMask = unsigned;
inline constexpr VarMask mask_of(Var v) { return 1u << static_cast<unsigned>(v); }

// Partial assignment of rational values to the formal variables.
class Assignment {
 public:
  Assignment() = default;
  Assignment& set(Var v, BigRat value) {
    values_[static_cast<unsigned>(v)] = std::move(value);
    return *this;
  }
  const std::optional<BigRat>& get(Var v) const { return values_[static_cast<unsigned>(v)]; }
  bool covers(VarMask mask) const;

 private:
  std::array<std::optional<BigRat>, kNumVars> values_;
};

// A monomial b^i u^j N^k packed into one word so that integer comparison is
// graded lexicographic order with N > u > b and multiplication is addition.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial make(unsigned eb, unsigned eu, unsigned en);
  static Monomial of(Var v, unsigned e = 1);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> (16 * static_cast<unsigned>(v))) & 0xffffu);
  }
  unsigned degree() const { return static_cast<unsigned>(key_ >> 48); }
  VarMask vars() const;
  Monomial without(Var v) const;
  bool divides(Monomial other) const;

  std::uint64_t key() const { return key_; }

  friend Monomial operator*(Monomial a, Monomial b);
  friend Monomial operator/(Monomial a, Monomial b);  // requires a.divides(b) reversed
  friend auto operator<=>(Monomial a, Monomial b) = default;

 private:
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

// Sparse polynomial over Q. Terms are kept sorted by decreasing monomial and
// never hold a zero coefficient.
class MPoly {
 public:
  using Term = std::pair<Monomial, BigRat>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
  static MPoly variable(Var v);
  static MPoly monomial(const BigRat& c, Monomial m);
  static MPoly from_terms(std::vector<Term> terms);  // any order, duplicates merged

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRat constant_term() const;
  // Value of a constant polynomial; throws when the polynomial is not constant.
  const BigRat& constant_value() const;
  const BigRat& leading_coeff() const;
  Monomial leading_monomial() const;

  VarMask vars() const;
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  // Coefficient of v^k, as a polynomial free of v.
  MPoly coeff_in(Var v, unsigned k) const;
  std::vector<MPoly> coeffs_in(Var v) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const BigRat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const BigRat& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned e) const;
  BigRat evaluate(const Assignment& a) const;
  MPoly specialize(Var v, const BigRat& value) const;
  MPoly substitute(Var v, const MPoly& replacement) const;
  MPoly mul_monomial(Monomial m) const;

  // Rational content c with sign of the leading coefficient such that this/c
  // has coprime integer coefficients and a positive leading coefficient.
  BigRat content() const;
  MPoly primitive() const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

// Exact quotient a / b; throws InvalidArgument when b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);
// Quotient and remainder when b divides a; nullopt otherwise.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);
// Pseudo-remainder of a by b with respect to v.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, Var v);
// Greatest common divisor, integer-primitive with positive leading coefficient.
MPoly gcd(const MPoly& a, const MPoly& b);

// Reduced fraction num/den. The denominator is integer-primitive with a
// positive leading coefficient, which makes the stored form canonical.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const BigRat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const MPoly& num, const MPoly& den);
  static RatFun variable(Var v) { return RatFun(MPoly::variable(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRat constant_value() const;
  VarMask vars() const { return num_.vars() | den_.vars(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun pow(int e) const;
  // Throws PoleAtAssignment when the denominator vanishes.
  BigRat evaluate(const Assignment& a) const;
  RatFun specialize(Var v, const BigRat& value) const;
  RatFun substitute(Var v, const RatFun& replacement) const;
  // k-th coefficient of the power-series expansion in v around v = 0.
  RatFun series_coeff(Var v, unsigned k) const;
  // Coefficients 0..k of the same expansion.
  std::vector<RatFun> series(Var v, unsigned k) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFun(Reduced, MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void fix_unit();

  MPoly num_;
  MPoly den_;
};

// Exact(BigRat) | Symbolic(RatFun). Symbolic values that reduce to a
// constant are stored as Exact, so equality is structural. Exact operands are
// embedded as constants when combined with Symbolic ones. u and N = 1/u are two
// coordinates of the same quantity and may not be mixed in one expression.
class Scalar {
 public:
  Scalar() : v_(BigRat(0)) {}
  Scalar(long c) : v_(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int c) : v_(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(BigRat c) : v_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RatFun f);  // NOLINT(google-explicit-constructor)
  Scalar(MPoly p) : Scalar(RatFun(std::move(p))) {}  // NOLINT(google-explicit-constructor)
  static Scalar variable(Var v) { return Scalar(RatFun::variable(v)); }
  static Scalar ratio(long n, long d);

  bool is_exact() const { return std::holds_alternative<BigRat>(v_); }
  const BigRat& exact() const;
  RatFun ratfun() const;
  VarMask vars() const;
  bool is_zero() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

  Scalar pow(int e) const;
  BigRat evaluate(const Assignment& a) const;
  Scalar specialize(Var v, const BigRat& value) const;
  Scalar specialize(const Assignment& a) const;
  Scalar substitute(Var v, const Scalar& replacement) const;

  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  std::variant<BigRat, RatFun> v_;
};

enum class ScalarOp { Add, Sub, Mul, Div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

}  // namespace hurwitz
