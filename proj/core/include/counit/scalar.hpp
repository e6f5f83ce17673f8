#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "counit/error.hpp"

namespace counit {

enum class FieldKind { rationals, rational_functions_in_q };

const char* field_kind_name(FieldKind k);
FieldKind field_kind_from_name(std::string_view name);

// Dense univariate integer polynomial, coefficient of q^i at index i.
// Normalized: no trailing zero coefficients; the zero polynomial is empty.
using IntPoly = std::vector<mpz_class>;

namespace poly {
IntPoly zero();
IntPoly constant(const mpz_class& c);
IntPoly monomial(const mpz_class& c, int deg);
int degree(const IntPoly& p);  // -1 for the zero polynomial
bool is_zero(const IntPoly& p);
bool equal(const IntPoly& a, const IntPoly& b);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
mpz_class content(const IntPoly& a);          // nonnegative gcd of coefficients
IntPoly divexact_scalar(const IntPoly& a, const mpz_class& c);
IntPoly divexact(const IntPoly& a, const IntPoly& b);  // requires b | a in Z[q]
IntPoly gcd(const IntPoly& a, const IntPoly& b);       // primitive-PRS, positive leading coeff
mpz_class eval_num_den(const IntPoly& p, const mpz_class& rn, const mpz_class& rd);
std::string to_string(const IntPoly& p);
}  // namespace poly

// Element of Q (kind = rationals) or Q(q) (kind = rational_functions_in_q),
// stored as a canonical fraction num/den of integer polynomials:
// gcd(num, den) = 1 in Z[q] (content included) and den has positive leading
// coefficient. Equality of canonical forms is plain representational equality.
class Scalar {
 public:
  Scalar() : kind_(FieldKind::rationals), num_(), den_(poly::constant(1)) {}

  static Scalar zero(FieldKind k);
  static Scalar one(FieldKind k);
  static Scalar integer(long v, FieldKind k);
  static Scalar integer(const mpz_class& v, FieldKind k);
  static Scalar fraction(const mpz_class& num, const mpz_class& den, FieldKind k);
  static Scalar q();                 // the indeterminate, over Q(q)
  static Scalar q_power(int e);      // q^e, e may be negative
  static Scalar from_poly(IntPoly num, IntPoly den, FieldKind k);

  FieldKind kind() const { return kind_; }
  bool is_zero() const { return poly::is_zero(num_); }
  bool is_one() const;
  bool is_integer() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long e) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Substitutes a rational value for q; requires den(r) != 0. Result lives
  // over the rationals. Identity on rationals-kind scalars.
  Scalar specialize(const Scalar& r) const;

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  // Rough size measure used by pivot heuristics: smaller is simpler.
  size_t complexity() const;

  std::string str() const;
  static Scalar parse(std::string_view text, FieldKind k);

 private:
  Scalar(FieldKind k, IntPoly num, IntPoly den);
  void canonicalize();
  void check_same_field(const Scalar& o) const;

  FieldKind kind_;
  IntPoly num_, den_;
};

}  // namespace counit
