#pragma once

#include <map>

#include "counit/scalar.hpp"
#include "counit/word.hpp"

namespace counit {

// Element of the free associative algebra: finitely many words with nonzero
// coefficients, kept sorted in deglex order (ascending; leading term at the
// back). Zero coefficients are never stored.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DeglexLess>;

  explicit NCPoly(FieldKind k = FieldKind::rationals) : kind_(k) {}

  static NCPoly zero(FieldKind k) { return NCPoly(k); }
  static NCPoly unit(FieldKind k);
  static NCPoly word(const Word& w, FieldKind k);
  static NCPoly generator(Letter g, FieldKind k);
  static NCPoly scalar(const Scalar& c);

  FieldKind kind() const { return kind_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // degree of the leading word; -1 for zero
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  const Word& leading_word() const;
  const Scalar& leading_coeff() const;

  void add_term(const Word& w, const Scalar& c);
  Scalar coeff(const Word& w) const;

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;  // concatenation product
  NCPoly operator-() const;
  NCPoly scaled(const Scalar& c) const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);

  // x * this * y for words x, y.
  NCPoly framed(const Word& x, const Word& y) const;

  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  std::string str(const Alphabet& a) const;

 private:
  FieldKind kind_;
  Terms terms_;
};

// Deterministic total order on polynomials (leading word first); used to fix
// processing order during completion.
int ncpoly_compare(const NCPoly& a, const NCPoly& b);

}  // namespace counit
