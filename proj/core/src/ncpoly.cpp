#include "counit/ncpoly.hpp"

#include <sstream>

namespace counit {

NCPoly NCPoly::unit(FieldKind k) {
  NCPoly p(k);
  p.terms_.emplace(Word::empty(), Scalar::one(k));
  return p;
}

NCPoly NCPoly::word(const Word& w, FieldKind k) {
  NCPoly p(k);
  p.terms_.emplace(w, Scalar::one(k));
  return p;
}

NCPoly NCPoly::generator(Letter g, FieldKind k) { return word(Word::single(g), k); }

NCPoly NCPoly::scalar(const Scalar& c) {
  NCPoly p(c.kind());
  if (!c.is_zero()) p.terms_.emplace(Word::empty(), c);
  return p;
}

int NCPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.size();
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) fail(errc::validation_error, "leading word of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& NCPoly::leading_coeff() const {
  if (terms_.empty()) fail(errc::validation_error, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(kind_) : it->second;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r(*this);
  r += o;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r(*this);
  r -= o;
  return r;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  if (kind_ != o.kind_) fail(errc::field_mismatch, "ncpoly product across fields");
  NCPoly r(kind_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1.concat(w2), c1 * c2);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(kind_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly r(kind_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

NCPoly NCPoly::framed(const Word& x, const Word& y) const {
  NCPoly r(kind_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(x.concat(w).concat(y), c);
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  return kind_ == o.kind_ && terms_ == o.terms_;
}

std::string NCPoly::str(const Alphabet& a) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (!it->first.is_empty()) os << "*" << word_to_string(it->first, a);
  }
  return os.str();
}

int ncpoly_compare(const NCPoly& a, const NCPoly& b) {
  auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    int c = deglex_compare(ia->first, ib->first);
    if (c != 0) return c;
    if (ia->second != ib->second) {
      // Deterministic but otherwise arbitrary coefficient tie-break.
      return ia->second.str() < ib->second.str() ? -1 : 1;
    }
  }
  if (ia == a.terms().rend() && ib == b.terms().rend()) return 0;
  return ia == a.terms().rend() ? -1 : 1;
}

}  // namespace counit
