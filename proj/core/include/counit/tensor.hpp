#pragma once

#include <map>

#include "counit/ncpoly.hpp"

namespace counit {

struct Word2 {
  Word a, b;
  bool operator==(const Word2& o) const { return a == o.a && b == o.b; }
};
struct Word3 {
  Word a, b, c;
  bool operator==(const Word3& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct Word2Less {
  bool operator()(const Word2& x, const Word2& y) const {
    int c = deglex_compare(x.a, y.a);
    if (c) return c < 0;
    return deglex_compare(x.b, y.b) < 0;
  }
};
struct Word3Less {
  bool operator()(const Word3& x, const Word3& y) const {
    int c = deglex_compare(x.a, y.a);
    if (c) return c < 0;
    c = deglex_compare(x.b, y.b);
    if (c) return c < 0;
    return deglex_compare(x.c, y.c) < 0;
  }
};

// Elements of A (x) A and A (x) A (x) A with both legs in normal form.
template <typename Key, typename Less>
class TensorPoly {
 public:
  using Terms = std::map<Key, Scalar, Less>;

  explicit TensorPoly(FieldKind k = FieldKind::rationals) : kind_(k) {}

  FieldKind kind() const { return kind_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Key& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  bool operator==(const TensorPoly& o) const { return kind_ == o.kind_ && terms_ == o.terms_; }
  bool operator!=(const TensorPoly& o) const { return !(*this == o); }

 private:
  FieldKind kind_;
  Terms terms_;
};

using TensorSquareElement = TensorPoly<Word2, Word2Less>;
using TensorCubeElement = TensorPoly<Word3, Word3Less>;

}  // namespace counit
