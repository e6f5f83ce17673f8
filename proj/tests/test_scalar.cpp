#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "counit/matrix.hpp"
#include "counit/scalar.hpp"

using namespace counit;

namespace {

const FieldKind QF = FieldKind::rational_functions_in_q;
const FieldKind QQ = FieldKind::rationals;

Scalar S(const char* text, FieldKind k = QF) { return Scalar::parse(text, k); }

// Independent naive polynomial multiply used as the canonicalization oracle:
// a/b == c/d over Q(q) iff a*d == c*b as raw integer polynomials.
IntPoly naive_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

bool cross_equal(const Scalar& x, const Scalar& y) {
  return naive_mul(x.num(), y.den()) == naive_mul(y.num(), x.den());
}

Scalar random_scalar(std::mt19937& rng, FieldKind k) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, k == QF ? 2 : 0);
  auto mkpoly = [&]() {
    IntPoly p(deg(rng) + 1, mpz_class(0));
    for (auto& c : p) c = coef(rng);
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  };
  IntPoly den;
  while (den.empty()) den = mkpoly();
  return Scalar::from_poly(mkpoly(), den, k);
}

}  // namespace

TEST_CASE("scalar literals parse and cancel") {
  // add(q/(q-1), -1/(q-1)) = 1
  CHECK(S("q/(q-1)") + S("-1/(q-1)") == Scalar::one(QF));
  // inv(q^2) = 1/q^2
  CHECK(S("q^2").inv() == S("1/q^2"));
  CHECK(S("q^2").inv().str() == "1/q^2");
  // eq((q^2-1)/(q-1), q+1), with the gcd cancellation cross-checked naively
  Scalar a = S("(q^2-1)/(q-1)"), b = S("q+1");
  CHECK(cross_equal(a, b));
  CHECK(a == b);
  CHECK(S("-(q+1)/q^2") == S("(-q-1)/q^2"));
  CHECK(S("2/4", QQ) == S("1/2", QQ));
}

TEST_CASE("parse errors and field guards") {
  CHECK_THROWS_AS(Scalar::parse("q", QQ), Error);
  CHECK_THROWS_AS(Scalar::parse("1+", QF), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0", QF), Error);
  CHECK_THROWS_AS(Scalar::parse("(q", QF), Error);
  CHECK_THROWS_AS(Scalar::one(QQ) + Scalar::one(QF), Error);
  CHECK_THROWS_AS(Scalar::zero(QF).inv(), Error);
}

TEST_CASE("canonical form idempotence via print/reparse") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar x = random_scalar(rng, QF);
    Scalar y = Scalar::parse(x.str(), QF);
    CHECK(x == y);
    CHECK(x.str() == y.str());
  }
  for (int i = 0; i < 50; ++i) {
    Scalar x = random_scalar(rng, QQ);
    CHECK(Scalar::parse(x.str(), QQ) == x);
  }
}

TEST_CASE("field axioms on randomized scalars") {
  std::mt19937 rng(11);
  for (int i = 0; i < 120; ++i) {
    Scalar a = random_scalar(rng, QF), b = random_scalar(rng, QF), c = random_scalar(rng, QF);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(QF));
  }
}

TEST_CASE("specialization is a field homomorphism") {
  std::mt19937 rng(13);
  Scalar r = Scalar::fraction(3, 2, QQ);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(rng, QF), b = random_scalar(rng, QF);
    try {
      Scalar sa = a.specialize(r), sb = b.specialize(r);
      CHECK(sa + sb == (a + b).specialize(r));
      CHECK(sa * sb == (a * b).specialize(r));
      if (!sa.is_zero()) CHECK(a.inv().specialize(r) == sa.inv());
      ++checked;
    } catch (const Error& e) {
      // A random denominator may vanish at the sample point; skip those.
      CHECK(e.code() == errc::zero_inverse);
    }
  }
  CHECK(checked > 50);
  CHECK(S("q^2+q").specialize(Scalar::integer(2, QQ)) == Scalar::integer(6, QQ));
  CHECK_THROWS_AS(S("1/(q-1)").specialize(Scalar::integer(1, QQ)), Error);
}

namespace {

FieldMatrix mat2(const char* a, const char* b, const char* c, const char* d, FieldKind k = QF) {
  FieldMatrix m(2, 2, k);
  m.at(0, 0) = Scalar::parse(a, k);
  m.at(0, 1) = Scalar::parse(b, k);
  m.at(1, 0) = Scalar::parse(c, k);
  m.at(1, 1) = Scalar::parse(d, k);
  return m;
}

FieldMatrix Eq() { return mat2("0", "1", "-1/q", "0"); }

FieldMatrix J4() {
  FieldMatrix m(4, 4, QQ);
  for (int i = 0; i < 2; ++i) {
    m.at(i, i + 2) = Scalar::one(QQ);
    m.at(i + 2, i) = -Scalar::one(QQ);
  }
  return m;
}

}  // namespace

TEST_CASE("matrix inverse against the 2x2 closed formula") {
  FieldMatrix E = Eq();
  // Oracle: [[a,b],[c,d]]^{-1} = [[d,-b],[-c,a]]/det, det = -(-1/q) = 1/q
  Scalar det = E.at(0, 0) * E.at(1, 1) - E.at(0, 1) * E.at(1, 0);
  FieldMatrix expect(2, 2, QF);
  expect.at(0, 0) = E.at(1, 1) / det;
  expect.at(0, 1) = -E.at(0, 1) / det;
  expect.at(1, 0) = -E.at(1, 0) / det;
  expect.at(1, 1) = E.at(0, 0) / det;
  FieldMatrix inv = E.inverse();
  CHECK(inv == expect);
  CHECK(inv == mat2("0", "-q", "1", "0"));
  CHECK((E * inv).is_identity());
  CHECK((inv * E).is_identity());
}

TEST_CASE("matrix ops basics") {
  FieldMatrix I3 = FieldMatrix::identity(3, QQ);
  CHECK(I3.transpose() == I3);
  CHECK(I3.trace() == Scalar::integer(3, QQ));
  FieldMatrix sing(2, 2, QQ);
  sing.at(0, 0) = Scalar::one(QQ);
  CHECK_THROWS_AS(sing.inverse(), Error);
  FieldMatrix a(2, 3, QQ), b(2, 3, QQ);
  CHECK_THROWS_AS(a * b, Error);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    FieldMatrix m(3, 3, QQ);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = random_scalar(rng, QQ);
    try {
      FieldMatrix inv = m.inverse();
      CHECK((m * inv).is_identity());
    } catch (const Error& e) {
      CHECK(e.code() == errc::singular_matrix);
    }
  }
}

TEST_CASE("trace invariant") {
  CHECK(trace_invariant(FieldMatrix::identity(2, QQ)) == Scalar::integer(2, QQ));
  // tr(E_q^{-1} E_q^t) = -q - q^{-1}
  CHECK(trace_invariant(Eq()) == S("-q-1/q"));
  CHECK(trace_invariant(Eq()) == S("(-q^2-1)/q"));
  // J^{-1} J^t = -I for the antisymmetric J_4
  CHECK(trace_invariant(J4()) == Scalar::integer(-4, QQ));
  FieldMatrix sing(2, 2, QQ);
  CHECK_THROWS_AS(trace_invariant(sing), Error);
}
