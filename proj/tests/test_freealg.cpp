#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "counit/matrix.hpp"
#include "counit/presented_algebra.hpp"

using namespace counit;

namespace {

const FieldKind QF = FieldKind::rational_functions_in_q;
const FieldKind QQ = FieldKind::rationals;

// Test-local generation of the bilinear-form relations, kept independent of
// the hopf module: entries of E^{-1} u^t E u - I and u E^{-1} u^t E - I.
std::vector<NCPoly> be_relations(const FieldMatrix& E) {
  int n = E.rows();
  FieldKind k = E.kind();
  FieldMatrix Einv = E.inverse();
  auto u = [&](int i, int j) { return NCPoly::generator(static_cast<Letter>(i * n + j), k); };
  std::vector<NCPoly> rels;
  std::vector<std::vector<NCPoly>> umat(n, std::vector<NCPoly>(n, NCPoly(k)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) umat[i][j] = u(i, j);
  auto matmul = [&](const std::vector<std::vector<NCPoly>>& A,
                    const std::vector<std::vector<NCPoly>>& B) {
    std::vector<std::vector<NCPoly>> C(n, std::vector<NCPoly>(n, NCPoly(k)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) C[i][j] += A[i][l] * B[l][j];
    return C;
  };
  auto scalar_mat = [&](const FieldMatrix& M) {
    std::vector<std::vector<NCPoly>> C(n, std::vector<NCPoly>(n, NCPoly(k)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C[i][j] = NCPoly::scalar(M.at(i, j));
    return C;
  };
  auto ut = [&]() {
    std::vector<std::vector<NCPoly>> C(n, std::vector<NCPoly>(n, NCPoly(k)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C[i][j] = umat[j][i];
    return C;
  }();
  auto lhs1 = matmul(matmul(scalar_mat(Einv), ut), matmul(scalar_mat(E), umat));
  auto lhs2 = matmul(umat, matmul(scalar_mat(Einv), matmul(ut, scalar_mat(E))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly r = lhs1[i][j];
      if (i == j) r -= NCPoly::unit(k);
      rels.push_back(r);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly r = lhs2[i][j];
      if (i == j) r -= NCPoly::unit(k);
      rels.push_back(r);
    }
  return rels;
}

FieldMatrix Eq() {
  FieldMatrix m(2, 2, QF);
  m.at(0, 1) = Scalar::one(QF);
  m.at(1, 0) = -Scalar::q().inv();
  return m;
}

FieldMatrix Eminus1() {
  FieldMatrix m(2, 2, QQ);
  m.at(0, 1) = Scalar::one(QQ);
  m.at(1, 0) = Scalar::one(QQ);
  return m;
}

// Reduction with a randomized strategy; must agree with normal_form by
// confluence inside the certified range.
NCPoly shuffled_reduce(const PresentedAlgebra& A, NCPoly p, std::mt19937& rng) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<Word, Scalar>> terms(p.terms().begin(), p.terms().end());
    std::shuffle(terms.begin(), terms.end(), rng);
    for (const auto& [w, c] : terms) {
      // collect all (pos, rule) occurrences, pick one at random
      std::vector<std::pair<int, int>> occ;
      for (int ri = 0; ri < static_cast<int>(A.rules().size()); ++ri) {
        const Word& lhs = A.rules()[ri].lhs;
        for (int pos = 0; pos + lhs.size() <= w.size(); ++pos) {
          bool ok = true;
          for (int j = 0; j < lhs.size(); ++j)
            if (w.l[pos + j] != lhs.l[j]) {
              ok = false;
              break;
            }
          if (ok) occ.push_back({pos, ri});
        }
      }
      if (occ.empty()) continue;
      auto [pos, ri] = occ[std::uniform_int_distribution<size_t>(0, occ.size() - 1)(rng)];
      const RewriteRule& r = A.rules()[ri];
      Word x = w.subword(0, pos);
      Word y = w.subword(pos + r.lhs.size(), w.size() - pos - r.lhs.size());
      NCPoly repl = r.rhs.framed(x, y).scaled(c);
      NCPoly delta = repl - NCPoly::word(w, p.kind()).scaled(c);
      p += delta;
      changed = true;
      break;
    }
  }
  return p;
}

NCPoly random_poly(const PresentedAlgebra& A, int maxdeg, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4), deg(0, maxdeg), coef(-3, 3),
      letter(0, static_cast<int>(A.alphabet().size()) - 1);
  NCPoly p(A.kind());
  for (int t = nterms(rng); t-- > 0;) {
    Word w;
    for (int d = deg(rng); d-- > 0;) w.l.push_back(static_cast<Letter>(letter(rng)));
    p.add_term(w, Scalar::integer(coef(rng), A.kind()));
  }
  return p;
}

}  // namespace

TEST_CASE("deglex ordering") {
  Word x = Word::single(0), y = Word::single(1);
  CHECK(deglex_compare(x.concat(y), x) > 0);
  CHECK(deglex_compare(x.concat(y), y.concat(x)) < 0);
  // All 16 length-2 words over 4 letters sort in row-major pair order.
  std::vector<Word> words;
  for (Letter a = 0; a < 4; ++a)
    for (Letter b = 0; b < 4; ++b) words.push_back(Word({a, b}));
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end(), DeglexLess{});
  CHECK(sorted == words);
}

TEST_CASE("ncpoly product") {
  FieldKind k = QQ;
  NCPoly x = NCPoly::generator(0, k), y = NCPoly::generator(1, k);
  NCPoly lhs = (x + y) * (x - y);
  NCPoly expect(k);
  expect.add_term(Word({0, 0}), Scalar::one(k));
  expect.add_term(Word({0, 1}), -Scalar::one(k));
  expect.add_term(Word({1, 0}), Scalar::one(k));
  expect.add_term(Word({1, 1}), -Scalar::one(k));
  CHECK(lhs == expect);
  CHECK(x * NCPoly::unit(k) == x);
  std::mt19937 rng(21);
  Alphabet al({"x", "y", "z"});
  PresentedAlgebra freeA = PresentedAlgebra::complete(al, {}, 6);
  for (int i = 0; i < 40; ++i) {
    NCPoly p = random_poly(freeA, 2, rng), r = random_poly(freeA, 2, rng);
    if (p.is_zero() || r.is_zero()) continue;
    CHECK((p * r).degree() == p.degree() + r.degree());
  }
}

TEST_CASE("commutative toy completion") {
  Alphabet al({"x", "y"});
  NCPoly rel(QQ);
  rel.add_term(Word({1, 0}), Scalar::one(QQ));
  rel.add_term(Word({0, 1}), -Scalar::one(QQ));
  PresentedAlgebra A = PresentedAlgebra::complete(al, {rel}, 5);
  CHECK(A.rules().size() == 1);
  CHECK(A.filtration_dims() == std::vector<long>({1, 2, 3, 4, 5, 6}));
  // Oracle: irreducible words are x^a y^b, so slice d has d+1 of them.
  // normal_form(yxx) = xxy
  NCPoly yxx = NCPoly::word(Word({1, 0, 0}), QQ);
  CHECK(A.normal_form(yxx) == NCPoly::word(Word({0, 0, 1}), QQ));
  CHECK(A.normal_form(A.normal_form(yxx)) == A.normal_form(yxx));
  CHECK_THROWS_AS(A.normal_form(NCPoly::word(Word({1, 1, 1, 0, 0, 0}), QQ)), Error);
}

TEST_CASE("B(E_q) truncated completion and filtration") {
  PresentedAlgebra A =
      PresentedAlgebra::complete(Alphabet::matrix_generators(2, 2), be_relations(Eq()), 4);
  // Degree-slice dimensions of O(SL_q(2)) are (d+1)^2 (Peter-Weyl count),
  // so D=2 slices are [1,4,9] (cumulative 14).
  CHECK(A.filtration_dims()[0] == 1);
  CHECK(A.filtration_dims()[1] == 4);
  CHECK(A.filtration_dims()[2] == 9);
  CHECK(A.filtration_dims()[3] == 16);
  CHECK(A.filtration_dims()[4] == 25);
  CHECK(A.dim_upto(2) == 14);
  CHECK(A.filtration_basis(0) == std::vector<Word>{Word::empty()});
  CHECK(A.filtration_basis(1).size() == 4);
  CHECK(A.filtration_basis(2).size() == 9);
  // Defining relations reduce to zero.
  for (const auto& r : be_relations(Eq())) CHECK(A.normal_form(r).is_zero());
  // Idempotence + algebra-map property of nf on random elements.
  std::mt19937 rng(5);
  for (int i = 0; i < 25; ++i) {
    NCPoly p = random_poly(A, 2, rng), r = random_poly(A, 2, rng);
    NCPoly np = A.normal_form(p);
    CHECK(A.normal_form(np) == np);
    CHECK(A.normal_form(p * r) == A.normal_form(A.normal_form(p) * A.normal_form(r)));
  }
}

TEST_CASE("confluence under randomized strategies") {
  PresentedAlgebra A =
      PresentedAlgebra::complete(Alphabet::matrix_generators(2, 2), be_relations(Eq()), 4);
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    NCPoly p = random_poly(A, 4, rng);
    NCPoly nf = A.normal_form(p);
    CHECK(shuffled_reduce(A, p, rng) == nf);
  }
}

TEST_CASE("B(I_2) matches B(E_{-1}) slice dimensions") {
  PresentedAlgebra A =
      PresentedAlgebra::complete(Alphabet::matrix_generators(2, 2),
                                 be_relations(FieldMatrix::identity(2, QQ)), 3);
  PresentedAlgebra B = PresentedAlgebra::complete(Alphabet::matrix_generators(2, 2),
                                                  be_relations(Eminus1()), 3);
  CHECK(A.filtration_dims() == B.filtration_dims());
  CHECK(A.filtration_dims()[2] == 9);
}

TEST_CASE("completion determinism and cache round trip") {
  auto run = [] {
    return PresentedAlgebra::complete(Alphabet::matrix_generators(2, 2), be_relations(Eq()), 3);
  };
  PresentedAlgebra A = run(), B = run();
  CHECK(A.serialize() == B.serialize());
  PresentedAlgebra C = PresentedAlgebra::deserialize(A.serialize());
  CHECK(C.serialize() == A.serialize());
  CHECK(C.filtration_dims() == A.filtration_dims());
  CHECK(C.relations_hash() == A.relations_hash());
  NCPoly p = NCPoly::word(Word({3, 2, 1}), QF);
  CHECK(C.normal_form(p) == A.normal_form(p));
}

TEST_CASE("inconsistent presentation collapses to the zero algebra") {
  // x = 1 and x = 2 force 1 = 0.
  Alphabet al({"x"});
  NCPoly r1(QQ), r2(QQ);
  r1.add_term(Word({0}), Scalar::one(QQ));
  r1.add_term(Word::empty(), -Scalar::one(QQ));
  r2.add_term(Word({0}), Scalar::one(QQ));
  r2.add_term(Word::empty(), -Scalar::integer(2, QQ));
  PresentedAlgebra A = PresentedAlgebra::complete(al, {r1, r2}, 3);
  CHECK(A.is_zero_algebra());
  CHECK(A.normal_form(NCPoly::unit(QQ)).is_zero());
  CHECK(A.filtration_dims() == std::vector<long>({0, 0, 0, 0}));
}
