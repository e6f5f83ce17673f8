#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "counit/hopf.hpp"

using namespace counit;

namespace {

const FieldKind QF = FieldKind::rational_functions_in_q;
const FieldKind QQ = FieldKind::rationals;

FieldMatrix Eq() {
  FieldMatrix m(2, 2, QF);
  m.at(0, 1) = Scalar::one(QF);
  m.at(1, 0) = -Scalar::q().inv();
  return m;
}

Scalar S(const char* t, FieldKind k = QF) { return Scalar::parse(t, k); }

NCPoly random_poly(const BilinearFormHopf& H, int maxdeg, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), deg(0, maxdeg), coef(-3, 3),
      letter(0, H.n() * H.n() - 1);
  NCPoly p(H.kind());
  for (int t = nterms(rng); t-- > 0;) {
    Word w;
    for (int d = deg(rng); d-- > 0;) w.l.push_back(static_cast<Letter>(letter(rng)));
    p.add_term(w, Scalar::integer(coef(rng), H.kind()));
  }
  return H.nf(p);
}

}  // namespace

TEST_CASE("antipode on generators") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 3);
  // a=u_11, b=u_12, c=u_21, d=u_22: S(a)=d, S(b)=-qb, S(c)=-q^{-1}c, S(d)=a
  CHECK(H.antipode_gen(0, 0) == H.u(1, 1));
  CHECK(H.antipode_gen(0, 1) == H.u(0, 1).scaled(S("-q")));
  CHECK(H.antipode_gen(1, 0) == H.u(1, 0).scaled(S("-1/q")));
  CHECK(H.antipode_gen(1, 1) == H.u(0, 0));

  BilinearFormHopf HI = BilinearFormHopf::build(FieldMatrix::identity(2, QQ), 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(HI.antipode_gen(i, j) == HI.u(j, i));

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Scalar want = i == j ? Scalar::one(QF) : Scalar::zero(QF);
      CHECK(H.counit(H.u(i, j)) == want);
    }
  CHECK_THROWS_AS(BilinearFormHopf::build(FieldMatrix::identity(1, QQ), 3), Error);
}

TEST_CASE("comultiplication") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 4);
  CHECK(H.comultiply(NCPoly::unit(QF)).terms().size() == 1);
  TensorSquareElement d = H.comultiply(H.u(0, 0));
  TensorSquareElement want(QF);
  want.add_term(Word2{Word::single(H.gen(0, 0)), Word::single(H.gen(0, 0))}, Scalar::one(QF));
  want.add_term(Word2{Word::single(H.gen(0, 1)), Word::single(H.gen(1, 0))}, Scalar::one(QF));
  CHECK(d == want);
  // counit axiom on random elements
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) {
    NCPoly p = random_poly(H, 2, rng);
    NCPoly lhs(QF);
    TensorSquareElement dp = H.comultiply(p);
    for (const auto& [t, c] : dp.terms())
      lhs += NCPoly::word(t.b, QF).scaled(c * H.counit(NCPoly::word(t.a, QF)));
    CHECK(lhs == p);
  }
  // bialgebra compatibility on random pairs
  for (int i = 0; i < 12; ++i) {
    NCPoly p = random_poly(H, 1, rng), r = random_poly(H, 1, rng);
    TensorSquareElement dp = H.comultiply(p), dr = H.comultiply(r);
    TensorSquareElement prod(QF);
    for (const auto& [t1, c1] : dp.terms())
      for (const auto& [t2, c2] : dr.terms()) {
        NCPoly la = H.nf(NCPoly::word(t1.a, QF) * NCPoly::word(t2.a, QF));
        NCPoly lb = H.nf(NCPoly::word(t1.b, QF) * NCPoly::word(t2.b, QF));
        for (const auto& [wa, ca] : la.terms())
          for (const auto& [wb, cb] : lb.terms()) prod.add_term(Word2{wa, wb}, c1 * c2 * ca * cb);
      }
    CHECK(prod == H.comultiply(H.nf(p * r)));
    CHECK(H.counit(H.nf(p * r)) == H.counit(p) * H.counit(r));
  }
}

TEST_CASE("antipode axiom and S^2") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 3);
  CHECK(H.antipode(NCPoly::unit(QF)) == NCPoly::unit(QF));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      NCPoly acc(QF);
      TensorSquareElement d = H.comultiply(H.u(i, j));
      for (const auto& [t, c] : d.terms())
        acc += H.nf(H.antipode(NCPoly::word(t.a, QF)) * NCPoly::word(t.b, QF)).scaled(c);
      NCPoly want = i == j ? NCPoly::unit(QF) : NCPoly::zero(QF);
      CHECK(acc == want);
    }
  // S^2 = Phi * id * Phi^{-1}: S^2(u) = (E^{-1}E^t) u (E^{-1}E^t)^{-1} entrywise
  FieldMatrix Phi = H.Einv() * H.E().transpose();
  FieldMatrix PhiInv = Phi.inverse();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      NCPoly want(QF);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) want += H.u(a, b).scaled(Phi.at(i, a) * PhiInv.at(b, j));
      CHECK(H.antipode(H.antipode_gen(i, j)) == H.nf(want));
    }
}

TEST_CASE("hopf axiom suite") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 4);
  HopfAxiomReport rep = H.verify_axioms(2);
  CHECK(rep.all_pass());
  CHECK(rep.words_checked == 14);

  BilinearFormHopf HI3 = BilinearFormHopf::build(FieldMatrix::identity(3, QQ), 2);
  CHECK(HI3.verify_axioms(1).all_pass());

  CHECK_THROWS_AS(H.verify_axioms(3), Error);  // 2*3 > certified 4

  // Negative control: drop the E-conjugation from S (use plain transpose).
  BilinearFormHopf bad = BilinearFormHopf::build(Eq(), 4);
  std::vector<std::vector<NCPoly>> st(2, std::vector<NCPoly>(2, NCPoly(QF)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) st[i][j] = bad.u(j, i);
  HopfTestAccess::override_antipode(bad, st);
  HopfAxiomReport brep = bad.verify_axioms(1);
  CHECK(!brep.all_pass());
  CHECK((!brep.antipode_left || !brep.antipode_right));
}

TEST_CASE("characters and convolution") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 3);
  Character eps = counit_character(H);
  CHECK(eps.matrix().is_identity());
  Character phi = sovereign_character(H);
  FieldMatrix want(2, 2, QF);
  want.at(0, 0) = S("-q");
  want.at(1, 1) = S("-1/q");
  CHECK(phi.matrix() == want);
  CHECK(character_from_matrix(H, want) == phi);

  CHECK(char_mul(H, phi, char_inv(H, phi)) == eps);
  CHECK(char_mul(H, eps, phi) == phi);

  BilinearFormHopf HI = BilinearFormHopf::build(FieldMatrix::identity(2, QQ), 3);
  CHECK(sovereign_character(HI) == counit_character(HI));
  CHECK(char_pow(HI, sovereign_character(HI), 2) == counit_character(HI));

  FieldMatrix badm(2, 2, QQ);
  badm.at(0, 0) = Scalar::integer(2, QQ);
  badm.at(1, 1) = Scalar::integer(3, QQ);
  CHECK_THROWS_AS(character_from_matrix(HI, badm), Error);

  // evaluation is multiplicative on normal forms
  std::mt19937 rng(31);
  for (int i = 0; i < 15; ++i) {
    NCPoly p = random_poly(H, 1, rng), r = random_poly(H, 1, rng);
    CHECK(phi.evaluate(H.nf(p * r)) == phi.evaluate(p) * phi.evaluate(r));
  }
}

TEST_CASE("modular automorphism and theta") {
  BilinearFormHopf HI = BilinearFormHopf::build(FieldMatrix::identity(3, QQ), 2);
  ModularMaps mi = modular_maps(HI);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(mi.sigma[i][j] == HI.u(i, j));
  CHECK(mi.s_theta_equals_sigma);

  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 3);
  ModularMaps mm = modular_maps(H);
  // sigma = Phi * id * Phi: sigma(a) = q^2 a, sigma(b) = b, sigma(c) = c,
  // sigma(d) = q^{-2} d for E = E_q.
  CHECK(mm.sigma[0][0] == H.u(0, 0).scaled(S("q^2")));
  CHECK(mm.sigma[0][1] == H.u(0, 1));
  CHECK(mm.sigma[1][0] == H.u(1, 0));
  CHECK(mm.sigma[1][1] == H.u(1, 1).scaled(S("1/q^2")));
  CHECK(mm.s_theta_equals_sigma);
}
