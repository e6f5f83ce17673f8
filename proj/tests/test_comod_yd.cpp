#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "counit/yetter_drinfeld.hpp"

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

// Brute-force Sweedler triple expansion of a word, written independently of
// the production comultiply path: enumerate both index paths directly.
TensorCubeElement naive_delta2(const BilinearFormHopf& H, const Word& w) {
  FieldKind k = H.kind();
  int n = H.n();
  TensorCubeElement out(k);
  int m = w.size();
  std::vector<int> ks(m, 0), ls(m, 0);
  auto bump = [&](std::vector<int>& v) {
    int i = m - 1;
    while (i >= 0 && ++v[i] == n) v[i--] = 0;
    return i >= 0;
  };
  if (m == 0) {
    out.add_term(Word3{Word::empty(), Word::empty(), Word::empty()}, Scalar::one(k));
    return out;
  }
  do {
    do {
      Word a, b, c;
      for (int t = 0; t < m; ++t) {
        int i = w.l[t] / n, j = w.l[t] % n;
        a.l.push_back(H.gen(i, ks[t]));
        b.l.push_back(H.gen(ks[t], ls[t]));
        c.l.push_back(H.gen(ls[t], j));
      }
      NCPoly na = H.nf(NCPoly::word(a, k)), nb = H.nf(NCPoly::word(b, k)),
             nc = H.nf(NCPoly::word(c, k));
      for (const auto& [wa, ca] : na.terms())
        for (const auto& [wb, cb] : nb.terms())
          for (const auto& [wc, cc] : nc.terms())
            out.add_term(Word3{wa, wb, wc}, ca * cb * cc);
    } while (bump(ls));
    std::fill(ls.begin(), ls.end(), 0);
  } while (bump(ks));
  return out;
}

}  // namespace

TEST_CASE("comodule constructions and axioms") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 4);
  Comodule triv = Comodule::trivial(H);
  CHECK(triv.dim() == 1);
  Comodule V = Comodule::fundamental(H);
  CHECK(V.dim() == 2);
  CHECK(V.corep(0, 1) == H.u(0, 1));
  Comodule Vd = Comodule::dual(V);
  CHECK(Vd.corep(0, 1) == H.antipode_gen(1, 0));
  Comodule VdV = Comodule::tensor(Vd, V);
  CHECK(VdV.dim() == 4);
  // Entries S(u_ik) u_lj; axioms were verified at construction, spot check one.
  CHECK(VdV.corep(0 * 2 + 1, 1 * 2 + 0) == H.nf(H.antipode_gen(1, 0) * H.u(1, 0)));
  CHECK(VdV.corep_degree() == 2);
}

TEST_CASE("intertwiner spaces over Q(q)") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 4);
  Comodule triv = Comodule::trivial(H);
  Comodule V = Comodule::fundamental(H);
  Comodule Vd = Comodule::dual(V);
  Comodule VV = Comodule::tensor(V, V);

  // Hom(C, V (x) V) is spanned by delta: 1 |-> sum E^{-1}_{ij} e_i (x) e_j.
  auto homCVV = intertwiner_space(triv, VV);
  REQUIRE(homCVV.size() == 1);
  FieldMatrix Einv = Eq().inverse();
  Scalar ratio = Scalar::zero(QF);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (Einv.at(i, j).is_zero()) {
        CHECK(homCVV[0].at(i * 2 + j, 0).is_zero());
      } else {
        Scalar r = homCVV[0].at(i * 2 + j, 0) / Einv.at(i, j);
        if (ratio.is_zero())
          ratio = r;
        else
          CHECK(ratio == r);
      }
    }
  CHECK(!ratio.is_zero());

  // Hom(V, V*) is spanned by phi: e_i |-> sum_k E_ik e_k*.
  auto homVVd = intertwiner_space(V, Vd);
  REQUIRE(homVVd.size() == 1);
  // phi(e_1) for E_q equals e_2* up to the basis normalization.
  CHECK(homVVd[0].at(0, 0).is_zero());
  CHECK(!homVVd[0].at(1, 0).is_zero());

  // Hom(V, V) = span{ id }.
  auto homVV = intertwiner_space(V, V);
  REQUIRE(homVV.size() == 1);
  CHECK(homVV[0].at(0, 0) == homVV[0].at(1, 1));
  CHECK(homVV[0].at(0, 1).is_zero());
  CHECK(homVV[0].at(1, 0).is_zero());
}

TEST_CASE("colinear generators") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 4);
  ColinearGenerators cg = colinear_generators(H);
  // delta over I_2: 1 |-> e_1 (x) e_1 + e_2 (x) e_2.
  BilinearFormHopf HI = BilinearFormHopf::build(FieldMatrix::identity(2, QQ), 4);
  ColinearGenerators cgi = colinear_generators(HI);
  CHECK(cgi.delta.T.at(0, 0) == Scalar::one(QQ));
  CHECK(cgi.delta.T.at(3, 0) == Scalar::one(QQ));
  CHECK(cgi.delta.T.at(1, 0).is_zero());
  // phi(e_1) for E_q = E_{11} e_1* + E_{12} e_2* = e_2*.
  CHECK(cg.phi.T.at(0, 0).is_zero());
  CHECK(cg.phi.T.at(1, 0) == Scalar::one(QF));
  // Phi_V^2(e_1* (x) e_2* (x) e_1 (x) e_2) = e_2* (x) e_1 (x) u_12.
  int src = ((0 * 2 + 1) * 2 + 0) * 2 + 1;
  CHECK(cg.PhiV2.C[1 * 2 + 0][src] == H.u(0, 1));
  for (int r = 0; r < 4; ++r)
    if (r != 2) CHECK(cg.PhiV2.C[r][src].is_zero());
  // Phi_V^1 sends e_i* (x) e_j to u_ij.
  CHECK(cg.PhiV1.C[0][0 * 2 + 1] == H.u(0, 1));
}

TEST_CASE("boxtimes coaction against the brute-force Sweedler oracle") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 5);
  FieldKind k = QF;
  Comodule V = Comodule::fundamental(H);
  Comodule VdV = Comodule::tensor(Comodule::dual(V), V);
  FreeYDModule M(VdV);

  // coaction of v (x) 1 is v_(0) (x) 1 (x) v_(1)
  for (int g = 0; g < 4; ++g) {
    auto co = M.coact(M.basis(g, Word::empty()));
    for (int h = 0; h < 4; ++h) {
      TensorSquareElement want(k);
      for (const auto& [w, c] : VdV.corep(h, g).terms()) want.add_term(Word2{Word::empty(), w}, c);
      CHECK(co[h] == want);
    }
  }

  // coaction on e_1* (x) e_1 (x) u_11 against an independent Sweedler
  // expansion of Delta^2(u_11).
  Word w = Word::single(H.gen(0, 0));
  auto co = M.coact(M.basis(0, w));
  TensorCubeElement d2 = naive_delta2(H, w);
  std::vector<TensorSquareElement> want(4, TensorSquareElement(k));
  for (const auto& [t, c] : d2.terms()) {
    NCPoly s1 = H.antipode(NCPoly::word(t.a, k));
    for (int h = 0; h < 4; ++h) {
      NCPoly leg = H.nf(s1 * VdV.corep(h, 0) * NCPoly::word(t.c, k));
      for (const auto& [y, cy] : leg.terms()) want[h].add_term(Word2{t.b, y}, c * cy);
    }
  }
  for (int h = 0; h < 4; ++h) CHECK(co[h] == want[h]);

  // A_coad coaction on a generator: u_ij |-> u_kl (x) S(u_ik) u_lj.
  FreeYDModule coad{Comodule::trivial(H)};
  auto coc = coad.coact(coad.basis(0, w));
  TensorSquareElement expect(k);
  for (int kk = 0; kk < 2; ++kk)
    for (int l = 0; l < 2; ++l) {
      NCPoly leg = H.nf(H.antipode_gen(0, kk) * H.u(l, 0));
      for (const auto& [y, cy] : leg.terms())
        expect.add_term(Word2{Word::single(H.gen(kk, l)), y}, cy);
    }
  CHECK(coc[0] == expect);
}

TEST_CASE("yd axiom check and negative control") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 5);
  FreeYDModule coad{Comodule::trivial(H)};
  YDCheckReport r = yd_axiom_check(coad, 1);
  CHECK(r.pass);
  CHECK(r.pairs_checked == 5 * 4);

  BilinearFormHopf HI = BilinearFormHopf::build(FieldMatrix::identity(2, QQ), 6);
  Comodule V = Comodule::fundamental(HI);
  FreeYDModule M{Comodule::tensor(Comodule::dual(V), V)};
  CHECK(yd_axiom_check(M, 1).pass);

  YDCheckReport bad = YDTestAccess::corrupted_check(coad, 1);
  CHECK(!bad.pass);
}

TEST_CASE("adjunction lifts") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 4);
  ColinearGenerators cg = colinear_generators(H);
  FreeModuleMap lift = adjunction_lift(cg.PhiV1);
  // Lift of Phi_V^1 sends (e_i* (x) e_j) (x) x to u_ij x.
  YDElement x = lift.src->basis(0 * 2 + 1, Word::single(H.gen(1, 1)));
  YDElement y = lift.apply(x);
  CHECK(y.comps[0] == H.nf(H.u(0, 1) * H.u(1, 1)));
  CHECK(lift.colinear_on_generators());

  // Lifted maps compose with underlying-composition on the comodule side:
  // lift(ev) o (inclusion by unit) tested through the identity on A_coad.
  FreeModuleMap id0 = FreeModuleMap::identity(lift.tgt);
  CHECK(id0.compose(lift).equal_coefficients(lift));

  // Naturality sample: h o lift(f) = lift(underlying(h) o f) for h = lift(ev).
  FreeModuleMap lev = adjunction_lift(cg.evaluation);
  FreeModuleMap comp = lev.compose(adjunction_lift(cg.PhiV2));
  // underlying(lev) o PhiV2 on the comodule side: e_i* e_j* e_k e_l |-> delta_jk u_il.
  IntoFreeMap direct{cg.V4, lev.tgt, comp.C};
  FreeModuleMap lifted_direct = adjunction_lift(direct);
  CHECK(comp.equal_coefficients(lifted_direct));

  // NotColinear rejection: a random non-colinear map.
  std::vector<std::vector<NCPoly>> badC(1, std::vector<NCPoly>(4, NCPoly(QF)));
  badC[0][0] = H.u(0, 1);
  IntoFreeMap bad{cg.VdV, cg.coad, badC};
  CHECK(!bad.is_colinear());
  CHECK_THROWS_AS(adjunction_lift(bad), Error);
}

TEST_CASE("box powers") {
  BilinearFormHopf H = BilinearFormHopf::build(Eq(), 5);
  FieldKind k = QF;
  // n=1 equals the coadjoint coaction.
  Word w = Word::single(H.gen(0, 0));
  FreeYDModule coad{Comodule::trivial(H)};
  auto viaModule = coad.coact(coad.basis(0, w))[0];
  BoxElem closed = box_coaction_closed(H, {w});
  TensorSquareElement as2(k);
  for (const auto& [t, c] : closed) as2.add_term(Word2{t[0], t[1]}, c);
  CHECK(as2 == viaModule);

  // eps-degenerate element 1 (x) 1 goes to 1 (x) 1 (x) 1.
  BoxElem unit2 = box_coaction_closed(H, {Word::empty(), Word::empty()});
  REQUIRE(unit2.size() == 1);
  CHECK(unit2.begin()->first == WordTuple({Word::empty(), Word::empty(), Word::empty()}));
  CHECK(unit2.begin()->second == Scalar::one(k));

  // n=2: closed formula matches the iterated boxtimes coaction on u_11 (x) u_22.
  WordTuple t{Word::single(H.gen(0, 0)), Word::single(H.gen(1, 1))};
  CHECK(box_coaction_closed(H, t) == box_coaction_iterated(H, t));
  WordTuple t2{Word::single(H.gen(0, 1)), Word::single(H.gen(1, 0))};
  CHECK(box_coaction_closed(H, t2) == box_coaction_iterated(H, t2));

  // The bar differential is a YD morphism for A^{bx 2} -> A^{bx 1} and
  // A^{bx 3} -> A^{bx 2} on degree <= 1 words.
  CHECK(bar_differential_is_colinear(H, 2, 1));
  BilinearFormHopf HI = BilinearFormHopf::build(FieldMatrix::identity(2, QQ), 5);
  CHECK(bar_differential_is_colinear(HI, 2, 1));
  BilinearFormHopf H6 = BilinearFormHopf::build(Eq(), 6);
  CHECK(bar_differential_is_colinear(H6, 3, 1));
}
