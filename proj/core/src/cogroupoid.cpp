#include "counit/cogroupoid.hpp"

#include <map>
#include <tuple>

#include "counit/resolution.hpp"

namespace counit {

std::vector<NCPoly> BEFAlgebra::relations(const FieldMatrix& E, const FieldMatrix& F) {
  if (E.rows() != E.cols() || F.rows() != F.cols()) fail(errc::shape_error, "E, F must be square");
  if (E.kind() != F.kind()) fail(errc::field_mismatch, "E and F over different fields");
  if (E.rows() < 2 || F.rows() < 2) fail(errc::size_too_small, "sizes must be >= 2");
  int m = E.rows(), n = F.rows();
  FieldKind k = E.kind();
  FieldMatrix Finv = F.inverse();
  auto u = [&](int i, int j) { return NCPoly::generator(static_cast<Letter>(i * n + j), k); };
  std::vector<NCPoly> rels;
  // (F^{-1} u^t E u)_{ij} - delta_ij, i,j < n
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly r(k);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c) r += (u(b, a) * u(c, j)).scaled(Finv.at(i, a) * E.at(b, c));
      if (i == j) r -= NCPoly::unit(k);
      rels.push_back(std::move(r));
    }
  // (u F^{-1} u^t E)_{ij} - delta_ij, i,j < m
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      NCPoly r(k);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < m; ++c) r += (u(i, a) * u(c, b)).scaled(Finv.at(a, b) * E.at(c, j));
      if (i == j) r -= NCPoly::unit(k);
      rels.push_back(std::move(r));
    }
  return rels;
}

BEFAlgebra BEFAlgebra::build(const FieldMatrix& E, const FieldMatrix& F, int D) {
  BEFAlgebra b;
  b.E_ = E;
  b.F_ = F;
  b.m_ = E.rows();
  b.n_ = F.rows();
  b.A_ = std::make_shared<PresentedAlgebra>(PresentedAlgebra::complete(
      Alphabet::matrix_generators(b.m_, b.n_), relations(E, F), D));
  return b;
}

bool nonvanishing_precheck(const FieldMatrix& E, const FieldMatrix& F) {
  if (E.rows() < 2 || F.rows() < 2) return false;
  return trace_invariant(E) == trace_invariant(F);
}

namespace {

// Pairs (word in B(X,Z), word in B(Z,Y)) from Delta_{X,Y}^Z applied to a word
// of B(X,Y); colsY / dimZ resolve the letter index arithmetic.
std::vector<Word2> cog_delta_word(const Word& w, int colsY, int dimZ) {
  std::vector<Word2> acc{Word2{Word::empty(), Word::empty()}};
  for (Letter g : w.l) {
    int i = g / colsY, j = g % colsY;
    std::vector<Word2> next;
    next.reserve(acc.size() * dimZ);
    for (const auto& t : acc)
      for (int k = 0; k < dimZ; ++k)
        next.push_back(Word2{t.a.concat(Word::single(static_cast<Letter>(i * dimZ + k))),
                             t.b.concat(Word::single(static_cast<Letter>(k * colsY + j)))});
    acc = std::move(next);
  }
  return acc;
}

// S_{X,Y}(u^{XY}) = X^{-1} (u^{YX})^t Y, extended anti-multiplicatively;
// resulting elements live in B(Y,X).
NCPoly cog_antipode_word(const Word& w, const FieldMatrix& X, const FieldMatrix& Y,
                         const BEFAlgebra& BYX) {
  FieldKind k = X.kind();
  int colsY = Y.rows();
  FieldMatrix Xinv = X.inverse();
  NCPoly acc = NCPoly::unit(k);
  for (auto it = w.l.rbegin(); it != w.l.rend(); ++it) {
    int i = *it / colsY, j = *it % colsY;
    NCPoly s(k);
    for (int a = 0; a < X.rows(); ++a)
      for (int b = 0; b < Y.rows(); ++b) s += BYX.u(b, a).scaled(Xinv.at(i, a) * Y.at(b, j));
    acc = acc * s;
  }
  return BYX.nf(acc);
}

}  // namespace

CogroupoidCheckReport cogroupoid_maps_check(const FieldMatrix& E, const FieldMatrix& G,
                                            const FieldMatrix& F, int D) {
  CogroupoidCheckReport rep;
  FieldKind k = E.kind();
  BEFAlgebra BEF = BEFAlgebra::build(E, F, D);
  BEFAlgebra BEG = BEFAlgebra::build(E, G, D);
  BEFAlgebra BGF = BEFAlgebra::build(G, F, D);
  BEFAlgebra BFE = BEFAlgebra::build(F, E, D);
  BEFAlgebra BGE = BEFAlgebra::build(G, E, D);
  BEFAlgebra BFG = BEFAlgebra::build(F, G, D);
  BEFAlgebra BEE = BEFAlgebra::build(E, E, D);
  BEFAlgebra BGG = BEFAlgebra::build(G, G, D);
  BEFAlgebra BFF = BEFAlgebra::build(F, F, D);
  int ne = E.rows(), ng = G.rows(), nf = F.rows();

  // Delta_{E,F}^G is an algebra map: relation images reduce to zero in
  // B(E,G) (x) B(G,F).
  rep.delta_algebra_map = true;
  for (const auto& r : BEF.algebra().relations()) {
    TensorSquareElement img(k);
    for (const auto& [w, c] : r.terms())
      for (const auto& pair : cog_delta_word(w, nf, ng)) {
        NCPoly la = BEG.nf(NCPoly::word(pair.a, k));
        NCPoly lb = BGF.nf(NCPoly::word(pair.b, k));
        for (const auto& [wa, ca] : la.terms())
          for (const auto& [wb, cb] : lb.terms()) img.add_term(Word2{wa, wb}, c * ca * cb);
      }
    if (!img.is_zero()) {
      rep.delta_algebra_map = false;
      rep.failures.push_back("Delta_{E,F}^G does not kill a defining relation");
    }
  }

  // Counit laws on generators: eps_F(a_(2)^{FF}) a_(1)^{EF} = a^{EF} and
  // eps_E(a_(1)^{EE}) a_(2)^{EF} = a^{EF}.
  rep.counit_laws = true;
  auto eps_word = [](const Word& w, int cols) {
    for (Letter g : w.l)
      if (g / cols != g % cols) return false;
    return true;
  };
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < nf; ++j) {
      NCPoly lhs1(k), lhs2(k);
      for (const auto& pair : cog_delta_word(Word::single(BEF.gen(i, j)), nf, nf))
        if (eps_word(pair.b, nf)) lhs1 += NCPoly::word(pair.a, k);
      for (const auto& pair : cog_delta_word(Word::single(BEF.gen(i, j)), nf, ne))
        if (eps_word(pair.a, ne)) lhs2 += NCPoly::word(pair.b, k);
      if (lhs1 != BEF.u(i, j) || lhs2 != BEF.u(i, j)) {
        rep.counit_laws = false;
        rep.failures.push_back("counit law fails on a generator");
      }
    }

  // Coassociativity instances on generators:
  // (Delta_{E,G}^G (x) 1) Delta_{E,F}^G == (1 (x) Delta_{G,F}^G) Delta_{E,F}^G
  rep.coassociativity = true;
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < nf; ++j) {
      TensorCubeElement lhs(k), rhs(k);
      for (const auto& pair : cog_delta_word(Word::single(BEF.gen(i, j)), nf, ng)) {
        for (const auto& p2 : cog_delta_word(pair.a, ng, ng))
          lhs.add_term(Word3{p2.a, p2.b, pair.b}, Scalar::one(k));
        for (const auto& p2 : cog_delta_word(pair.b, nf, ng))
          rhs.add_term(Word3{pair.a, p2.a, p2.b}, Scalar::one(k));
      }
      if (lhs != rhs) {
        rep.coassociativity = false;
        rep.failures.push_back("coassociativity instance fails on a generator");
      }
    }

  // Antipode laws for the pairs (X,Y) of the triple, on generators of B(X,X):
  //   S_{X,Y}(a_(1)^{XY}) a_(2)^{YX} = eps_X(a^{XX}) 1   in B(Y,X)
  //   a_(1)^{XY} S_{Y,X}(a_(2)^{YX}) = eps_X(a^{XX}) 1   in B(X,Y)
  rep.antipode_left = rep.antipode_right = true;
  struct PairCase {
    const FieldMatrix *X, *Y;
    const BEFAlgebra *BXX, *BXY, *BYX;
    int dimX, dimY;
  };
  std::vector<PairCase> cases{{&E, &F, &BEE, &BEF, &BFE, ne, nf},
                              {&E, &G, &BEE, &BEG, &BGE, ne, ng},
                              {&G, &F, &BGG, &BGF, &BFG, ng, nf}};
  for (const auto& pc : cases) {
    for (int i = 0; i < pc.dimX; ++i)
      for (int j = 0; j < pc.dimX; ++j) {
        NCPoly left(k), right(k);
        for (const auto& pair :
             cog_delta_word(Word::single(pc.BXX->gen(i, j)), pc.dimX, pc.dimY)) {
          // pair.a in B(X,Y), pair.b in B(Y,X)
          left += pc.BYX->nf(cog_antipode_word(pair.a, *pc.X, *pc.Y, *pc.BYX) *
                             NCPoly::word(pair.b, k));
          right += pc.BXY->nf(NCPoly::word(pair.a, k) *
                              cog_antipode_word(pair.b, *pc.Y, *pc.X, *pc.BXY));
        }
        NCPoly want = i == j ? NCPoly::unit(k) : NCPoly::zero(k);
        if (pc.BYX->nf(left) != want) {
          rep.antipode_left = false;
          rep.failures.push_back("left antipode law fails");
        }
        if (pc.BXY->nf(right) != want) {
          rep.antipode_right = false;
          rep.failures.push_back("right antipode law fails");
        }
      }
  }
  return rep;
}

// --- transport diagrams ---------------------------------------------------------

namespace {

// Element of W (x) B(E) (x) B(E,F): base index, word in B(E), word in B(E,F).
using TKey = std::tuple<int, Word, Word>;
struct TKeyLess {
  bool operator()(const TKey& a, const TKey& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    int c = deglex_compare(std::get<1>(a), std::get<1>(b));
    if (c) return c < 0;
    return deglex_compare(std::get<2>(a), std::get<2>(b)) < 0;
  }
};
using TElem = std::map<TKey, Scalar, TKeyLess>;

void tadd(TElem& m, const TKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = m.try_emplace(key, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

struct TransportContext {
  const BilinearFormHopf *HE, *HF;
  const FreeYDComplex *CE, *CF;
  const BEFAlgebra *BEF, *BFE;
  int ne, nf;

  // y^{FF} |-> y_(1)^{FE} (x) y_(2)^{EE} (x) y_(3)^{EF}
  std::vector<std::pair<Word3, Scalar>> triple_split(const Word& y) const {
    std::vector<std::pair<Word3, Scalar>> out;
    for (const auto& p1 : cog_delta_word(y, nf, ne))        // B(F,E) (x) B(E,F)
      for (const auto& p2 : cog_delta_word(p1.b, nf, ne))   // B(E,E) (x) B(E,F)
        out.push_back({Word3{p1.a, p2.a, p2.b}, Scalar::one(HE->kind())});
    return out;
  }

  // C boxtimes B(F) column: 1 (x) y |-> y_(2)^{EE} (x) S_{FE}(y_(1)) y_(3).
  TElem vertical_trivial(const NCPoly& y) const {
    FieldKind k = HE->kind();
    TElem out;
    for (const auto& [w, c] : y.terms())
      for (const auto& [t3, c3] : triple_split(w)) {
        NCPoly se = cog_antipode_word(t3.a, HF->E(), HE->E(), *BEF);
        NCPoly leg = BEF->nf(se * NCPoly::word(t3.c, k));
        NCPoly mid = HE->nf(NCPoly::word(t3.b, k));
        for (const auto& [wm, cm] : mid.terms())
          for (const auto& [wl, cl] : leg.terms()) tadd(out, {0, wm, wl}, c * c3 * cm * cl);
      }
    return out;
  }

  // (V_F* (x) V_F) boxtimes B(F) column:
  // e_i* (x) e_j (x) y |-> sum_{k,l} e_k* (x) e_l (x) y_(2)^{EE}
  //   (x) S_{FE}(y_(1)) S_{FE}(u^{FE}_{ik}) u^{EF}_{lj} y_(3).
  TElem vertical_middle(int i, int j, const NCPoly& y) const {
    FieldKind k = HE->kind();
    TElem out;
    for (const auto& [w, c] : y.terms())
      for (const auto& [t3, c3] : triple_split(w)) {
        NCPoly sy = cog_antipode_word(t3.a, HF->E(), HE->E(), *BEF);
        NCPoly mid = HE->nf(NCPoly::word(t3.b, k));
        for (int kk = 0; kk < ne; ++kk) {
          NCPoly su = cog_antipode_word(Word::single(BFE->gen(i, kk)), HF->E(), HE->E(), *BEF);
          for (int l = 0; l < ne; ++l) {
            NCPoly leg =
                BEF->nf(sy * su * BEF->u(l, j) * NCPoly::word(t3.c, k));
            for (const auto& [wm, cm] : mid.terms())
              for (const auto& [wl, cl] : leg.terms())
                tadd(out, {kk * ne + l, wm, wl}, c * c3 * cm * cl);
          }
        }
      }
    return out;
  }

  // Right B(F)-action on transported elements (the Prop 4.3 formula):
  // (e (x) x^{EE} (x) z^{EF}) <- b^{FF} =
  //   e (x) x b_(2)^{EE} (x) S_{FE}(b_(1)) z b_(3).
  TElem act(const TElem& x, const Word& b) const {
    FieldKind k = HE->kind();
    TElem out;
    for (const auto& [t3, c3] : triple_split(b)) {
      NCPoly sb = cog_antipode_word(t3.a, HF->E(), HE->E(), *BEF);
      for (const auto& [key, c] : x) {
        NCPoly mid = HE->nf(NCPoly::word(std::get<1>(key), k) * NCPoly::word(t3.b, k));
        NCPoly leg = BEF->nf(sb * NCPoly::word(std::get<2>(key), k) * NCPoly::word(t3.c, k));
        for (const auto& [wm, cm] : mid.terms())
          for (const auto& [wl, cl] : leg.terms())
            tadd(out, {std::get<0>(key), wm, wl}, c * c3 * cm * cl);
      }
    }
    return out;
  }

  // Apply phi^E (x) id to a transported element (coefficients act on the
  // B(E) leg by left multiplication).
  TElem apply_phiE(const FreeModuleMap& phi, const TElem& x) const {
    FieldKind k = HE->kind();
    TElem out;
    int rows = phi.tgt->rank();
    for (const auto& [key, c] : x) {
      int g = std::get<0>(key);
      for (int h = 0; h < rows; ++h) {
        const NCPoly& coeff = phi.C[h][g];
        if (coeff.is_zero()) continue;
        NCPoly img = HE->nf(coeff * NCPoly::word(std::get<1>(key), k));
        for (const auto& [wm, cm] : img.terms())
          tadd(out, {h, wm, std::get<2>(key)}, c * cm);
      }
    }
    return out;
  }
};

}  // namespace

TransportReport check_transport_diagrams(const FieldMatrix& E, const FieldMatrix& F, int d) {
  if (!nonvanishing_precheck(E, F))
    fail(errc::trace_mismatch, "trace invariants differ; B(E,F) vanishes");
  FieldKind k = E.kind();
  // The raw Sweedler legs of a degree-(d+1) component all keep its length, so
  // the second-leg products reach degree 2(d+1) + 2.
  int D = std::max(4, 2 * d + 4);
  BilinearFormHopf HE = BilinearFormHopf::build(E, D);
  BilinearFormHopf HF = BilinearFormHopf::build(F, D);
  FreeYDComplex CE = build_counit_resolution(HE);
  FreeYDComplex CF = build_counit_resolution(HF);
  BEFAlgebra BEF = BEFAlgebra::build(E, F, D);
  BEFAlgebra BFE = BEFAlgebra::build(F, E, D);
  TransportContext ctx{&HE, &HF, &CE, &CF, &BEF, &BFE, E.rows(), F.rows()};

  TransportReport rep;
  rep.phi1_diagram = rep.phi2_diagram = rep.phi3_diagram = rep.eps_diagram =
      rep.action_consistency = true;

  std::vector<Word> words = HF.algebra().basis_upto(d);
  int nf2 = F.rows() * F.rows();

  for (const Word& x : words) {
    NCPoly px = NCPoly::word(x, k);
    ++rep.elements_checked;

    // phi1 square: vertical_middle(phi1^F(1 (x) x)) == (phi1^E (x) id)(vertical_trivial(x)).
    {
      TElem right;
      for (int ij = 0; ij < nf2; ++ij) {
        NCPoly comp = HF.nf(CF.phi1.C[ij][0] * px);
        int i = ij / F.rows(), j = ij % F.rows();
        TElem part = ctx.vertical_middle(i, j, comp);
        for (const auto& [key, c] : part) tadd(right, key, c);
      }
      TElem down = ctx.apply_phiE(CE.phi1, ctx.vertical_trivial(px));
      if (right != down) {
        rep.phi1_diagram = false;
        rep.failures.push_back("phi1 square fails on " +
                               word_to_string(x, HF.algebra().alphabet()));
      }
    }

    // phi2 and phi3 squares on each generator slot of the middle module.
    for (int i = 0; i < F.rows(); ++i)
      for (int j = 0; j < F.rows(); ++j) {
        YDElement e = CF.modules[1]->basis(i * F.rows() + j, x);
        // phi2
        {
          YDElement y = CF.phi2.apply(e);
          TElem right;
          for (int ij = 0; ij < nf2; ++ij) {
            TElem part = ctx.vertical_middle(ij / F.rows(), ij % F.rows(), y.comps[ij]);
            for (const auto& [key, c] : part) tadd(right, key, c);
          }
          TElem down = ctx.apply_phiE(CE.phi2, ctx.vertical_middle(i, j, px));
          if (right != down) {
            rep.phi2_diagram = false;
            rep.failures.push_back("phi2 square fails");
          }
        }
        // phi3
        {
          YDElement y = CF.phi3.apply(e);
          TElem right = ctx.vertical_trivial(y.comps[0]);
          TElem down = ctx.apply_phiE(CE.phi3, ctx.vertical_middle(i, j, px));
          if (right != down) {
            rep.phi3_diagram = false;
            rep.failures.push_back("phi3 square fails");
          }
        }
      }

    // eps square: eps_F(x) 1 == (eps_E (x) id)(vertical_trivial(x)).
    {
      NCPoly lhs = NCPoly::scalar(HF.counit(px));
      NCPoly rhs(k);
      for (const auto& [key, c] : ctx.vertical_trivial(px)) {
        Scalar e = HE.counit(NCPoly::word(std::get<1>(key), k));
        if (!e.is_zero()) rhs += NCPoly::word(std::get<2>(key), k).scaled(c * e);
      }
      if (BEF.nf(rhs) != BEF.nf(lhs)) {
        rep.eps_diagram = false;
        rep.failures.push_back("eps square fails");
      }
    }
  }

  // Prop-style action consistency on generators: Psi(g (x) b) == Psi(g (x) 1) <- b.
  for (int s = 0; s < F.rows(); ++s)
    for (int t = 0; t < F.rows(); ++t) {
      Word b = Word::single(HF.gen(s, t));
      NCPoly pb = NCPoly::word(b, k);
      if (ctx.vertical_trivial(pb) != ctx.act(ctx.vertical_trivial(NCPoly::unit(k)), b))
        rep.action_consistency = false;
      for (int i = 0; i < F.rows() && rep.action_consistency; ++i)
        for (int j = 0; j < F.rows(); ++j) {
          TElem lhs = ctx.vertical_middle(i, j, pb);
          TElem rhs = ctx.act(ctx.vertical_middle(i, j, NCPoly::unit(k)), b);
          if (lhs != rhs) {
            rep.action_consistency = false;
            rep.failures.push_back("action consistency fails");
            break;
          }
        }
    }
  return rep;
}

}  // namespace counit
