#include "counit/yetter_drinfeld.hpp"

namespace counit {

YDElement FreeYDModule::zero() const {
  return YDElement{std::vector<NCPoly>(rank(), NCPoly(hopf().kind()))};
}

YDElement FreeYDModule::basis(int g, const Word& w) const {
  YDElement x = zero();
  x.comps[g] = NCPoly::word(w, hopf().kind());
  return x;
}

YDElement FreeYDModule::act(const YDElement& x, const NCPoly& a) const {
  YDElement r = zero();
  for (int g = 0; g < rank(); ++g)
    if (!x.comps[g].is_zero()) r.comps[g] = hopf().algebra().normal_form(x.comps[g] * a);
  return r;
}

int FreeYDModule::coact_degree_budget() const {
  return hopf().algebra().certified_degree() - base_.corep_degree();
}

std::vector<TensorSquareElement> FreeYDModule::coact_impl(const YDElement& x,
                                                          bool drop_antipode_leg) const {
  const BilinearFormHopf& H = hopf();
  FieldKind k = H.kind();
  std::vector<TensorSquareElement> out(rank(), TensorSquareElement(k));
  for (int g = 0; g < rank(); ++g) {
    if (x.comps[g].is_zero()) continue;
    if (x.comps[g].degree() > coact_degree_budget())
      fail(errc::degree_out_of_range, "coaction beyond certified degree");
    TensorCubeElement d2 = H.comultiply2(x.comps[g]);
    for (const auto& [t, c] : d2.terms()) {
      NCPoly s1 = drop_antipode_leg
                      ? (t.a.is_empty() ? NCPoly::unit(k) : NCPoly::zero(k))
                      : H.antipode(NCPoly::word(t.a, k));
      if (s1.is_zero()) continue;
      for (int h = 0; h < rank(); ++h) {
        const NCPoly& rho = base_.corep(h, g);
        if (rho.is_zero()) continue;
        NCPoly leg = H.nf(s1 * rho * NCPoly::word(t.c, k));
        for (const auto& [y, cy] : leg.terms()) out[h].add_term(Word2{t.b, y}, c * cy);
      }
    }
  }
  return out;
}

std::vector<TensorSquareElement> FreeYDModule::coact(const YDElement& x) const {
  return coact_impl(x, false);
}

namespace {

YDCheckReport yd_check_impl(const FreeYDModule& X, int d, bool corrupt) {
  const BilinearFormHopf& H = X.hopf();
  FieldKind k = H.kind();
  int n = H.n();
  YDCheckReport rep;
  if (d + 1 > X.coact_degree_budget() - 1)
    fail(errc::degree_out_of_range, "yd_axiom_check beyond certified degree");
  std::vector<Word> words = H.algebra().basis_upto(d);
  for (int g = 0; g < X.rank(); ++g)
    for (const Word& w : words)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          NCPoly a = H.u(s, t);
          // LHS: coaction of (v <- a)
          YDElement va = X.act(X.basis(g, w), a);
          std::vector<TensorSquareElement> lhs =
              corrupt ? YDTestAccess::corrupted_coact(X, va) : X.coact(va);
          // RHS: v_(0) <- a_(2) (x) S(a_(1)) v_(1) a_(3)
          std::vector<TensorSquareElement> co =
              corrupt ? YDTestAccess::corrupted_coact(X, X.basis(g, w)) : X.coact(X.basis(g, w));
          std::vector<TensorSquareElement> rhs(X.rank(), TensorSquareElement(k));
          for (int h = 0; h < X.rank(); ++h)
            for (const auto& [pair, c] : co[h].terms()) {
              const Word& m = pair.a;
              const Word& y = pair.b;
              for (int kk = 0; kk < n; ++kk)
                for (int l = 0; l < n; ++l) {
                  // Delta^2(u_st) = sum_{k,l} u_sk (x) u_kl (x) u_lt
                  NCPoly mid = H.nf(NCPoly::word(m, k) * H.u(kk, l));
                  NCPoly leg = H.nf(H.antipode_gen(s, kk) * NCPoly::word(y, k) * H.u(l, t));
                  for (const auto& [wm, cm] : mid.terms())
                    for (const auto& [wy, cyv] : leg.terms())
                      rhs[h].add_term(Word2{wm, wy}, c * cm * cyv);
                }
            }
          ++rep.pairs_checked;
          bool ok = true;
          for (int h = 0; h < X.rank(); ++h)
            if (lhs[h] != rhs[h]) ok = false;
          if (!ok) {
            rep.pass = false;
            if (rep.failures.size() < 8)
              rep.failures.push_back("yd compatibility fails on (e_" + std::to_string(g) + ", " +
                                     word_to_string(w, H.algebra().alphabet()) + ") <- u" +
                                     std::to_string(s + 1) + std::to_string(t + 1));
          }
        }
  return rep;
}

}  // namespace

YDCheckReport yd_axiom_check(const FreeYDModule& X, int d) { return yd_check_impl(X, d, false); }

YDCheckReport YDTestAccess::corrupted_check(const FreeYDModule& X, int d) {
  return yd_check_impl(X, d, true);
}

// --- free module maps ---------------------------------------------------------

FreeModuleMap FreeModuleMap::identity(std::shared_ptr<const FreeYDModule> m) {
  FieldKind k = m->hopf().kind();
  int r = m->rank();
  std::vector<std::vector<NCPoly>> C(r, std::vector<NCPoly>(r, NCPoly(k)));
  for (int i = 0; i < r; ++i) C[i][i] = NCPoly::unit(k);
  return FreeModuleMap{m, m, std::move(C)};
}

YDElement FreeModuleMap::apply(const YDElement& x) const {
  const auto& A = src->hopf().algebra();
  YDElement r = tgt->zero();
  for (int g = 0; g < src->rank(); ++g) {
    if (x.comps[g].is_zero()) continue;
    for (int h = 0; h < tgt->rank(); ++h) {
      if (C[h][g].is_zero()) continue;
      r.comps[h] += A.normal_form(C[h][g] * x.comps[g]);
    }
  }
  for (auto& c : r.comps) c = A.normal_form(c);
  return r;
}

FreeModuleMap FreeModuleMap::compose(const FreeModuleMap& inner) const {
  const auto& A = src->hopf().algebra();
  FieldKind k = src->hopf().kind();
  int rows = tgt->rank(), mid = src->rank(), cols = inner.src->rank();
  std::vector<std::vector<NCPoly>> out(rows, std::vector<NCPoly>(cols, NCPoly(k)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      NCPoly acc(k);
      for (int l = 0; l < mid; ++l) acc += C[i][l] * inner.C[l][j];
      out[i][j] = A.normal_form(acc);
    }
  return FreeModuleMap{inner.src, tgt, std::move(out)};
}

FreeModuleMap FreeModuleMap::operator+(const FreeModuleMap& o) const {
  const auto& A = src->hopf().algebra();
  auto out = C;
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out[i].size(); ++j) out[i][j] = A.normal_form(out[i][j] + o.C[i][j]);
  return FreeModuleMap{src, tgt, std::move(out)};
}

FreeModuleMap FreeModuleMap::operator-(const FreeModuleMap& o) const {
  const auto& A = src->hopf().algebra();
  auto out = C;
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out[i].size(); ++j) out[i][j] = A.normal_form(out[i][j] - o.C[i][j]);
  return FreeModuleMap{src, tgt, std::move(out)};
}

bool FreeModuleMap::is_zero_map() const {
  const auto& A = src->hopf().algebra();
  for (const auto& row : C)
    for (const auto& c : row)
      if (!A.normal_form(c).is_zero()) return false;
  return true;
}

bool FreeModuleMap::equal_coefficients(const FreeModuleMap& o) const {
  const auto& A = src->hopf().algebra();
  if (C.size() != o.C.size()) return false;
  for (size_t i = 0; i < C.size(); ++i) {
    if (C[i].size() != o.C[i].size()) return false;
    for (size_t j = 0; j < C[i].size(); ++j)
      if (A.normal_form(C[i][j]) != A.normal_form(o.C[i][j])) return false;
  }
  return true;
}

namespace {

// Shared colinearity check on generators for maps into a free module.
// LHS: coaction of f(e_g) in tgt; RHS: sum_k f(e_k) (x) rho_src(k, g).
bool colinear_into_free(const Comodule& src_base, const FreeYDModule& tgt,
                        const std::vector<std::vector<NCPoly>>& C) {
  FieldKind k = tgt.hopf().kind();
  for (int g = 0; g < src_base.dim(); ++g) {
    YDElement fg = tgt.zero();
    for (int h = 0; h < tgt.rank(); ++h) fg.comps[h] = C[h][g];
    std::vector<TensorSquareElement> lhs = tgt.coact(fg);
    std::vector<TensorSquareElement> rhs(tgt.rank(), TensorSquareElement(k));
    for (int kk = 0; kk < src_base.dim(); ++kk) {
      const NCPoly& rho = src_base.corep(kk, g);
      if (rho.is_zero()) continue;
      for (int h = 0; h < tgt.rank(); ++h)
        for (const auto& [wc, cc] : C[h][kk].terms())
          for (const auto& [wr, cr] : rho.terms()) rhs[h].add_term(Word2{wc, wr}, cc * cr);
    }
    for (int h = 0; h < tgt.rank(); ++h)
      if (lhs[h] != rhs[h]) return false;
  }
  return true;
}

}  // namespace

bool FreeModuleMap::colinear_on_generators() const {
  return colinear_into_free(src->base(), *tgt, C);
}

bool IntoFreeMap::is_colinear() const { return colinear_into_free(src, *tgt, C); }

FreeModuleMap adjunction_lift(const IntoFreeMap& f) {
  if (!f.is_colinear()) fail(errc::not_colinear, "adjunction lift of a non-colinear map");
  auto lifted_src = std::make_shared<FreeYDModule>(f.src);
  FreeModuleMap lift{lifted_src, f.tgt, f.C};
  if (!lift.colinear_on_generators())
    fail(errc::not_colinear, "lifted map failed the generator colinearity check");
  return lift;
}

ColinearGenerators colinear_generators(const BilinearFormHopf& H) {
  FieldKind k = H.kind();
  int n = H.n();
  Comodule triv = Comodule::trivial(H);
  Comodule V = Comodule::fundamental(H);
  Comodule Vd = Comodule::dual(V);
  Comodule VdV = Comodule::tensor(Vd, V);
  Comodule V4 = Comodule::tensor(Comodule::tensor(Vd, Vd), Comodule::tensor(V, V));

  // delta: 1 |-> sum_{i,j} E^{-1}_{ij} e_i (x) e_j in V (x) V
  Comodule VV = Comodule::tensor(V, V);
  FieldMatrix Tdelta(n * n, 1, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Tdelta.at(i * n + j, 0) = H.Einv().at(i, j);
  ComoduleMorphism delta = ComoduleMorphism::make(triv, VV, std::move(Tdelta));

  // phi: e_i |-> sum_k E_{ik} e_k*
  FieldMatrix Tphi(n, n, k);
  for (int kk = 0; kk < n; ++kk)
    for (int i = 0; i < n; ++i) Tphi.at(kk, i) = H.E().at(i, kk);
  ComoduleMorphism phi = ComoduleMorphism::make(V, Vd, std::move(Tphi));

  auto coad = std::make_shared<FreeYDModule>(triv);
  auto middle = std::make_shared<FreeYDModule>(VdV);

  // Phi_V^1: e_i* (x) e_j |-> u_ij in A_coad
  std::vector<std::vector<NCPoly>> C1(1, std::vector<NCPoly>(n * n, NCPoly(k)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C1[0][i * n + j] = H.u(i, j);
  IntoFreeMap PhiV1{VdV, coad, std::move(C1)};

  // Phi_V^2: e_i* (x) e_j* (x) e_k (x) e_l |-> e_j* (x) e_k (x) u_il
  // V4 basis index ((i*n + j)*n + kk)*n + l.
  std::vector<std::vector<NCPoly>> C2(n * n, std::vector<NCPoly>(n * n * n * n, NCPoly(k)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk)
        for (int l = 0; l < n; ++l) C2[j * n + kk][((i * n + j) * n + kk) * n + l] = H.u(i, l);
  IntoFreeMap PhiV2{V4, middle, std::move(C2)};

  // evaluation: e_i* (x) e_j |-> delta_ij 1
  std::vector<std::vector<NCPoly>> Cev(1, std::vector<NCPoly>(n * n, NCPoly(k)));
  for (int i = 0; i < n; ++i) Cev[0][i * n + i] = NCPoly::unit(k);
  IntoFreeMap ev{VdV, coad, std::move(Cev)};

  if (!PhiV1.is_colinear()) fail(errc::not_colinear, "Phi_V^1 is not colinear");
  if (!PhiV2.is_colinear()) fail(errc::not_colinear, "Phi_V^2 is not colinear");
  if (!ev.is_colinear()) fail(errc::not_colinear, "evaluation is not colinear");

  return ColinearGenerators{std::move(triv), std::move(V),     std::move(Vd),
                            std::move(VdV),  std::move(V4),    std::move(delta),
                            std::move(phi),  std::move(PhiV1), std::move(PhiV2),
                            std::move(ev),   coad,             middle};
}

// --- box powers ----------------------------------------------------------------

void box_add(BoxElem& m, const WordTuple& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

BoxElem box_coaction_closed(const BilinearFormHopf& H, const WordTuple& t) {
  FieldKind k = H.kind();
  int n_slots = static_cast<int>(t.size());
  // Per-slot triple coproducts, then the closed formula
  //   a_{1(2)} ... a_{n(2)} (x) S(a_{1(1)} ... a_{n(1)}) a_{1(3)} ... a_{n(3)}
  std::vector<std::vector<std::pair<Word3, Scalar>>> triples(n_slots);
  for (int i = 0; i < n_slots; ++i) {
    TensorCubeElement d2 = H.comultiply2(NCPoly::word(t[i], k));
    for (const auto& [w3, c] : d2.terms()) triples[i].push_back({w3, c});
  }
  BoxElem out;
  std::vector<size_t> pick(n_slots, 0);
  for (;;) {
    Scalar coeff = Scalar::one(k);
    Word legs1, legs3;
    WordTuple mid(n_slots);
    for (int i = 0; i < n_slots; ++i) {
      const auto& [w3, c] = triples[i][pick[i]];
      coeff = coeff * c;
      legs1 = legs1.concat(w3.a);
      mid[i] = w3.b;
      legs3 = legs3.concat(w3.c);
    }
    NCPoly leg = H.nf(H.antipode(NCPoly::word(legs1, k)) * NCPoly::word(legs3, k));
    for (const auto& [y, cy] : leg.terms()) {
      WordTuple key = mid;
      key.push_back(y);
      box_add(out, key, coeff * cy);
    }
    int i = n_slots - 1;
    while (i >= 0 && ++pick[i] == triples[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

BoxElem box_coaction_iterated(const BilinearFormHopf& H, const WordTuple& t) {
  FieldKind k = H.kind();
  if (t.empty()) fail(errc::validation_error, "empty box tuple");
  if (t.size() == 1) return box_coaction_closed(H, t);
  // coact(x (x) a) = x_(0) (x) a_(2) (x) S(a_(1)) x_(1) a_(3), with x in the
  // previous box power.
  WordTuple head(t.begin(), t.end() - 1);
  const Word& a = t.back();
  BoxElem inner = box_coaction_iterated(H, head);
  TensorCubeElement d2 = H.comultiply2(NCPoly::word(a, k));
  BoxElem out;
  for (const auto& [key, c] : inner) {
    // key = (x_(0) slots..., x_(1))
    Word x1 = key.back();
    for (const auto& [w3, c2] : d2.terms()) {
      NCPoly leg = H.nf(H.antipode(NCPoly::word(w3.a, k)) * NCPoly::word(x1, k) *
                        NCPoly::word(w3.c, k));
      for (const auto& [y, cy] : leg.terms()) {
        WordTuple nk(key.begin(), key.end() - 1);
        nk.push_back(w3.b);
        nk.push_back(y);
        box_add(out, nk, c * c2 * cy);
      }
    }
  }
  return out;
}

BoxElem bar_differential(const BilinearFormHopf& H, const WordTuple& t) {
  FieldKind k = H.kind();
  int n = static_cast<int>(t.size());
  if (n < 1) fail(errc::validation_error, "bar differential needs at least one slot");
  BoxElem out;
  // eps(a_1) a_2 (x) ... (x) a_n
  {
    Scalar e = H.counit(NCPoly::word(t[0], k));
    if (!e.is_zero()) box_add(out, WordTuple(t.begin() + 1, t.end()), e);
  }
  Scalar sign = Scalar::one(k);
  for (int i = 0; i + 1 < n; ++i) {
    sign = -sign;
    NCPoly prod = H.nf(NCPoly::word(t[i], k) * NCPoly::word(t[i + 1], k));
    for (const auto& [w, c] : prod.terms()) {
      WordTuple nk;
      nk.insert(nk.end(), t.begin(), t.begin() + i);
      nk.push_back(w);
      nk.insert(nk.end(), t.begin() + i + 2, t.end());
      box_add(out, nk, sign * c);
    }
  }
  return out;
}

bool bar_differential_is_colinear(const BilinearFormHopf& H, int n_slots, int d) {
  // (d (x) id) o ad_r^{(n+1)} == ad_r^{(n)} o d on tuples of degree <= d words.
  FieldKind k = H.kind();
  std::vector<Word> words = H.algebra().basis_upto(d);
  std::vector<WordTuple> tuples{{}};
  for (int s = 0; s < n_slots; ++s) {
    std::vector<WordTuple> next;
    for (const auto& t : tuples)
      for (const auto& w : words) {
        WordTuple e = t;
        e.push_back(w);
        next.push_back(std::move(e));
      }
    tuples = std::move(next);
  }
  for (const auto& t : tuples) {
    BoxElem co = box_coaction_closed(H, t);
    BoxElem lhs;
    for (const auto& [key, c] : co) {
      WordTuple head(key.begin(), key.end() - 1);
      BoxElem dd = bar_differential(H, head);
      for (const auto& [key2, c2] : dd) {
        WordTuple nk = key2;
        nk.push_back(key.back());
        box_add(lhs, nk, c * c2);
      }
    }
    BoxElem rhs;
    for (const auto& [key, c] : bar_differential(H, t)) {
      // ad_r of a possibly shorter tuple
      BoxElem co2 = key.empty() ? BoxElem{{WordTuple{Word::empty()}, Scalar::one(k)}}
                                : box_coaction_closed(H, key);
      if (key.empty()) {
        // ad_r^{(0)} on C: 1 |-> 1 (x) 1; normalize the key shape to one leg
        co2.clear();
        box_add(co2, WordTuple{Word::empty()}, Scalar::one(k));
      }
      for (const auto& [key2, c2] : co2) box_add(rhs, key2, c * c2);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace counit
