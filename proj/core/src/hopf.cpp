#include "counit/hopf.hpp"

namespace counit {

std::vector<NCPoly> BilinearFormHopf::bilinear_relations(const FieldMatrix& E) {
  int n = E.rows();
  FieldKind k = E.kind();
  if (E.rows() != E.cols()) fail(errc::shape_error, "E must be square");
  if (n < 2) fail(errc::size_too_small, "E must have size >= 2");
  FieldMatrix Einv = E.inverse();

  using Mat = std::vector<std::vector<NCPoly>>;
  Mat u(n, std::vector<NCPoly>(n, NCPoly(k))), ut = u;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u[i][j] = NCPoly::generator(static_cast<Letter>(i * n + j), k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ut[i][j] = u[j][i];
  auto scal = [&](const FieldMatrix& M) {
    Mat C(M.rows(), std::vector<NCPoly>(M.cols(), NCPoly(k)));
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) C[i][j] = NCPoly::scalar(M.at(i, j));
    return C;
  };
  auto mul = [&](const Mat& A, const Mat& B) {
    int r = static_cast<int>(A.size()), m = static_cast<int>(B.size()),
        c = static_cast<int>(B[0].size());
    Mat C(r, std::vector<NCPoly>(c, NCPoly(k)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        for (int l = 0; l < m; ++l) C[i][j] += A[i][l] * B[l][j];
    return C;
  };

  Mat lhs1 = mul(mul(scal(Einv), ut), mul(scal(E), u));
  Mat lhs2 = mul(u, mul(scal(Einv), mul(ut, scal(E))));
  std::vector<NCPoly> rels;
  rels.reserve(2 * static_cast<size_t>(n) * n);
  for (const Mat* lhs : {&lhs1, &lhs2})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        NCPoly r = (*lhs)[i][j];
        if (i == j) r -= NCPoly::unit(k);
        rels.push_back(std::move(r));
      }
  return rels;
}

BilinearFormHopf BilinearFormHopf::build(const FieldMatrix& E, int D) {
  std::vector<NCPoly> rels = bilinear_relations(E);
  PresentedAlgebra A =
      PresentedAlgebra::complete(Alphabet::matrix_generators(E.rows(), E.rows()), rels, D);
  return wrap(E, std::move(A));
}

BilinearFormHopf BilinearFormHopf::wrap(const FieldMatrix& E, PresentedAlgebra algebra) {
  BilinearFormHopf H;
  H.E_ = E;
  H.Einv_ = E.inverse();
  H.n_ = E.rows();
  H.A_ = std::make_shared<PresentedAlgebra>(std::move(algebra));
  int n = H.n_;
  FieldKind k = E.kind();
  H.S_.assign(n, std::vector<NCPoly>(n, NCPoly(k)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // S(u_ij) = (E^{-1} u^t E)_{ij} = sum_{a,b} Einv_{ia} u_{ba} E_{bj}
      NCPoly s(k);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          s += H.u(b, a).scaled(H.Einv_.at(i, a) * E.at(b, j));
      H.S_[i][j] = H.A_->normal_form(s);
    }
  return H;
}

Scalar BilinearFormHopf::counit(const NCPoly& p) const {
  Scalar r = Scalar::zero(kind());
  for (const auto& [w, c] : p.terms()) {
    bool diag = true;
    for (Letter g : w.l)
      if (g % n_ != g / n_) {
        diag = false;
        break;
      }
    if (diag) r += c;
  }
  return r;
}

TensorSquareElement BilinearFormHopf::comultiply(const NCPoly& p) const {
  TensorSquareElement out(kind());
  if (p.degree() > A_->certified_degree())
    fail(errc::degree_out_of_range, "comultiply beyond certified degree");
  for (const auto& [w, c] : p.terms()) {
    // Delta(u_{i1 j1} ... ) expands over all index paths.
    std::vector<std::pair<Word2, Scalar>> acc{{Word2{Word::empty(), Word::empty()}, c}};
    for (Letter g : w.l) {
      int i = g / n_, j = g % n_;
      std::vector<std::pair<Word2, Scalar>> next;
      next.reserve(acc.size() * n_);
      for (const auto& [t, s] : acc)
        for (int m = 0; m < n_; ++m) {
          Word2 e{t.a.concat(Word::single(gen(i, m))), t.b.concat(Word::single(gen(m, j)))};
          next.emplace_back(std::move(e), s);
        }
      acc = std::move(next);
    }
    for (auto& [t, s] : acc) {
      NCPoly la = A_->normal_form(NCPoly::word(t.a, kind()));
      NCPoly lb = A_->normal_form(NCPoly::word(t.b, kind()));
      for (const auto& [wa, ca] : la.terms())
        for (const auto& [wb, cb] : lb.terms()) out.add_term(Word2{wa, wb}, s * ca * cb);
    }
  }
  return out;
}

TensorCubeElement BilinearFormHopf::comultiply2(const NCPoly& p) const {
  TensorCubeElement out(kind());
  TensorSquareElement d = comultiply(p);
  for (const auto& [t, c] : d.terms()) {
    TensorSquareElement dd = comultiply(NCPoly::word(t.a, kind()));
    for (const auto& [t2, c2] : dd.terms()) out.add_term(Word3{t2.a, t2.b, t.b}, c * c2);
  }
  return out;
}

NCPoly BilinearFormHopf::antipode(const NCPoly& p) const {
  if (p.degree() > A_->certified_degree())
    fail(errc::degree_out_of_range, "antipode beyond certified degree");
  NCPoly out(kind());
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc = NCPoly::scalar(c);
    for (auto it = w.l.rbegin(); it != w.l.rend(); ++it) {
      int i = *it / n_, j = *it % n_;
      acc = acc * S_[i][j];
    }
    out += acc;
  }
  return A_->normal_form(out);
}

HopfAxiomReport BilinearFormHopf::verify_axioms(int max_word_degree) const {
  HopfAxiomReport rep;
  if (2 * max_word_degree > A_->certified_degree())
    fail(errc::degree_out_of_range,
         "antipode axiom on degree-" + std::to_string(max_word_degree) +
             " words needs certified degree " + std::to_string(2 * max_word_degree));
  rep.coassociativity = rep.counit_axiom = rep.antipode_left = rep.antipode_right = true;
  FieldKind k = kind();
  std::vector<Word> words = A_->basis_upto(max_word_degree);
  rep.words_checked = static_cast<int>(words.size());
  for (const Word& w : words) {
    NCPoly pw = NCPoly::word(w, k);
    TensorSquareElement d = comultiply(pw);
    // (Delta (x) id) Delta == (id (x) Delta) Delta
    TensorCubeElement left(k), right(k);
    for (const auto& [t, c] : d.terms()) {
      TensorSquareElement da = comultiply(NCPoly::word(t.a, k));
      TensorSquareElement db = comultiply(NCPoly::word(t.b, k));
      for (const auto& [t2, c2] : da.terms()) left.add_term(Word3{t2.a, t2.b, t.b}, c * c2);
      for (const auto& [t2, c2] : db.terms()) right.add_term(Word3{t.a, t2.a, t2.b}, c * c2);
    }
    if (left != right) {
      rep.coassociativity = false;
      rep.failures.push_back("coassociativity on " + word_to_string(w, A_->alphabet()));
    }
    // (eps (x) id) Delta = id = (id (x) eps) Delta
    NCPoly el(k), er(k);
    for (const auto& [t, c] : d.terms()) {
      el += NCPoly::word(t.b, k).scaled(c * counit(NCPoly::word(t.a, k)));
      er += NCPoly::word(t.a, k).scaled(c * counit(NCPoly::word(t.b, k)));
    }
    if (el != pw || er != pw) {
      rep.counit_axiom = false;
      rep.failures.push_back("counit axiom on " + word_to_string(w, A_->alphabet()));
    }
    // m(S (x) id) Delta = eps(.) 1 = m(id (x) S) Delta
    NCPoly sl(k), sr(k);
    for (const auto& [t, c] : d.terms()) {
      sl += A_->normal_form(antipode(NCPoly::word(t.a, k)) * NCPoly::word(t.b, k)).scaled(c);
      sr += A_->normal_form(NCPoly::word(t.a, k) * antipode(NCPoly::word(t.b, k))).scaled(c);
    }
    NCPoly expect = NCPoly::scalar(counit(pw));
    if (sl != expect) {
      rep.antipode_left = false;
      rep.failures.push_back("left antipode axiom on " + word_to_string(w, A_->alphabet()));
    }
    if (sr != expect) {
      rep.antipode_right = false;
      rep.failures.push_back("right antipode axiom on " + word_to_string(w, A_->alphabet()));
    }
  }
  // Structure maps respect the defining relations.
  rep.relations_counit = rep.relations_antipode = rep.relations_comultiplication = true;
  for (const auto& r : A_->relations()) {
    if (!counit(r).is_zero()) {
      rep.relations_counit = false;
      rep.failures.push_back("counit does not kill a defining relation");
    }
    if (!antipode(r).is_zero()) {
      rep.relations_antipode = false;
      rep.failures.push_back("antipode image of a relation is nonzero");
    }
    if (!comultiply(r).is_zero()) {
      rep.relations_comultiplication = false;
      rep.failures.push_back("comultiplication image of a relation is nonzero");
    }
  }
  return rep;
}

// --- characters --------------------------------------------------------------

Scalar Character::evaluate_word(const Word& w) const {
  int n = m_.rows();
  Scalar r = Scalar::one(m_.kind());
  for (Letter g : w.l) r = r * m_.at(g / n, g % n);
  return r;
}

Scalar Character::evaluate(const NCPoly& p) const {
  Scalar r = Scalar::zero(m_.kind());
  for (const auto& [w, c] : p.terms()) r += c * evaluate_word(w);
  return r;
}

FieldMatrix Character::evaluate_matrix(const std::vector<std::vector<NCPoly>>& m) const {
  int r = static_cast<int>(m.size()), c = static_cast<int>(m[0].size());
  FieldMatrix out(r, c, m_.kind());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out.at(i, j) = evaluate(m[i][j]);
  return out;
}

Character character_from_matrix(const BilinearFormHopf& H, const FieldMatrix& C) {
  if (C.rows() != H.n() || C.cols() != H.n())
    fail(errc::shape_error, "character matrix has wrong size");
  if (C.kind() != H.kind()) fail(errc::field_mismatch, "character over the wrong field");
  FieldMatrix lhs1 = H.Einv() * C.transpose() * H.E() * C;
  FieldMatrix lhs2 = C * H.Einv() * C.transpose() * H.E();
  for (int i = 0; i < H.n(); ++i)
    for (int j = 0; j < H.n(); ++j) {
      Scalar want = i == j ? Scalar::one(H.kind()) : Scalar::zero(H.kind());
      if (lhs1.at(i, j) != want)
        fail(errc::not_a_character, "E^{-1}C^tEC differs from I at entry (" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (lhs2.at(i, j) != want)
        fail(errc::not_a_character, "CE^{-1}C^tE differs from I at entry (" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return Character(C);
}

Character counit_character(const BilinearFormHopf& H) {
  return character_from_matrix(H, FieldMatrix::identity(H.n(), H.kind()));
}

Character sovereign_character(const BilinearFormHopf& H) {
  return character_from_matrix(H, H.Einv() * H.E().transpose());
}

Character char_mul(const BilinearFormHopf& H, const Character& a, const Character& b) {
  return character_from_matrix(H, a.matrix() * b.matrix());
}

Character char_inv(const BilinearFormHopf& H, const Character& a) {
  // a o S has matrix E^{-1} a(u)^t E.
  return character_from_matrix(H, H.Einv() * a.matrix().transpose() * H.E());
}

Character char_pow(const BilinearFormHopf& H, const Character& a, int e) {
  Character r = counit_character(H);
  Character base = e < 0 ? char_inv(H, a) : a;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r = char_mul(H, r, base);
  return r;
}

ModularMaps modular_maps(const BilinearFormHopf& H) {
  int n = H.n();
  FieldKind k = H.kind();
  FieldMatrix Phi = H.Einv() * H.E().transpose();
  FieldMatrix Phi2 = Phi * Phi;
  ModularMaps mm;
  mm.sigma.assign(n, std::vector<NCPoly>(n, NCPoly(k)));
  mm.theta.assign(n, std::vector<NCPoly>(n, NCPoly(k)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly s(k), t(k);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s += H.u(a, b).scaled(Phi.at(i, a) * Phi.at(b, j));
      for (int a = 0; a < n; ++a) t += H.antipode_gen(i, a).scaled(Phi2.at(a, j));
      mm.sigma[i][j] = H.nf(s);
      mm.theta[i][j] = H.nf(t);
    }
  mm.s_theta_equals_sigma = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (H.antipode(mm.theta[i][j]) != mm.sigma[i][j]) mm.s_theta_equals_sigma = false;
  return mm;
}

}  // namespace counit
