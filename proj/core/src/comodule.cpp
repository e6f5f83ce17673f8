#include "counit/comodule.hpp"

#include "counit/sparse_linalg.hpp"

namespace counit {

Comodule::Comodule(BilinearFormHopf H, int dim, std::vector<NCPoly> entries, std::string name)
    : H_(std::move(H)), dim_(dim), corep_(std::move(entries)), name_(std::move(name)) {
  check_axioms();
}

int Comodule::corep_degree() const {
  int d = 0;
  for (const auto& p : corep_) d = std::max(d, p.degree());
  return d;
}

void Comodule::check_axioms() const {
  FieldKind k = H_.kind();
  for (int m = 0; m < dim_; ++m)
    for (int i = 0; i < dim_; ++i) {
      TensorSquareElement lhs = H_.comultiply(corep(m, i));
      TensorSquareElement rhs(k);
      for (int j = 0; j < dim_; ++j)
        for (const auto& [wa, ca] : corep(m, j).terms())
          for (const auto& [wb, cb] : corep(j, i).terms())
            rhs.add_term(Word2{wa, wb}, ca * cb);
      if (lhs != rhs)
        fail(errc::validation_error,
             "comodule axiom (coassociativity) fails for " + name_ + " at entry (" +
                 std::to_string(m) + "," + std::to_string(i) + ")");
      Scalar eps = H_.counit(corep(m, i));
      if (eps != (m == i ? Scalar::one(k) : Scalar::zero(k)))
        fail(errc::validation_error, "comodule axiom (counit) fails for " + name_);
    }
}

Comodule Comodule::fundamental(const BilinearFormHopf& H) {
  int n = H.n();
  std::vector<NCPoly> e(static_cast<size_t>(n) * n, NCPoly(H.kind()));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(k) * n + i] = H.u(k, i);
  return Comodule(H, n, std::move(e), "V");
}

Comodule Comodule::trivial(const BilinearFormHopf& H) {
  return Comodule(H, 1, {NCPoly::unit(H.kind())}, "C");
}

Comodule Comodule::dual(const Comodule& W) {
  int n = W.dim();
  std::vector<NCPoly> e(static_cast<size_t>(n) * n, NCPoly(W.hopf().kind()));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      e[static_cast<size_t>(k) * n + i] = W.hopf().antipode(W.corep(i, k));
  return Comodule(W.hopf(), n, std::move(e), W.name() + "*");
}

Comodule Comodule::tensor(const Comodule& V, const Comodule& W) {
  int dv = V.dim(), dw = W.dim();
  int d = dv * dw;
  const BilinearFormHopf& H = V.hopf();
  std::vector<NCPoly> e(static_cast<size_t>(d) * d, NCPoly(H.kind()));
  for (int k = 0; k < dv; ++k)
    for (int l = 0; l < dw; ++l)
      for (int i = 0; i < dv; ++i)
        for (int j = 0; j < dw; ++j)
          e[static_cast<size_t>(k * dw + l) * d + (i * dw + j)] =
              H.nf(V.corep(k, i) * W.corep(l, j));
  return Comodule(H, d, std::move(e), "(" + V.name() + "(x)" + W.name() + ")");
}

bool is_colinear(const Comodule& src, const Comodule& tgt, const FieldMatrix& T) {
  if (T.rows() != tgt.dim() || T.cols() != src.dim()) fail(errc::shape_error, "morphism shape");
  // sum_k T(m,k) corep_src(k,i) == sum_m' corep_tgt(m,m') T(m',i) for all m, i
  for (int m = 0; m < tgt.dim(); ++m)
    for (int i = 0; i < src.dim(); ++i) {
      NCPoly lhs(src.hopf().kind()), rhs(src.hopf().kind());
      for (int k = 0; k < src.dim(); ++k) lhs += src.corep(k, i).scaled(T.at(m, k));
      for (int mp = 0; mp < tgt.dim(); ++mp) rhs += tgt.corep(m, mp).scaled(T.at(mp, i));
      if (lhs != rhs) return false;
    }
  return true;
}

ComoduleMorphism ComoduleMorphism::make(const Comodule& src, const Comodule& tgt, FieldMatrix T) {
  if (!is_colinear(src, tgt, T)) fail(errc::not_colinear, "matrix is not a comodule morphism");
  return ComoduleMorphism{src, tgt, std::move(T)};
}

std::vector<FieldMatrix> intertwiner_space(const Comodule& V, const Comodule& W) {
  FieldKind k = V.hopf().kind();
  int dv = V.dim(), dw = W.dim();
  int unknowns = dw * dv;  // T(m, j) at index m*dv + j
  // One linear equation per (m, i, normal word): coefficients of
  // sum_k T(m,k) corep_V(k,i) - sum_m' corep_W(m,m') T(m',i).
  std::vector<std::vector<Scalar>> rows;
  for (int m = 0; m < dw; ++m)
    for (int i = 0; i < dv; ++i) {
      std::map<Word, std::vector<Scalar>, DeglexLess> byword;
      auto touch = [&](const Word& w) -> std::vector<Scalar>& {
        auto it = byword.find(w);
        if (it == byword.end())
          it = byword.emplace(w, std::vector<Scalar>(unknowns, Scalar::zero(k))).first;
        return it->second;
      };
      for (int kk = 0; kk < dv; ++kk)
        for (const auto& [w, c] : V.corep(kk, i).terms()) touch(w)[m * dv + kk] += c;
      for (int mp = 0; mp < dw; ++mp)
        for (const auto& [w, c] : W.corep(m, mp).terms()) touch(w)[mp * dv + i] -= c;
      for (auto& [w, row] : byword) rows.push_back(std::move(row));
    }
  std::vector<std::vector<Scalar>> basis = dense_nullspace(std::move(rows), unknowns, k);
  std::vector<FieldMatrix> out;
  for (const auto& v : basis) {
    FieldMatrix T(dw, dv, k);
    for (int m = 0; m < dw; ++m)
      for (int j = 0; j < dv; ++j) T.at(m, j) = v[m * dv + j];
    if (!is_colinear(V, W, T)) fail(errc::not_colinear, "intertwiner recheck failed");
    out.push_back(std::move(T));
  }
  return out;
}

}  // namespace counit
