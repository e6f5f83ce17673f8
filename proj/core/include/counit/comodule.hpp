#pragma once

#include "counit/hopf.hpp"

namespace counit {

// Finite-dimensional right comodule, encoded by its corepresentation matrix:
// coaction(e_i) = sum_k e_k (x) corep(k, i), entries in normal form. The
// comodule axioms are verified exactly at construction.
class Comodule {
 public:
  static Comodule fundamental(const BilinearFormHopf& H);
  static Comodule trivial(const BilinearFormHopf& H);
  // Dual convention: corep_{V*}(k, i) = S(corep_V(i, k)).
  static Comodule dual(const Comodule& W);
  static Comodule tensor(const Comodule& V, const Comodule& W);

  int dim() const { return dim_; }
  const BilinearFormHopf& hopf() const { return H_; }
  const NCPoly& corep(int k, int i) const { return corep_[static_cast<size_t>(k) * dim_ + i]; }
  int corep_degree() const;  // max entry degree
  const std::string& name() const { return name_; }

  void check_axioms() const;

 private:
  Comodule(BilinearFormHopf H, int dim, std::vector<NCPoly> entries, std::string name);
  BilinearFormHopf H_;
  int dim_;
  std::vector<NCPoly> corep_;
  std::string name_;
};

// Linear map between comodules; colinearity is checked on construction via
// make(), entrywise over the normal-word basis.
struct ComoduleMorphism {
  Comodule src, tgt;
  FieldMatrix T;  // tgt.dim x src.dim

  static ComoduleMorphism make(const Comodule& src, const Comodule& tgt, FieldMatrix T);
};

bool is_colinear(const Comodule& src, const Comodule& tgt, const FieldMatrix& T);

// Basis of the space of comodule morphisms V -> W, by exact linear algebra
// over the coefficient field.
std::vector<FieldMatrix> intertwiner_space(const Comodule& V, const Comodule& W);

}  // namespace counit
