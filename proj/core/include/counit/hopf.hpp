#pragma once

#include <memory>

#include "counit/matrix.hpp"
#include "counit/presented_algebra.hpp"
#include "counit/tensor.hpp"

namespace counit {

struct HopfAxiomReport {
  bool coassociativity = false;
  bool counit_axiom = false;
  bool antipode_left = false;   // m(S (x) id) Delta = eta eps
  bool antipode_right = false;  // m(id (x) S) Delta = eta eps
  bool relations_counit = false;
  bool relations_antipode = false;
  bool relations_comultiplication = false;
  int words_checked = 0;
  std::vector<std::string> failures;

  bool all_pass() const {
    return coassociativity && counit_axiom && antipode_left && antipode_right &&
           relations_counit && relations_antipode && relations_comultiplication;
  }
};

// The Hopf algebra of a bilinear form: generators u_ij, relations
// E^{-1} u^t E u = I = u E^{-1} u^t E, with
//   Delta(u_ij) = sum_k u_ik (x) u_kj,   eps(u_ij) = delta_ij,
//   S(u) = E^{-1} u^t E.
class BilinearFormHopf {
 public:
  static BilinearFormHopf build(const FieldMatrix& E, int D);
  static std::vector<NCPoly> bilinear_relations(const FieldMatrix& E);

  // Rebuilds the derived structure on top of an already completed algebra
  // (used by the cache path; presentation must match bilinear_relations(E)).
  static BilinearFormHopf wrap(const FieldMatrix& E, PresentedAlgebra algebra);

  int n() const { return n_; }
  FieldKind kind() const { return E_.kind(); }
  const FieldMatrix& E() const { return E_; }
  const FieldMatrix& Einv() const { return Einv_; }
  const PresentedAlgebra& algebra() const { return *A_; }
  std::shared_ptr<const PresentedAlgebra> algebra_ptr() const { return A_; }

  Letter gen(int i, int j) const { return static_cast<Letter>(i * n_ + j); }
  NCPoly u(int i, int j) const { return NCPoly::generator(gen(i, j), kind()); }
  const NCPoly& antipode_gen(int i, int j) const { return S_[i][j]; }

  NCPoly nf(const NCPoly& p) const { return A_->normal_form(p); }
  Scalar counit(const NCPoly& p) const;
  TensorSquareElement comultiply(const NCPoly& p) const;
  TensorCubeElement comultiply2(const NCPoly& p) const;  // (Delta (x) id) Delta
  NCPoly antipode(const NCPoly& p) const;

  HopfAxiomReport verify_axioms(int max_word_degree) const;

 private:
  friend struct HopfTestAccess;
  FieldMatrix E_, Einv_;
  int n_ = 0;
  std::shared_ptr<const PresentedAlgebra> A_;
  std::vector<std::vector<NCPoly>> S_;  // antipode on generators
};

// Test-only hook for negative controls.
struct HopfTestAccess {
  static void override_antipode(BilinearFormHopf& H, std::vector<std::vector<NCPoly>> S) {
    H.S_ = std::move(S);
  }
};

// An algebra map B(E) -> field, given by its generator value matrix; the
// matrix must satisfy both relation families exactly.
class Character {
 public:
  Character() = default;
  const FieldMatrix& matrix() const { return m_; }
  int n() const { return m_.rows(); }
  Scalar evaluate_word(const Word& w) const;
  Scalar evaluate(const NCPoly& p) const;
  FieldMatrix evaluate_matrix(const std::vector<std::vector<NCPoly>>& m) const;
  bool operator==(const Character& o) const { return m_ == o.m_; }
  bool operator!=(const Character& o) const { return m_ != o.m_; }

 private:
  friend Character character_from_matrix(const BilinearFormHopf&, const FieldMatrix&);
  explicit Character(FieldMatrix m) : m_(std::move(m)) {}
  FieldMatrix m_;
};

Character character_from_matrix(const BilinearFormHopf& H, const FieldMatrix& C);
Character counit_character(const BilinearFormHopf& H);
Character sovereign_character(const BilinearFormHopf& H);  // Phi(u) = E^{-1} E^t
// Convolution calculus on characters: (a*b)(u) = a(u) b(u), a^{-1} = a o S.
Character char_mul(const BilinearFormHopf& H, const Character& a, const Character& b);
Character char_inv(const BilinearFormHopf& H, const Character& a);
Character char_pow(const BilinearFormHopf& H, const Character& a, int e);

struct ModularMaps {
  std::vector<std::vector<NCPoly>> sigma;  // sigma = Phi * id * Phi
  std::vector<std::vector<NCPoly>> theta;  // theta = S * Phi * Phi
  bool s_theta_equals_sigma = false;       // S o theta = sigma, on generators
};
ModularMaps modular_maps(const BilinearFormHopf& H);

}  // namespace counit
