#pragma once

#include "counit/resolution.hpp"

namespace counit {

// Hochschild homology/cohomology of B(E) with coefficients in the
// one-dimensional bimodule _alpha C _beta, through the resolution, the closed
// formulas, Poincare duality and the bar-complex oracle.

struct CharacterBimodule {
  Character alpha, beta;
};

// gamma = beta^{-1} * alpha; the one-sided twist carrying the bimodule.
Character twist_gamma(const BilinearFormHopf& H, const Character& alpha, const Character& beta);

// The resolution specialized at a character: 0 -> C -> C^{n^2} -> C^{n^2} -> C -> 0.
struct FiniteComplex {
  FieldMatrix d1;  // n^2 x 1
  FieldMatrix d2;  // n^2 x n^2
  FieldMatrix d3;  // 1 x n^2
};
FiniteComplex specialize_resolution(const FreeYDComplex& C, const Character& gamma);

struct HomologyDims {
  std::array<long, 4> h{0, 0, 0, 0};
  bool operator==(const HomologyDims& o) const { return h == o.h; }
};

HomologyDims homology_dims(const FiniteComplex& F);

// The four closed formulas, evaluated by finite linear algebra directly from
// (E, alpha, beta); independent of the resolution data path.
HomologyDims closed_form_dims(const BilinearFormHopf& H, const Character& alpha,
                              const Character& beta);

// Hochschild cohomology dims via the transpose complex with the opposite
// one-sided twist gamma' = alpha^{-1} * beta.
HomologyDims ext_dims(const BilinearFormHopf& H, const Character& alpha, const Character& beta);

struct PoincareReport {
  bool pass = false;
  std::array<long, 4> ext{0, 0, 0, 0};
  std::array<long, 4> twisted_homology{0, 0, 0, 0};  // H_k of (alpha o sigma, beta)
};
// Checks ext^n(alpha, beta) == H_{3-n}(alpha o sigma, beta) for n = 0..3.
PoincareReport poincare_check(const BilinearFormHopf& H, const FreeYDComplex& C,
                              const Character& alpha, const Character& beta);

struct BialgebraCohomologyReport {
  std::array<long, 4> hom_dims{0, 0, 0, 0};  // dims of Hom_comod(W_k, C)
  std::array<long, 4> dims{0, 0, 0, 0};      // cohomology of the collapsed complex
};
// Gerstenhaber-Schack cohomology via Ext in the Yetter-Drinfeld category:
// apply Hom_YD(-, C) to the resolution; the adjunction collapses each term to
// Hom_comod(base, C). NotGeneric when the Hom dimensions deviate from
// (1,1,1,1).
BialgebraCohomologyReport bialgebra_cohomology(const BilinearFormHopf& H, const FreeYDComplex& C);

struct TorOracleReport {
  int k_max = 0;
  int D = 0;
  std::vector<long> dims_at_D;        // H_k of the degree <= D truncation
  std::vector<long> dims_at_Dminus1;  // H_k of the degree <= D-1 truncation
  std::vector<bool> stabilized;       // dims agree at D-1 and D (heuristic)
};
// Homology of the gamma-coefficient bar complex truncated by internal degree.
TorOracleReport tor_bar_oracle(const BilinearFormHopf& H, const Character& gamma, int k_max,
                               int D, long budget_mb);

}  // namespace counit
