#pragma once

#include "counit/hopf.hpp"

namespace counit {

// The connecting algebra B(E, F): generators u_ij (i <= dim E, j <= dim F),
// relations F^{-1} u^t E u = I and u F^{-1} u^t E = I. Nonzero exactly when
// the trace invariants match and both sizes are >= 2; mismatched data
// collapses to the zero algebra, which the completion detects.
class BEFAlgebra {
 public:
  static std::vector<NCPoly> relations(const FieldMatrix& E, const FieldMatrix& F);
  static BEFAlgebra build(const FieldMatrix& E, const FieldMatrix& F, int D);

  int m() const { return m_; }  // rows of u = dim E
  int n() const { return n_; }  // cols of u = dim F
  FieldKind kind() const { return E_.kind(); }
  const FieldMatrix& E() const { return E_; }
  const FieldMatrix& F() const { return F_; }
  const PresentedAlgebra& algebra() const { return *A_; }
  bool collapsed() const { return A_->is_zero_algebra(); }

  Letter gen(int i, int j) const { return static_cast<Letter>(i * n_ + j); }
  NCPoly u(int i, int j) const { return NCPoly::generator(gen(i, j), kind()); }
  NCPoly nf(const NCPoly& p) const { return A_->normal_form(p); }

 private:
  FieldMatrix E_, F_;
  int m_ = 0, n_ = 0;
  std::shared_ptr<const PresentedAlgebra> A_;
};

// True iff tr(E^{-1}E^t) = tr(F^{-1}F^t) and both sizes are >= 2.
bool nonvanishing_precheck(const FieldMatrix& E, const FieldMatrix& F);

struct CogroupoidCheckReport {
  bool delta_algebra_map = false;
  bool counit_laws = false;
  bool coassociativity = false;
  bool antipode_left = false;
  bool antipode_right = false;
  std::vector<std::string> failures;

  bool all_pass() const {
    return delta_algebra_map && counit_laws && coassociativity && antipode_left && antipode_right;
  }
};
// Verifies the cogroupoid axioms on generators for the object triple (E,G,F):
// Delta_{E,F}^G an algebra map, counit laws, coassociativity instances and
// both antipode laws across the pairs of the triple.
CogroupoidCheckReport cogroupoid_maps_check(const FieldMatrix& E, const FieldMatrix& G,
                                            const FieldMatrix& F, int D);

struct TransportReport {
  bool phi1_diagram = false;
  bool phi2_diagram = false;
  bool phi3_diagram = false;
  bool eps_diagram = false;
  bool action_consistency = false;
  int elements_checked = 0;
  std::vector<std::string> failures;

  bool all_pass() const {
    return phi1_diagram && phi2_diagram && phi3_diagram && eps_diagram && action_consistency;
  }
};
// The four transport squares relating the B(F) resolution maps with the
// B(E) ones through the cotensor identifications, applied to generators and
// words of degree <= d; TraceMismatch when the invariants differ.
TransportReport check_transport_diagrams(const FieldMatrix& E, const FieldMatrix& F, int d);

}  // namespace counit
