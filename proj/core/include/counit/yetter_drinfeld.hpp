#pragma once

#include <memory>

#include "counit/comodule.hpp"
#include "counit/tensor.hpp"

namespace counit {

// Element of V (x) A: one normal-form algebra component per basis vector of V.
struct YDElement {
  std::vector<NCPoly> comps;

  bool is_zero() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const YDElement& o) const { return comps == o.comps; }
};

// The free Yetter-Drinfeld module V boxtimes A: underlying module V (x) A with
// right multiplication, comodule structure
//   v (x) a |-> v_(0) (x) a_(2) (x) S(a_(1)) v_(1) a_(3).
class FreeYDModule {
 public:
  explicit FreeYDModule(Comodule base) : base_(std::move(base)) {}

  const Comodule& base() const { return base_; }
  const BilinearFormHopf& hopf() const { return base_.hopf(); }
  int rank() const { return base_.dim(); }

  YDElement zero() const;
  YDElement basis(int g, const Word& w) const;
  YDElement act(const YDElement& x, const NCPoly& a) const;

  // Coaction: component h of the result collects (module word, comodule leg).
  std::vector<TensorSquareElement> coact(const YDElement& x) const;

  // Largest w-degree the coaction can digest: |w| + corep_degree <= certified.
  int coact_degree_budget() const;

 private:
  friend struct YDTestAccess;
  std::vector<TensorSquareElement> coact_impl(const YDElement& x, bool drop_antipode_leg) const;
  Comodule base_;
};

struct YDCheckReport {
  bool pass = true;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};

// Verifies the Yetter-Drinfeld compatibility
//   (v <- a)_(0) (x) (v <- a)_(1) = v_(0) <- a_(2) (x) S(a_(1)) v_(1) a_(3)
// on all (basis vector (x) normal word of degree <= d, generator) pairs.
YDCheckReport yd_axiom_check(const FreeYDModule& X, int d);

struct YDTestAccess {
  // Negative control: coaction with the antipode leg dropped.
  static std::vector<TensorSquareElement> corrupted_coact(const FreeYDModule& X,
                                                          const YDElement& x) {
    return X.coact_impl(x, true);
  }
  static YDCheckReport corrupted_check(const FreeYDModule& X, int d);
};

// Right-A-linear map between free modules, represented by its coefficient
// matrix: f(v_g (x) x) = sum_h w_h (x) C(h,g) x. Composition is the NCPoly
// matrix product; colinearity is checked on generators.
struct FreeModuleMap {
  std::shared_ptr<const FreeYDModule> src, tgt;
  std::vector<std::vector<NCPoly>> C;  // tgt.rank x src.rank

  static FreeModuleMap identity(std::shared_ptr<const FreeYDModule> m);
  YDElement apply(const YDElement& x) const;
  FreeModuleMap compose(const FreeModuleMap& inner) const;  // this after inner
  FreeModuleMap operator+(const FreeModuleMap& o) const;
  FreeModuleMap operator-(const FreeModuleMap& o) const;
  bool is_zero_map() const;
  bool equal_coefficients(const FreeModuleMap& o) const;
  bool colinear_on_generators() const;
};

// Colinear map from a finite comodule into a free module, f(e_g) =
// sum_h w_h (x) C(h,g); the raw datum behind an adjunction lift.
struct IntoFreeMap {
  Comodule src;
  std::shared_ptr<const FreeYDModule> tgt;
  std::vector<std::vector<NCPoly>> C;

  bool is_colinear() const;
};

// f~(v (x) a) = f(v) <- a; errors with NotColinear when f is not colinear.
FreeModuleMap adjunction_lift(const IntoFreeMap& f);

// The named colinear maps delta, phi, Phi_V^1, Phi_V^2 for B(E).
struct ColinearGenerators {
  Comodule trivial, V, Vdual, VdV, V4;  // V4 = V* (x) V* (x) V (x) V
  ComoduleMorphism delta;               // C -> V (x) V, 1 |-> sum E^{-1}_ij e_i (x) e_j
  ComoduleMorphism phi;                 // V -> V*, e_i |-> sum E_ik e_k*
  IntoFreeMap PhiV1;                    // V* (x) V -> C boxtimes A, e_i* (x) e_j |-> u_ij
  IntoFreeMap PhiV2;  // V4 -> (V* (x) V) boxtimes A, e_i* e_j* e_k e_l |-> e_j* e_k (x) u_il
  IntoFreeMap evaluation;               // V* (x) V -> C boxtimes A, e_i* (x) e_j |-> delta_ij
  std::shared_ptr<const FreeYDModule> coad;    // C boxtimes A
  std::shared_ptr<const FreeYDModule> middle;  // (V* (x) V) boxtimes A
};
ColinearGenerators colinear_generators(const BilinearFormHopf& H);

// --- box powers A^{boxtimes n} ------------------------------------------------

using WordTuple = std::vector<Word>;
struct WordTupleLess {
  bool operator()(const WordTuple& a, const WordTuple& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = deglex_compare(a[i], b[i]);
      if (c) return c < 0;
    }
    return false;
  }
};
using BoxElem = std::map<WordTuple, Scalar, WordTupleLess>;

void box_add(BoxElem& m, const WordTuple& t, const Scalar& c);

// ad_r^{(n)} closed formula on a basis tuple (keys of the result have n+1
// slots, the last being the comodule leg).
BoxElem box_coaction_closed(const BilinearFormHopf& H, const WordTuple& t);
// Same coaction computed by iterating the boxtimes construction.
BoxElem box_coaction_iterated(const BilinearFormHopf& H, const WordTuple& t);

// Bar differential A^{boxtimes (n+1)} -> A^{boxtimes n} on a basis tuple.
BoxElem bar_differential(const BilinearFormHopf& H, const WordTuple& t);
// Prop-style check that the bar differential is colinear for the ad_r
// coactions, on tuples of words of degree <= d.
bool bar_differential_is_colinear(const BilinearFormHopf& H, int n_slots, int d);

}  // namespace counit
