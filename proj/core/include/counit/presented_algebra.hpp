#pragma once

#include <atomic>
#include <memory>
#include <optional>

#include "counit/ncpoly.hpp"

namespace counit {

// Monic rewrite rule lhs -> rhs with lhs deglex-greater than every word of rhs.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

// A free algebra modulo relations, with a rewrite system complete through the
// truncation degree D: every overlap ambiguity of degree <= D reduces to zero,
// which makes normal forms canonical on the span of words of degree <= D.
// The completed object is immutable; normal_form is pure and thread-safe.
class PresentedAlgebra {
 public:
  PresentedAlgebra(const PresentedAlgebra& o) { *this = o; }
  PresentedAlgebra(PresentedAlgebra&& o) noexcept { *this = std::move(o); }
  PresentedAlgebra& operator=(const PresentedAlgebra& o);
  PresentedAlgebra& operator=(PresentedAlgebra&& o) noexcept;

  // Runs truncated completion. Always terminates: leading words live in the
  // finite set of words of degree <= D.
  static PresentedAlgebra complete(Alphabet alphabet, std::vector<NCPoly> relations, int D);

  const Alphabet& alphabet() const { return alphabet_; }
  FieldKind kind() const { return kind_; }
  int truncation_degree() const { return D_; }
  int certified_degree() const { return certified_; }
  bool is_zero_algebra() const { return zero_algebra_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  int max_rule_degree() const;

  // Dimension of the degree-d slice of the quotient, d = 0..D.
  const std::vector<long>& filtration_dims() const { return filtration_dims_; }

  NCPoly normal_form(const NCPoly& p) const;
  bool is_normal_word(const Word& w) const;

  // All irreducible words of length exactly d, in lex order.
  std::vector<Word> filtration_basis(int d) const;
  // All irreducible words of length <= d, degree-major then lex.
  std::vector<Word> basis_upto(int d) const;
  long dim_upto(int d) const;

  // Product followed by reduction; checks the degree budget first.
  NCPoly mul_nf(const NCPoly& a, const NCPoly& b) const;

  uint64_t reduction_steps() const { return reduction_steps_.load(); }

  // Deterministic content hash of (field, alphabet, relations, D); cache key.
  uint64_t relations_hash() const;

  std::string serialize() const;
  static PresentedAlgebra deserialize(const std::string& text);

 private:
  PresentedAlgebra() = default;
  void index_rules();
  void check_degree(int d, const char* what) const;
  NCPoly reduce(NCPoly p) const;  // full reduction w.r.t. rules_

  Alphabet alphabet_{std::vector<std::string>{}};
  FieldKind kind_ = FieldKind::rationals;
  std::vector<NCPoly> relations_;
  int D_ = 0;
  int certified_ = 0;
  bool zero_algebra_ = false;
  std::vector<RewriteRule> rules_;  // sorted by lhs (deglex)
  std::vector<long> filtration_dims_;
  std::vector<std::vector<int>> rules_by_first_;  // letter -> rule indices
  std::vector<std::vector<int>> rules_by_last_;
  mutable std::atomic<uint64_t> reduction_steps_{0};
};

}  // namespace counit
