#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "counit/error.hpp"

namespace counit {

// Ordered generator names; the construction order fixes the monomial order.
struct Alphabet {
  std::vector<std::string> names;

  size_t size() const { return names.size(); }
  explicit Alphabet(std::vector<std::string> n);

  // Row-major generator alphabet u{i}_{j}, 1-based, i < rows, j < cols ties.
  static Alphabet matrix_generators(int rows, int cols, const std::string& stem = "u");
};

using Letter = uint16_t;

// A word in the free monoid over an alphabet; empty = the unit monomial.
struct Word {
  std::vector<Letter> l;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : l(std::move(letters)) {}
  static Word empty() { return Word(); }
  static Word single(Letter g) { return Word({g}); }

  int size() const { return static_cast<int>(l.size()); }
  bool is_empty() const { return l.empty(); }
  Word concat(const Word& o) const;
  Word subword(int from, int len) const;
  bool operator==(const Word& o) const { return l == o.l; }
  bool operator!=(const Word& o) const { return l != o.l; }
};

// Degree-lexicographic order: first by length, ties broken by the generator
// order left to right.
int deglex_compare(const Word& a, const Word& b);

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_compare(a, b) < 0; }
};

// First position of `pat` inside `w`, or -1.
int find_subword(const Word& w, const Word& pat);
bool ends_with(const Word& w, const Word& pat);

std::string word_to_string(const Word& w, const Alphabet& a);

}  // namespace counit
