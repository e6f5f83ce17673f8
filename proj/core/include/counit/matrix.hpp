#pragma once

#include <vector>

#include "counit/scalar.hpp"

namespace counit {

// Dense matrix over Q or Q(q). All arithmetic is exact; inverse() multiplies
// the result back against the input and refuses to return an unverified one.
class FieldMatrix {
 public:
  FieldMatrix() : rows_(0), cols_(0), kind_(FieldKind::rationals) {}
  FieldMatrix(int rows, int cols, FieldKind k);

  static FieldMatrix identity(int n, FieldKind k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldKind kind() const { return kind_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix scaled(const Scalar& c) const;
  FieldMatrix transpose() const;
  Scalar trace() const;
  FieldMatrix inverse() const;
  bool operator==(const FieldMatrix& o) const;
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;

  // Rank by exact Gaussian elimination (input copied).
  int rank() const;

 private:
  int rows_, cols_;
  FieldKind kind_;
  std::vector<Scalar> e_;
};

// tr(E^{-1} E^t); the comodule-equivalence invariant of E.
Scalar trace_invariant(const FieldMatrix& E);

}  // namespace counit
