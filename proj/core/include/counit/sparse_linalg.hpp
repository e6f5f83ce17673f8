#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "counit/scalar.hpp"

namespace counit {

// Sparse column vector, entries sorted by row index, no zeros stored.
struct SparseVec {
  std::vector<std::pair<int64_t, Scalar>> e;

  bool is_zero() const { return e.empty(); }
  void push(int64_t row, const Scalar& c) {
    if (!c.is_zero()) e.emplace_back(row, c);
  }
  void sort_and_combine();
};

struct SparseMatrix {
  int64_t rows = 0;
  FieldKind kind = FieldKind::rationals;
  std::vector<SparseVec> cols;

  int64_t col_count() const { return static_cast<int64_t>(cols.size()); }
  int64_t nnz() const;
};

// Incremental exact Gaussian elimination over the coefficient field, column
// by column. Inserted columns are reduced against the echelon set; a column
// reducing to zero yields its kernel combination when tracking is on.
// Deterministic: fixed reduction order and pivot tie-breaking.
class Eliminator {
 public:
  explicit Eliminator(FieldKind k, bool track_combos) : kind_(k), track_(track_combos) {}

  // Returns the kernel combination (over insertion indices) if v reduced to
  // zero; std::nullopt when a new pivot was created.
  std::optional<SparseVec> insert(SparseVec v);

  // Span membership against the columns inserted so far.
  bool in_span(SparseVec v) const;

  int64_t rank() const { return static_cast<int64_t>(echelon_.size()); }
  int64_t inserted() const { return inserted_; }

 private:
  void reduce(SparseVec& v, SparseVec* combo) const;

  FieldKind kind_;
  bool track_;
  int64_t inserted_ = 0;
  std::vector<SparseVec> echelon_;         // pivot coefficient normalized to 1
  std::vector<SparseVec> combos_;          // combo producing each echelon column
  std::vector<int64_t> pivot_row_;         // echelon idx -> pivot row
  std::unordered_map<int64_t, int> pivots_;  // pivot row -> echelon idx
};

int64_t sparse_rank(const SparseMatrix& m);

struct KernelResult {
  std::vector<SparseVec> kernel;  // combinations over column indices
  int64_t rank = 0;
};
KernelResult sparse_kernel(const SparseMatrix& m);

// Nullspace basis of a dense system (rows of length ncols), reduced
// row-echelon construction with deterministic free-variable basis.
std::vector<std::vector<Scalar>> dense_nullspace(std::vector<std::vector<Scalar>> rows, int ncols,
                                                 FieldKind k);

}  // namespace counit
