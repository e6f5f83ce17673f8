#include "counit/sparse_linalg.hpp"

#include <algorithm>
#include <queue>

namespace counit {

void SparseVec::sort_and_combine() {
  std::sort(e.begin(), e.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < e.size();) {
    int64_t row = e[i].first;
    Scalar acc = e[i].second;
    size_t j = i + 1;
    while (j < e.size() && e[j].first == row) acc += e[j++].second;
    if (!acc.is_zero()) e[out++] = {row, acc};
    i = j;
  }
  e.resize(out);
}

int64_t SparseMatrix::nnz() const {
  int64_t n = 0;
  for (const auto& c : cols) n += static_cast<int64_t>(c.e.size());
  return n;
}

namespace {

// v -= c * w  (both sorted by row)
void axpy_sub(SparseVec& v, const Scalar& c, const SparseVec& w,
              std::vector<int64_t>* created) {
  SparseVec out;
  out.e.reserve(v.e.size() + w.e.size());
  size_t i = 0, j = 0;
  while (i < v.e.size() || j < w.e.size()) {
    if (j == w.e.size() || (i < v.e.size() && v.e[i].first < w.e[j].first)) {
      out.e.push_back(v.e[i++]);
    } else if (i == v.e.size() || w.e[j].first < v.e[i].first) {
      Scalar nc = -(c * w.e[j].second);
      if (!nc.is_zero()) {
        if (created) created->push_back(w.e[j].first);
        out.e.emplace_back(w.e[j].first, std::move(nc));
      }
      ++j;
    } else {
      Scalar nc = v.e[i].second - c * w.e[j].second;
      if (!nc.is_zero()) out.e.emplace_back(v.e[i].first, std::move(nc));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

const Scalar* find_row(const SparseVec& v, int64_t row) {
  auto it = std::lower_bound(v.e.begin(), v.e.end(), row,
                             [](const auto& a, int64_t r) { return a.first < r; });
  if (it != v.e.end() && it->first == row) return &it->second;
  return nullptr;
}

}  // namespace

void Eliminator::reduce(SparseVec& v, SparseVec* combo) const {
  // Echelon column k only touches rows whose pivots (if any) were created
  // later than k, so processing candidates in increasing echelon order
  // terminates.
  std::priority_queue<int, std::vector<int>, std::greater<int>> cand;
  for (const auto& [row, c] : v.e) {
    auto it = pivots_.find(row);
    if (it != pivots_.end()) cand.push(it->second);
  }
  while (!cand.empty()) {
    int idx = cand.top();
    cand.pop();
    const Scalar* c = find_row(v, pivot_row_[idx]);
    if (!c || c->is_zero()) continue;
    Scalar f = *c;
    std::vector<int64_t> created;
    axpy_sub(v, f, echelon_[idx], &created);
    if (combo) axpy_sub(*combo, f, combos_[idx], nullptr);
    for (int64_t row : created) {
      auto it = pivots_.find(row);
      if (it != pivots_.end()) cand.push(it->second);
    }
  }
}

std::optional<SparseVec> Eliminator::insert(SparseVec v) {
  v.sort_and_combine();
  SparseVec combo;
  if (track_) combo.push(inserted_, Scalar::one(kind_));
  ++inserted_;
  reduce(v, track_ ? &combo : nullptr);
  if (v.is_zero()) return combo;
  // Pivot selection: simplest coefficient first, then lowest row.
  size_t best = 0;
  size_t best_cx = v.e[0].second.complexity();
  for (size_t i = 1; i < v.e.size(); ++i) {
    size_t cx = v.e[i].second.complexity();
    if (cx < best_cx) {
      best = i;
      best_cx = cx;
    }
  }
  int64_t prow = v.e[best].first;
  Scalar pinv = v.e[best].second.inv();
  for (auto& [row, c] : v.e) c = c * pinv;
  if (track_)
    for (auto& [row, c] : combo.e) c = c * pinv;
  pivots_.emplace(prow, static_cast<int>(echelon_.size()));
  pivot_row_.push_back(prow);
  echelon_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  return std::nullopt;
}

bool Eliminator::in_span(SparseVec v) const {
  v.sort_and_combine();
  reduce(v, nullptr);
  return v.is_zero();
}

int64_t sparse_rank(const SparseMatrix& m) {
  Eliminator el(m.kind, false);
  for (const auto& c : m.cols) el.insert(c);
  return el.rank();
}

KernelResult sparse_kernel(const SparseMatrix& m) {
  Eliminator el(m.kind, true);
  KernelResult out;
  for (const auto& c : m.cols) {
    auto k = el.insert(c);
    if (k) out.kernel.push_back(std::move(*k));
  }
  out.rank = el.rank();
  return out;
}

std::vector<std::vector<Scalar>> dense_nullspace(std::vector<std::vector<Scalar>> rows, int ncols,
                                                 FieldKind k) {
  // Reduced row echelon form with pivot bookkeeping.
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (!rows[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    Scalar inv = rows[r][c].inv();
    for (int j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(k));
    v[c] = Scalar::one(k);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace counit
