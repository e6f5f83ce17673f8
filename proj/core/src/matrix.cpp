#include "counit/matrix.hpp"

namespace counit {

FieldMatrix::FieldMatrix(int rows, int cols, FieldKind k)
    : rows_(rows), cols_(cols), kind_(k),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(k)) {
  if (rows < 0 || cols < 0) fail(errc::shape_error, "negative matrix dimension");
}

FieldMatrix FieldMatrix::identity(int n, FieldKind k) {
  FieldMatrix m(n, n, k);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(k);
  return m;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::shape_error, "matrix add shape mismatch");
  FieldMatrix r(rows_, cols_, kind_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::shape_error, "matrix sub shape mismatch");
  FieldMatrix r(rows_, cols_, kind_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) fail(errc::shape_error, "matrix mul shape mismatch");
  FieldMatrix r(rows_, o.cols_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

FieldMatrix FieldMatrix::scaled(const Scalar& c) const {
  FieldMatrix r(*this);
  for (auto& x : r.e_) x = x * c;
  return r;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix r(cols_, rows_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar FieldMatrix::trace() const {
  if (rows_ != cols_) fail(errc::shape_error, "trace of non-square matrix");
  Scalar t = Scalar::zero(kind_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

FieldMatrix FieldMatrix::inverse() const {
  if (rows_ != cols_) fail(errc::shape_error, "inverse of non-square matrix");
  int n = rows_;
  FieldMatrix a(*this);
  FieldMatrix inv = identity(n, kind_);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail(errc::singular_matrix, "matrix is singular");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Scalar pinv = a.at(col, col).inv();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) * pinv;
      inv.at(col, j) = inv.at(col, j) * pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  if (!((*this) * inv).is_identity())
    fail(errc::singular_matrix, "inverse verification failed");
  return inv;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || kind_ != o.kind_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool FieldMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

int FieldMatrix::rank() const {
  FieldMatrix a(*this);
  int rank = 0;
  int n = rows_, m = cols_;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    Scalar pinv = a.at(rank, col).inv();
    for (int j = 0; j < m; ++j) a.at(rank, j) = a.at(rank, j) * pinv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (int j = 0; j < m; ++j) a.at(r, j) = a.at(r, j) - f * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Scalar trace_invariant(const FieldMatrix& E) {
  if (E.rows() != E.cols()) fail(errc::shape_error, "trace invariant needs a square matrix");
  return (E.inverse() * E.transpose()).trace();
}

}  // namespace counit
