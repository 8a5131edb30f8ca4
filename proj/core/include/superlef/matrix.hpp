#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superlef/rational.hpp"

namespace superlef {

/// Dense matrix over an exact scalar (or any ring entry with EntryTraits).
/// Row-major; all arithmetic exact.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols,
                                        EntryTraits<T>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = EntryTraits<T>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool isZero() const {
    for (const T& v : data_)
      if (!EntryTraits<T>::isZero(v)) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k)
      c.data_[k] = a.data_[k] + b.data_[k];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k)
      c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }
  friend Mat operator-(const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = -a.data_[k];
    return c;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (EntryTraits<T>::isZero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b.at(k, j);
          if (EntryTraits<T>::isZero(bkj)) continue;
          c.at(i, j) = c.at(i, j) + aik * bkj;
        }
      }
    return c;
  }

  Mat scaled(const T& s) const {
    Mat c(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) c.data_[k] = data_[k] * s;
    return c;
  }

  Mat transpose() const {
    Mat c(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) c.at(j, i) = at(i, j);
    return c;
  }

  std::vector<T> applyTo(const std::vector<T>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<T> out(rows_, EntryTraits<T>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (EntryTraits<T>::isZero(at(i, j))) continue;
        out[i] = out[i] + at(i, j) * v[j];
      }
    return out;
  }

  std::vector<T> flatten() const { return data_; }

  static Mat fromFlat(int rows, int cols, std::vector<T> flat) {
    assert(static_cast<int>(flat.size()) == rows * cols);
    Mat m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(flat);
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Mat<T> bracket(const Mat<T>& a, const Mat<T>& b) {
  return a * b - b * a;
}

/// Reduces to reduced row echelon form in place (entries must form a field).
/// Pivot rule: first row with a nonzero entry in the leftmost open column —
/// fully deterministic, no size heuristics. Returns the pivot columns.
template <class T>
std::vector<int> rrefInPlace(Mat<T>& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!EntryTraits<T>::isZero(a.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    T inv = EntryTraits<T>::one() / a.at(row, col);
    for (int j = 0; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || EntryTraits<T>::isZero(a.at(i, col))) continue;
      T f = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank(Mat<T> a) {
  return static_cast<int>(rrefInPlace(a).size());
}

/// Exact solver for A·x = b with a reusable factorization: the reduced
/// echelon form of [A | I] is computed once, then any right-hand side is
/// solved by one matrix-vector product plus a consistency check.
template <class T>
class LinearSolver {
 public:
  explicit LinearSolver(const Mat<T>& a) : rows_(a.rows()), cols_(a.cols()) {
    Mat<T> aug(rows_, cols_ + rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = a.at(i, j);
      aug.at(i, cols_ + i) = EntryTraits<T>::one();
    }
    std::vector<int> pivots = rrefInPlace(aug);
    for (int c : pivots)
      if (c < cols_) pivots_.push_back(c);
    // Pivots inside the identity block mean rows of A beyond its rank; the
    // corresponding transformed rows must vanish on a consistent rhs.
    reduced_ = std::move(aug);
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  bool fullColumnRank() const { return rank() == cols_; }

  /// Returns the solution with all free variables set to zero, or nullopt if
  /// the system is inconsistent. Unique iff fullColumnRank().
  std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
    assert(static_cast<int>(b.size()) == rows_);
    std::vector<T> y(rows_, EntryTraits<T>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < rows_; ++j) {
        const T& t = reduced_.at(i, cols_ + j);
        if (!EntryTraits<T>::isZero(t)) y[i] = y[i] + t * b[j];
      }
    for (int i = rank(); i < rows_; ++i)
      if (!EntryTraits<T>::isZero(y[i])) return std::nullopt;
    std::vector<T> x(cols_, EntryTraits<T>::zero());
    for (int k = 0; k < rank(); ++k) x[pivots_[k]] = y[k];
    return x;
  }

  /// Basis of the kernel of A, one vector per free column, in column order.
  std::vector<std::vector<T>> kernelBasis() const {
    std::vector<bool> isPivot(cols_, false);
    for (int c : pivots_) isPivot[c] = true;
    std::vector<std::vector<T>> out;
    for (int f = 0; f < cols_; ++f) {
      if (isPivot[f]) continue;
      std::vector<T> v(cols_, EntryTraits<T>::zero());
      v[f] = EntryTraits<T>::one();
      for (int k = 0; k < rank(); ++k)
        v[pivots_[k]] = -reduced_.at(k, f);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  int rows_;
  int cols_;
  Mat<T> reduced_;
  std::vector<int> pivots_;
};

/// Incremental echelonized span of vectors. Insertion keeps the stored basis
/// fully reduced (each pivot column is zero in every other basis vector), so
/// the basis of a given span is canonical and iteration order deterministic.
template <class T>
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  int ambientDim() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Reduces v against the span; returns the residual (zero iff v in span).
  std::vector<T> reduce(std::vector<T> v) const {
    assert(static_cast<int>(v.size()) == dim_);
    for (const auto& [p, r] : rows_) {
      if (EntryTraits<T>::isZero(v[p])) continue;
      T f = v[p];
      for (int j = p; j < dim_; ++j)
        if (!EntryTraits<T>::isZero(r[j])) v[j] = v[j] - f * r[j];
    }
    return v;
  }

  bool contains(const std::vector<T>& v) const {
    std::vector<T> r = reduce(v);
    for (const T& x : r)
      if (!EntryTraits<T>::isZero(x)) return false;
    return true;
  }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(std::vector<T> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < dim_; ++j)
      if (!EntryTraits<T>::isZero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    T inv = EntryTraits<T>::one() / v[p];
    for (int j = p; j < dim_; ++j) v[j] = v[j] * inv;
    for (auto& [q, r] : rows_) {
      if (EntryTraits<T>::isZero(r[p])) continue;
      T f = r[p];
      for (int j = p; j < dim_; ++j)
        if (!EntryTraits<T>::isZero(v[j])) r[j] = r[j] - f * v[j];
    }
    auto it = rows_.begin();
    while (it != rows_.end() && it->first < p) ++it;
    rows_.insert(it, {p, std::move(v)});
    return true;
  }

  /// Canonical basis vectors, ordered by pivot column.
  std::vector<std::vector<T>> basis() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  int dim_;
  std::vector<std::pair<int, std::vector<T>>> rows_;
};

}  // namespace superlef
