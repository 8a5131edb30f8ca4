#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "superlef/matrix.hpp"

namespace superlef {

/// Sparse row-major matrix over any exact ring entry (scalars or
/// polynomials). Rows hold (col, value) pairs sorted by column with no stored
/// zeros, so equality is representational equality and all iteration is
/// deterministic. Products accumulate each output row in a dense scratch
/// buffer, which is what keeps 256x256 operator algebra fast.
template <class T>
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.row_[i].push_back({i, EntryTraits<T>::one()});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const std::vector<std::pair<int, T>>& row(int i) const { return row_[i]; }

  bool isZero() const {
    for (const auto& r : row_)
      if (!r.empty()) return false;
    return true;
  }

  size_t nonzeroCount() const {
    size_t n = 0;
    for (const auto& r : row_) n += r.size();
    return n;
  }

  T get(int i, int j) const {
    const auto& r = row_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const std::pair<int, T>& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) return it->second;
    return EntryTraits<T>::zero();
  }

  /// Adds v to entry (i, j), dropping the entry if it cancels to zero.
  void add(int i, int j, const T& v) {
    if (EntryTraits<T>::isZero(v)) return;
    auto& r = row_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const std::pair<int, T>& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) {
      it->second = it->second + v;
      if (EntryTraits<T>::isZero(it->second)) r.erase(it);
    } else {
      r.insert(it, {j, v});
    }
  }

  void set(int i, int j, const T& v) {
    auto& r = row_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const std::pair<int, T>& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) {
      if (EntryTraits<T>::isZero(v))
        r.erase(it);
      else
        it->second = v;
    } else if (!EntryTraits<T>::isZero(v)) {
      r.insert(it, {j, v});
    }
  }

  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
  }
  friend bool operator!=(const SparseMat& a, const SparseMat& b) {
    return !(a == b);
  }

  friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    SparseMat c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      const auto& ra = a.row_[i];
      const auto& rb = b.row_[i];
      auto& rc = c.row_[i];
      size_t x = 0, y = 0;
      while (x < ra.size() || y < rb.size()) {
        if (y == rb.size() || (x < ra.size() && ra[x].first < rb[y].first)) {
          rc.push_back(ra[x++]);
        } else if (x == ra.size() || rb[y].first < ra[x].first) {
          rc.push_back(rb[y++]);
        } else {
          T s = ra[x].second + rb[y].second;
          if (!EntryTraits<T>::isZero(s)) rc.push_back({ra[x].first, s});
          ++x;
          ++y;
        }
      }
    }
    return c;
  }
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    return a + b.scaled(-EntryTraits<T>::one());
  }
  friend SparseMat operator-(const SparseMat& a) {
    return a.scaled(-EntryTraits<T>::one());
  }
  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    assert(a.cols_ == b.rows_);
    SparseMat c(a.rows_, b.cols_);
    std::vector<T> scratch(b.cols_, EntryTraits<T>::zero());
    std::vector<int> touched;
    for (int i = 0; i < a.rows_; ++i) {
      touched.clear();
      for (const auto& [k, av] : a.row_[i]) {
        for (const auto& [j, bv] : b.row_[k]) {
          if (EntryTraits<T>::isZero(scratch[j]))
            touched.push_back(j);
          scratch[j] = scratch[j] + av * bv;
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& rc = c.row_[i];
      for (int j : touched) {
        if (!EntryTraits<T>::isZero(scratch[j])) rc.push_back({j, scratch[j]});
        scratch[j] = EntryTraits<T>::zero();
      }
    }
    return c;
  }

  SparseMat scaled(const T& s) const {
    SparseMat c(rows_, cols_);
    if (EntryTraits<T>::isZero(s)) return c;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : row_[i]) {
        T w = v * s;
        if (!EntryTraits<T>::isZero(w)) c.row_[i].push_back({j, w});
      }
    return c;
  }

  SparseMat transpose() const {
    SparseMat c(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : row_[i]) c.row_[j].push_back({i, v});
    for (auto& r : c.row_)
      std::sort(r.begin(), r.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    return c;
  }

  std::vector<T> applyTo(const std::vector<T>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<T> out(rows_, EntryTraits<T>::zero());
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, a] : row_[i]) out[i] = out[i] + a * v[j];
    return out;
  }

  Mat<T> toDense() const {
    Mat<T> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : row_[i]) m.at(i, j) = v;
    return m;
  }

  static SparseMat fromDense(const Mat<T>& m) {
    SparseMat s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!EntryTraits<T>::isZero(m.at(i, j)))
          s.row_[i].push_back({j, m.at(i, j)});
    return s;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<std::pair<int, T>>> row_;
};

}  // namespace superlef
