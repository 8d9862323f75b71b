#pragma once

// Exact linear algebra over Q: small dense matrices for subspaces and a
// sparse incremental row echelon form for rank computations.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/rational.hpp"

namespace positroid {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(int rows, int cols, std::vector<Rational> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols) throw InvalidInput("matrix: data size mismatch");
  }
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw InvalidInput("matrix: ragged rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Rational> row(int i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
            data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int l = 0; l < a.cols_; ++l) {
        if (a(i, l) == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, l) * b(l, j);
      }
    return out;
  }
  friend Matrix operator*(const Rational& s, Matrix m) {
    for (Rational& x : m.data_) x *= s;
    return m;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  // Rows of `this` followed by rows of `below`.
  Matrix stacked(const Matrix& below) const {
    if (rows_ > 0 && below.rows_ > 0 && cols_ != below.cols_) throw InvalidInput("stack: column mismatch");
    Matrix out(rows_ + below.rows_, std::max(cols_, below.cols_));
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  Matrix columns(const std::vector<int>& cols) const {
    Matrix out(rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

// Determinant by Gaussian elimination over Q.
inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
  int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Incremental rank of a set of sparse rows. Each inserted row is reduced
// against the stored pivots; nonzero remainders become new pivot rows.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<int, Rational>>;  // sorted by column

  explicit SparseEchelon(int columns) : columns_(columns) {}

  int rank() const noexcept { return static_cast<int>(pivots_.size()); }
  int columns() const noexcept { return columns_; }
  bool full() const noexcept { return rank() == columns_; }

  // Returns true if the row increased the rank.
  bool insert(Row row) {
    std::map<int, Rational> work;
    for (auto& [c, v] : row)
      if (v != 0) work[c] += v;
    while (!work.empty()) {
      auto it = work.begin();
      if (it->second == 0) {
        work.erase(it);
        continue;
      }
      auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) break;
      Rational f = it->second;
      for (const auto& [c, v] : pivot->second) {
        Rational& slot = work[c];
        slot -= f * v;
        if (slot == 0) work.erase(c);
      }
    }
    if (work.empty()) return false;
    int lead = work.begin()->first;
    Rational inv = 1 / work.begin()->second;
    Row stored;
    stored.reserve(work.size());
    for (auto& [c, v] : work) stored.emplace_back(c, v * inv);
    pivots_.emplace(lead, std::move(stored));
    return true;
  }

 private:
  int columns_;
  std::map<int, Row> pivots_;  // leading column -> normalized row
};

}  // namespace positroid
