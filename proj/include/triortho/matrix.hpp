// Copyright 2026 The triortho Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense row-major matrices over GF(2^m) and the Gaussian elimination
// primitives the code constructions need (rank, reduced row echelon form,
// kernels, rowspace membership).

#ifndef TRIORTHO_MATRIX_HPP
#define TRIORTHO_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "triortho/gf2m.hpp"

namespace triortho {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<Gf>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Gf& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Gf operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Gf> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Gf> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Gf> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  void append_row(std::span<const Gf> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  /// Rows [r0, r0+nr) and columns listed in `cols`, in that order.
  Matrix submatrix(std::size_t r0, std::size_t nr, std::span<const std::size_t> cols) const {
    Matrix m(nr, cols.size());
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(r0 + i, cols[j]);
    return m;
  }

  Matrix permute_columns(std::span<const std::size_t> perm) const { return submatrix(0, rows_, perm); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf> data_;
};

/// Stack a on top of b (equal column counts).
inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
  return m;
}

/// dst += c * src.
inline void axpy(const Field& f, Gf c, std::span<const Gf> src, std::span<Gf> dst) {
  if (c.bits == 0) return;
  for (std::size_t j = 0; j < src.size(); ++j)
    if (src[j].bits != 0) dst[j] = Field::add(dst[j], f.mul(c, src[j]));
}

inline Gf dot(const Field& f, std::span<const Gf> a, std::span<const Gf> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
  Gf acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = Field::add(acc, f.mul(a[i], b[i]));
  return acc;
}

inline std::size_t weight(std::span<const Gf> v) {
  std::size_t w = 0;
  for (Gf x : v) w += x.bits != 0 ? 1 : 0;
  return w;
}

struct RowEchelon {
  Matrix reduced;                   // rank rows, reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Columns are scanned left to right; the pivot
/// for a column is the lowest-index remaining row with a nonzero entry.
/// Zero rows are dropped from the result.
inline RowEchelon rref(const Field& f, Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).bits == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Gf inv = f.inv(m(r, c));
    for (Gf& x : m.row(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c).bits != 0) axpy(f, m(i, c), m.row(r), m.row(i));
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = Matrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) std::copy(m.row(i).begin(), m.row(i).end(), out.reduced.row(i).begin());
  return out;
}

inline std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank(); }

/// Reduce v against an echelon form; zero result means v is in the rowspace.
inline std::vector<Gf> reduce_against(const Field& f, const RowEchelon& e, std::span<const Gf> v) {
  std::vector<Gf> w(v.begin(), v.end());
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const Gf c = w[e.pivots[i]];
    if (c.bits != 0) axpy(f, c, e.reduced.row(i), w);
  }
  return w;
}

inline bool in_rowspace(const Field& f, const RowEchelon& e, std::span<const Gf> v) {
  return weight(reduce_against(f, e, v)) == 0;
}

/// Basis (as rows) of {v : m * v^T = 0}, one vector per non-pivot column
/// in increasing column order.
inline Matrix kernel(const Field& f, const Matrix& m) {
  const RowEchelon e = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix k(m.cols() - e.rank(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = f.one();
    for (std::size_t i = 0; i < e.rank(); ++i) k(out, e.pivots[i]) = e.reduced(i, free);
    ++out;
  }
  return k;
}

inline bool same_rowspace(const Field& f, const Matrix& a, const Matrix& b) {
  const std::size_t ra = rank(f, a);
  return ra == rank(f, b) && ra == rank(f, vstack(a, b));
}

/// a * b^T == 0.
inline bool rows_orthogonal(const Field& f, const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j)
      if (dot(f, a.row(i), b.row(j)).bits != 0) return false;
  return true;
}

}  // namespace triortho

#endif  // TRIORTHO_MATRIX_HPP
