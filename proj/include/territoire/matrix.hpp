#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "territoire/field.hpp"

namespace territoire {

template <class F>
using Vec = std::vector<typename F::value_type>;

/// Dense row-major matrix over an exact field.  Rows usually hold spanning
/// vectors; all subspace routines below treat a matrix as its row space.
template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix from_rows(F field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("row length does not match column count");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec<F> row_vector(std::size_t r) const { return Vec<F>(row(r).begin(), row(r).end()); }

  void append_row(std::span<const value_type> v) {
    if (v.size() != cols_) throw InputError("row length does not match column count");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }
  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    data_.resize(rows_ * cols_);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                     data_.begin() + b * cols_);
  }

  const std::vector<value_type>& data() const { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Brings `m` to reduced row echelon form in place, drops zero rows and
/// returns the pivot columns in increasing order.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t sel = rank;
    while (sel < m.rows() && f.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, rank);
    auto inv = f.inv(m(rank, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || f.is_zero(m(r, c))) continue;
      auto factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  m.truncate_rows(rank);
  return pivots;
}

template <class F>
std::pair<Matrix<F>, std::vector<std::size_t>> rref(Matrix<F> m) {
  auto pivots = rref_in_place(m);
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_in_place(m).size();
}

/// Reduces `v` against an RREF basis; the result is zero exactly when `v`
/// lies in the row space.
template <class F>
Vec<F> reduce(const Matrix<F>& rref_basis, const std::vector<std::size_t>& pivots, Vec<F> v) {
  const F& f = rref_basis.field();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto coeff = v[pivots[r]];
    if (f.is_zero(coeff)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto& b = rref_basis(r, j);
      if (!f.is_zero(b)) v[j] = f.sub(v[j], f.mul(coeff, b));
    }
  }
  return v;
}

template <class F>
bool is_zero_vector(const F& f, std::span<const typename F::value_type> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <class F>
bool in_row_space(const Matrix<F>& rref_basis, const std::vector<std::size_t>& pivots,
                  const Vec<F>& v) {
  auto r = reduce(rref_basis, pivots, v);
  return is_zero_vector(rref_basis.field(), std::span<const typename F::value_type>(r));
}

/// Basis (as rows, in RREF) of the right null space {x : m x = 0}.
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
  const F& f = m.field();
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> out(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> x(m.cols(), f.zero());
    x[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(r(i, free));
    out.append_row(x);
  }
  rref_in_place(out);
  return out;
}

/// Row-space sum of two matrices with the same column count, in RREF.
template <class F>
Matrix<F> span_union(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m = a;
  for (std::size_t r = 0; r < b.rows(); ++r) m.append_row(b.row(r));
  rref_in_place(m);
  return m;
}

/// True when the row space of `sub` is contained in the row space of `sup`.
template <class F>
bool row_space_contains(const Matrix<F>& sup, const Matrix<F>& sub) {
  auto [r, pivots] = rref(sup);
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    if (!in_row_space(r, pivots, sub.row_vector(i))) return false;
  }
  return true;
}

/// Matrix-vector product m * x.
template <class F>
Vec<F> apply(const Matrix<F>& m, const Vec<F>& x) {
  const F& f = m.field();
  Vec<F> y(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto acc = f.zero();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!f.is_zero(m(r, c)) && !f.is_zero(x[c])) acc = f.add(acc, f.mul(m(r, c), x[c]));
    }
    y[r] = acc;
  }
  return y;
}

template <class F>
Matrix<F> identity(const F& f, std::size_t n) {
  Matrix<F> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

}  // namespace territoire
