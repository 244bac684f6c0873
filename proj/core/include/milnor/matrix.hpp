#pragma once

#include <utility>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

/// Dense matrix over an exact field element type T. T must provide the four
/// arithmetic operators plus the free functions is_zero(T) and
/// check_same_field(T, T).
template <class T>
class Matrix {
 public:
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows),
        cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows[0].empty()) {
      throw InputError("empty-matrix", "matrix needs at least one entry");
    }
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()),
             rows[0][0]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size()) {
        throw InputError("ragged-matrix", "rows have differing lengths");
      }
      for (size_t j = 0; j < rows[i].size(); ++j) {
        m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
      }
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) {
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                 static_cast<size_t>(c)];
  }
  const T& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                 static_cast<size_t>(c)];
  }

  Matrix transposed() const {
    if (data_.empty()) {
      throw InputError("empty-matrix", "cannot transpose an empty matrix");
    }
    Matrix out(cols_, rows_, data_[0]);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  bool operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i) {
      if (!(data_[i] == other.data_[i])) return false;
    }
    return true;
  }

 private:
  int rows_;
  int cols_;
  std::vector<T> data_;
};

template <class T>
struct RrefResult {
  Matrix<T> reduced;
  int rank;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice
/// is the first nonzero entry in column order; the result is the unique RREF
/// of the row space. Mixed-field input is rejected.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
  if (m.rows() > 0 && m.cols() > 0) {
    const T& first = m.at(0, 0);
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) check_same_field(first, m.at(r, c));
    }
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot_row = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!is_zero(m.at(i, c))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    m.swap_rows(r, pivot_row);
    T pivot = m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) / pivot;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      T factor = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) {
        m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult<T>{std::move(m), r, std::move(pivots)};
}

template <class T>
int rank_of(const Matrix<T>& m) {
  return rref(m).rank;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v, const T& zero) {
  std::vector<T> out(static_cast<size_t>(m.rows()), zero);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out[static_cast<size_t>(r)] =
          out[static_cast<size_t>(r)] + m.at(r, c) * v[static_cast<size_t>(c)];
    }
  }
  return out;
}

}  // namespace milnor
