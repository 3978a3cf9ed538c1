#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const FieldSpec& f, std::size_t n) {
  return Vec(n, f.zero());
}

inline Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v[i] = f.one();
  return v;
}

inline Vec add(const FieldSpec& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw UsageError("vector add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

inline Vec sub(const FieldSpec& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw UsageError("vector sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

inline Vec scale(const FieldSpec& f, const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

inline Vec neg(const FieldSpec& f, const Vec& a) {
  return scale(f, f.from_int(-1), a);
}

inline bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// Dense row-major matrix over a fixed field.
class Matrix {
 public:
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  static Matrix identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const FieldSpec& f, std::size_t rows, std::size_t cols,
                          std::initializer_list<std::int64_t> entries) {
    if (entries.size() != rows * cols)
      throw UsageError("Matrix::from_rows: wrong entry count");
    Matrix m(f, rows, cols);
    std::size_t idx = 0;
    for (auto v : entries) m.e_[idx++] = f.from_int(v);
    return m;
  }

  /// Matrix whose rows are the given vectors.
  static Matrix of_rows(const FieldSpec& f, std::size_t cols,
                        const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw UsageError("Matrix::of_rows: row size");
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix of_cols(const FieldSpec& f, std::size_t rows,
                        const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw UsageError("Matrix::of_cols: col size");
      for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const {
    return Vec(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vec col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw UsageError("Matrix::apply: size mismatch");
    Vec y(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        y[r] = field_.add(y[r], field_.mul(at(r, c), x[c]));
    return y;
  }

  Matrix mul(const Matrix& o) const {
    if (field_ != o.field_) throw UsageError("Matrix::mul: field mismatch");
    if (cols_ != o.rows_) throw UsageError("Matrix::mul: shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          m.at(r, c) = field_.add(m.at(r, c), field_.mul(at(r, k), o.at(k, c)));
      }
    return m;
  }

  Matrix add(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
      throw UsageError("Matrix::add: shape/field mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = field_.add(e_[i], o.e_[i]);
    return m;
  }

  Matrix sub(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
      throw UsageError("Matrix::sub: shape/field mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = field_.sub(e_[i], o.e_[i]);
    return m;
  }

  Matrix transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  /// [this | o] side by side.
  Matrix hstack(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_)
      throw UsageError("Matrix::hstack: mismatch");
    Matrix m(field_, rows_, cols_ + o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
    }
    return m;
  }

  /// [this; o] stacked vertically.
  Matrix vstack(const Matrix& o) const {
    if (field_ != o.field_ || cols_ != o.cols_)
      throw UsageError("Matrix::vstack: mismatch");
    Matrix m(field_, rows_ + o.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (std::size_t r = 0; r < o.rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

}  // namespace leibniz

#endif
