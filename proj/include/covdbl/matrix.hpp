#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covdbl/field.hpp"

namespace covdbl {

/// Dense row-major matrix over an exact field (Rationals or PrimeField).
template <class Field>
class Matrix {
 public:
  using Elem = typename Field::Elem;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from integer rows; all rows must have equal length.
  static Matrix from_rows(const Field& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("ring mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("inner dimensions disagree");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t l = 0; l < cols_; ++l) {
        const Elem& a = (*this)(i, l);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          r(i, j) = field_.add(r(i, j), field_.mul(a, o(l, j)));
        }
      }
    }
    return r;
  }

  Matrix scaled(const Elem& s) const {
    Matrix r(*this);
    for (auto& x : r.data_) x = field_.mul(s, x);
    return r;
  }

  Matrix transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block outside matrix");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? field_.one() : field_.zero())) return false;
    return true;
  }

  /// Row echelon form in place; returns the rank and accumulates the
  /// determinant factor (sign of swaps times pivots) in *det when given.
  std::size_t eliminate(Elem* det = nullptr) {
    Elem d = field_.one();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      std::size_t piv = rank;
      while (piv < rows_ && field_.is_zero((*this)(piv, c))) ++piv;
      if (piv == rows_) {
        d = field_.zero();
        continue;
      }
      if (piv != rank) {
        swap_rows(piv, rank);
        d = field_.neg(d);
      }
      const Elem p = (*this)(rank, c);
      d = field_.mul(d, p);
      const Elem pinv = field_.inv(p);
      for (std::size_t i = rank + 1; i < rows_; ++i) {
        if (field_.is_zero((*this)(i, c))) continue;
        const Elem f = field_.mul((*this)(i, c), pinv);
        for (std::size_t j = c; j < cols_; ++j) {
          (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(f, (*this)(rank, j)));
        }
      }
      ++rank;
    }
    if (det) *det = rank == rows_ ? d : field_.zero();
    return rank;
  }

  std::size_t rank() const {
    Matrix tmp(*this);
    return tmp.eliminate();
  }

  Elem determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    Matrix tmp(*this);
    Elem d = field_.zero();
    tmp.eliminate(&d);
    return d;
  }

  /// Gauss-Jordan inverse; empty when singular.
  std::optional<Matrix> inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix a(*this);
    Matrix inv = identity(field_, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && field_.is_zero(a(piv, c))) ++piv;
      if (piv == n) return std::nullopt;
      if (piv != c) {
        a.swap_rows(piv, c);
        inv.swap_rows(piv, c);
      }
      const Elem pinv = field_.inv(a(c, c));
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) = field_.mul(a(c, j), pinv);
        inv(c, j) = field_.mul(inv(c, j), pinv);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || field_.is_zero(a(i, c))) continue;
        const Elem f = a(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = field_.sub(a(i, j), field_.mul(f, a(c, j)));
          inv(i, j) = field_.sub(inv(i, j), field_.mul(f, inv(c, j)));
        }
      }
    }
    return inv;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.str((*this)(i, j));
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void check_same_shape(const Matrix& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("ring mismatch");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

using QMatrix = Matrix<Rationals>;
using FpMatrix = Matrix<PrimeField>;

/// Entrywise reduction of a p-integral rational matrix into F_p.
inline FpMatrix reduce_mod(const QMatrix& m, const PrimeField& fp) {
  FpMatrix r(fp, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = fp.from_rational(m(i, j));
  return r;
}

/// Inverse that throws instead of returning empty.
template <class Field>
Matrix<Field> inverse_or_throw(const Matrix<Field>& m) {
  auto inv = m.inverse();
  if (!inv) throw std::domain_error("matrix is singular");
  return *std::move(inv);
}

}  // namespace covdbl
