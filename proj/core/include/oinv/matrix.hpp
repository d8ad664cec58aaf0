#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "oinv/rational.hpp"

namespace oinv {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws SizeMismatch on ragged input.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  explicit Matrix(std::vector<std::vector<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Rational& scalar) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
Rational determinant(const Matrix& m);

/// Rank over Q by fraction-free elimination.
std::size_t rank(const Matrix& m);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace oinv
