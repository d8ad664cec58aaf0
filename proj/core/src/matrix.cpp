#include "oinv/matrix.hpp"

#include <utility>

#include "oinv/errors.hpp"

namespace oinv {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : Matrix(std::vector<std::vector<Rational>>(rows.begin(), rows.end())) {}

Matrix::Matrix(std::vector<std::vector<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw SizeMismatch("ragged matrix rows");
    for (auto& v : row) data_.push_back(std::move(v));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
  Matrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shapes");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix sum shapes");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix difference shapes");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix Matrix::operator*(const Rational& scalar) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= scalar;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

namespace {

/// Scales each row by the lcm of its denominators. Returns the integer
/// matrix and the product of the scale factors.
std::pair<std::vector<std::vector<Integer>>, Integer> clear_denominators(
    const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  Integer scale(1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                                    m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= l;
  }
  return {std::move(out), scale};
}

/// In-place Bareiss elimination with row pivoting over an integer matrix.
/// Returns the rank; `sign` tracks row swaps and `last_pivot` the final
/// leading minor.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, int& sign,
                    Integer& last_pivot) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  sign = 1;
  Integer prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[r][c] * a[rank][col] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  auto [ints, scale] = clear_denominators(m);
  int sign = 1;
  Integer last;
  if (bareiss(ints, sign, last) < m.rows()) return Rational(0);
  Rational det(last * sign, scale);
  det.canonicalize();
  return det;
}

std::size_t rank(const Matrix& m) {
  auto [ints, scale] = clear_denominators(m);
  int sign = 1;
  Integer last;
  return bareiss(ints, sign, last);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace oinv
