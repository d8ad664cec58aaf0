// Independent reference computations used to derive expected values.
// Deliberately naive; they share no code path with the library routines
// they check.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "oinv/matrix.hpp"
#include "oinv/polynomial.hpp"

namespace oinv::oracle {

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

/// Leibniz formula over all permutations.
inline Polynomial leibniz_determinant(const std::vector<std::vector<Polynomial>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out;
  do {
    Polynomial term{Rational(permutation_sign(perm))};
    for (std::size_t r = 0; r < m.size(); ++r) term = term * m[r][perm[r]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Rational leibniz_determinant(const Matrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational out(0);
  do {
    Rational term(permutation_sign(perm));
    for (std::size_t r = 0; r < m.rows(); ++r) term *= m(r, perm[r]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Rank by plain rational row reduction (no fraction-free tricks).
inline std::size_t naive_rank(Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oinv::oracle
