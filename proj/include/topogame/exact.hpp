#pragma once

// Exact dense linear algebra over arbitrary-precision integers and rationals.

#include "topogame/error.hpp"
#include "topogame/graph.hpp"
#include "topogame/matrix.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace topogame {

// Above this size adjugates of nonsingular matrices are assembled from
// linear solves instead of n^2 minor determinants.
inline constexpr std::size_t kAdjugateMinorLimit = 12;

namespace detail {

inline void require_square(const IntegerMatrix& m) {
  if (!m.square()) throw std::invalid_argument("matrix is not square");
}

}  // namespace detail

// Fraction-free (Bareiss) elimination; every intermediate is an exact integer.
inline Integer determinant(IntegerMatrix m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// M with row `row` and column `col` removed (0-based).
inline IntegerMatrix minor_matrix(const IntegerMatrix& m, std::size_t row, std::size_t col) {
  IntegerMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

inline Integer cofactor(const IntegerMatrix& m, std::size_t row, std::size_t col) {
  Integer c = determinant(minor_matrix(m, row, col));
  return (row + col) % 2 == 0 ? c : Integer(-c);
}

inline RationalVector solve_rational(const IntegerMatrix& m, std::span<const Integer> rhs) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(m(i, j));
    aug(i, n) = Rational(rhs[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && aug(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    if (pivot != k)
      for (std::size_t c = k; c <= n; ++c) std::swap(aug(k, c), aug(pivot, c));
    const Rational inv = 1 / aug(k, k);
    for (std::size_t c = k; c <= n; ++c) aug(k, c) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug(i, k) == 0) continue;
      const Rational factor = aug(i, k);
      for (std::size_t c = k; c <= n; ++c) aug(i, c) -= factor * aug(k, c);
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

inline RationalVector solve_rational(const IntegerMatrix& m, const IntegerVector& rhs) {
  return solve_rational(m, std::span<const Integer>(rhs));
}

// Transpose of the cofactor matrix: M * adj(M) = det(M) * I.
inline IntegerMatrix adjugate(const IntegerMatrix& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return {};
  if (n == 1) return IntegerMatrix::identity(1);
  IntegerMatrix adj(n, n);
  if (n > kAdjugateMinorLimit) {
    const Integer det = determinant(m);
    if (det != 0) {
      for (std::size_t j = 0; j < n; ++j) {
        IntegerVector unit(n, 0);
        unit[j] = 1;
        const RationalVector column = solve_rational(m, unit);
        for (std::size_t i = 0; i < n; ++i) {
          const Rational scaled = column[i] * det;
          adj(i, j) = boost::multiprecision::numerator(scaled);
        }
      }
      return adj;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = cofactor(m, j, i);
  return adj;
}

// Column `col` (0-based) of adj(M) without forming the rest.
inline IntegerVector adjugate_column(const IntegerMatrix& m, std::size_t col) {
  detail::require_square(m);
  IntegerVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = cofactor(m, col, i);
  return out;
}

// `keep` holds 1-based indices, strictly ascending.
inline IntegerMatrix principal_submatrix(const IntegerMatrix& m, std::span<const int> keep) {
  detail::require_square(m);
  const auto n = static_cast<int>(m.rows());
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (keep[t] < 1 || keep[t] > n) throw InputError("principal submatrix index out of range");
    if (t > 0 && keep[t] <= keep[t - 1]) throw InputError("principal submatrix indices must be ascending and distinct");
  }
  IntegerMatrix out(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      out(a, b) = m(static_cast<std::size_t>(keep[a] - 1), static_cast<std::size_t>(keep[b] - 1));
  return out;
}

inline std::vector<Integer> leading_principal_minors(const IntegerMatrix& m) {
  detail::require_square(m);
  std::vector<Integer> minors;
  std::vector<int> keep;
  for (int k = 1; k <= static_cast<int>(m.rows()); ++k) {
    keep.push_back(k);
    minors.push_back(determinant(principal_submatrix(m, keep)));
  }
  return minors;
}

// Sylvester's criterion; meaningful for symmetric input.
inline bool is_positive_definite(const IntegerMatrix& m) {
  for (const auto& minor : leading_principal_minors(m))
    if (minor <= 0) return false;
  return true;
}

// Matrix-Tree theorem: the (1,1) cofactor of the Laplacian. Zero when g is disconnected.
inline Integer spanning_tree_count(const Graph& g) {
  std::vector<int> keep;
  for (int v = 2; v <= g.order(); ++v) keep.push_back(v);
  return determinant(principal_submatrix(laplacian(g), keep));
}

}  // namespace topogame
