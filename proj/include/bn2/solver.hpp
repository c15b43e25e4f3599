#pragma once

// Dense exact linear algebra over the rationals.
//
// Two independent elimination routes are provided and act as mutual oracles:
//   - bareiss::  rows are cleared of denominators and reduced fraction-free
//                over the integers (exact divisions by the previous pivot);
//   - gauss::    textbook Gauss-Jordan elimination directly on rationals.
// The top-level solve_exact/rank/det_is_nonzero use the Bareiss route;
// nullspace uses the reduced row echelon form from the Gauss route.

#include <bn2/exactnum.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bn2 {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<BigRational>;
using IntegerMatrix = Matrix<BigInt>;
using RationalVector = std::vector<BigRational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t rank, std::size_t order)
      : std::runtime_error("matrix of order " + std::to_string(order) + " is singular (rank " +
                           std::to_string(rank) + ")"),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("multiply: vector length differs from column count");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * x[j];
  return out;
}

namespace bareiss {

/// Each row multiplied by the lcm of its denominators. Row scaling preserves
/// rank and kernel; `scales` receives the multipliers.
inline IntegerMatrix clear_denominators(const RationalMatrix& a, std::vector<BigInt>* scales = nullptr) {
  IntegerMatrix out(a.rows(), a.cols());
  if (scales) scales->assign(a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (const auto& v : a.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c).get_num() * (l / a(r, c).get_den());
    if (scales) (*scales)[r] = l;
  }
  return out;
}

struct Echelon {
  IntegerMatrix m;                    // fraction-free row echelon form
  std::vector<std::size_t> pivot_cols;
  int sign = 1;                       // parity of row swaps
};

/// Fraction-free elimination over the first `elim_cols` columns; later columns
/// (an augmented right-hand side) are carried along.
inline Echelon eliminate(IntegerMatrix m, std::size_t elim_cols) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < rows; ++c) {
    // Pivot on the entry with the largest bit length in this column.
    std::size_t pivot = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const std::size_t bits = mpz_sizeinbase(m(i, c).get_mpz_t(), 2);
      if (pivot == rows || bits > best_bits) {
        pivot = i;
        best_bits = bits;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      m.swap_rows(pivot, r);
      e.sign = -e.sign;
    }
    const BigInt p = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt f = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = p * m(i, j) - f * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

inline std::size_t rank(const RationalMatrix& a) {
  return eliminate(clear_denominators(a), a.cols()).pivot_cols.size();
}

/// Exact determinant of a square rational matrix.
inline BigRational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<BigInt> scales;
  const auto e = eliminate(clear_denominators(a, &scales), n);
  if (e.pivot_cols.size() < n) return 0;
  BigInt scale = 1;
  for (const auto& s : scales) scale *= s;
  return make_rational(e.sign * e.m(n - 1, n - 1), scale);
}

/// Unique solution of a square nonsingular system.
inline RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve needs a square matrix");
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs from matrix order");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto e = eliminate(clear_denominators(aug), n);
  if (e.pivot_cols.size() < n) throw SingularMatrixError(e.pivot_cols.size(), n);
  RationalVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    BigRational acc(e.m(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j) acc -= BigRational(e.m(ii, j)) * x[j];
    x[ii] = acc / BigRational(e.m(ii, ii));
  }
  return x;
}

}  // namespace bareiss

namespace gauss {

struct Rref {
  RationalMatrix m;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form over the first `elim_cols` columns, first nonzero
/// entry as pivot.
inline Rref reduce(RationalMatrix m, std::size_t elim_cols) {
  Rref out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, r);
    const BigRational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const BigRational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

inline std::size_t rank(const RationalMatrix& a) { return reduce(a, a.cols()).pivot_cols.size(); }

inline RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve needs a square matrix");
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs from matrix order");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto red = reduce(std::move(aug), n);
  if (red.pivot_cols.size() < n) throw SingularMatrixError(red.pivot_cols.size(), n);
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = red.m(i, n);
  return x;
}

}  // namespace gauss

inline std::size_t rank(const RationalMatrix& a) { return bareiss::rank(a); }

inline bool det_is_nonzero(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("det_is_nonzero needs a square matrix");
  return bareiss::rank(a) == a.rows();
}

/// Kernel basis; each vector has its first nonzero coordinate equal to 1.
inline std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const auto red = gauss::reduce(a, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) v[red.pivot_cols[r]] = -red.m(r, free);
    const auto lead = std::find_if(v.begin(), v.end(), [](const BigRational& q) { return q != 0; });
    const BigRational s = *lead;
    for (auto& q : v) q /= s;
    out.push_back(std::move(v));
  }
  return out;
}

/// Solves a square nonsingular system and checks the solution against every
/// equation before returning it.
inline RationalVector solve_exact(const RationalMatrix& a, const RationalVector& b) {
  auto x = bareiss::solve(a, b);
  if (multiply(a, x) != b) throw std::logic_error("solve_exact: residual is not identically zero");
  return x;
}

}  // namespace bn2
