#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sgn/signed_graph.hpp"

namespace sgraph {

using Integer = mpz_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Integer trace() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// det(xI - A) = x^n + a_1 x^(n-1) + ... + a_n, stored as a_0 = 1, a_1, ..., a_n.
class CharPoly {
 public:
  /// Throws std::invalid_argument unless the sequence is nonempty with a_0 = 1.
  explicit CharPoly(std::vector<Integer> coefficients);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const Integer& coefficient(int i) const { return coefficients_.at(static_cast<std::size_t>(i)); }
  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }

  /// Human-readable form such as "x^3 - 3x + 2".
  std::string to_string(const std::string& variable = "x") const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<Integer> coefficients_;
};

/// Entry (i, j) is the sign of edge {i, j}, or 0.
ExactMatrix adjacency_matrix(const SignedGraph& g);

/// Exact rank by fraction-free (Bareiss) elimination; the pivot is the first
/// nonzero entry of the current column.
std::size_t rank(ExactMatrix m);

/// Bareiss determinant. Throws DimensionError on a non-square matrix.
Integer determinant(ExactMatrix m);

/// Faddeev-LeVerrier recurrence; every division is exact.
CharPoly char_poly(const ExactMatrix& m);

/// Independent route: det(xI - A) evaluated at x = 0, 1, -1, 2, -2, ...
/// and interpolated exactly.
CharPoly char_poly_interpolated(const ExactMatrix& m);

/// Number of trailing zero coefficients a_n, a_(n-1), ...
int zero_multiplicity(const CharPoly& p);

/// n - rank(A). Graphs with at most 24 vertices are eliminated in 128-bit
/// integers, which is exact there; larger ones use rank().
int nullity_rank(const SignedGraph& g);

/// zero_multiplicity(char_poly(A)).
int nullity_charpoly(const SignedGraph& g);

}  // namespace sgraph
