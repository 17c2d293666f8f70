#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symq {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or an integer; throws ParseError.
Rational parse_rational(const std::string& text);
/// Prints "p/q" with q > 0, or "p" when q = 1.
std::string format_rational(const Rational& q);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix from_ints(const std::vector<std::vector<long>>& rows);
  static Matrix column(const RationalVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& data() const { return data_; }

  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend RationalVector operator*(const Matrix& a, const RationalVector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

struct LinalgKit {
  std::size_t rank = 0;
  std::optional<Rational> det;
  std::vector<RationalVector> kernel_basis;
  std::size_t cokernel_dim = 0;
};

LinalgKit linalg_kit(const Matrix& m);

/// Reduced row echelon form; pivot columns returned ascending.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
/// Bareiss fraction-free elimination. Throws NotSquare.
Rational determinant(const Matrix& m);
/// Kernel basis from the RREF, one vector per free column in ascending order.
std::vector<RationalVector> kernel_basis(const Matrix& m);
/// Kernel basis as the columns of a cols x k matrix.
Matrix kernel_matrix(const Matrix& m);
/// Row indices of unit vectors completing the column space, chosen greedily by ascending row.
std::vector<std::size_t> cokernel_complement(const Matrix& m);
/// Projection onto the complement coordinates along the column space of m.
/// Result has one row per complement index and m.rows() columns.
Matrix cokernel_projection(const Matrix& m, const std::vector<std::size_t>& complement);
Matrix inverse(const Matrix& m);
std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b);

/// Pfaffian by expansion over perfect matchings.
Rational pfaffian_matching(const Matrix& m);
/// Pfaffian by skew-symmetric elimination with 2x2 pivots.
Rational pfaffian_elimination(const Matrix& m);
/// Checks shape and skew-symmetry, then dispatches on size.
Rational pfaffian(const Matrix& m);

}  // namespace symq
