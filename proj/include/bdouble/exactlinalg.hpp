#pragma once

// Exact rational linear algebra. Everything downstream (structure constants,
// derivation systems, isomorphism checks) runs through this layer, so no
// floating point appears anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdouble/errors.hpp"

namespace bdouble {

using Integer = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation; make_scalar canonicalizes literal fractions.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

Scalar make_scalar(long numerator, long denominator = 1);
// Accepts "p", "-p", "p/q"; throws InputError otherwise or on q == 0.
Scalar parse_scalar(const std::string& text);
// "p/q" or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  // Each input vector becomes one column; all must have length `rows`.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

// A sparse row: strictly increasing column indices, no zero coefficients.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// Incremental fraction-free Gaussian elimination.
//
// Rows are cleared of denominators and kept primitive over the integers while
// they are reduced; only kernel and solution vectors are normalized back to
// rationals. Rows can be streamed in one at a time, which is how the
// derivation solver feeds its (dim^3)-row system without materializing it.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t cols);

  // Returns true when the row was independent of the rows seen so far.
  bool add_row(const SparseRow& row);
  bool add_row(const Vector& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool has_pivot(std::size_t col) const;

  // Basis of {x : row . x = 0 for every row added}, one vector per free column.
  std::vector<Vector> kernel_basis() const;
  // Fully reduced echelon rows normalized to leading coefficient 1.
  std::vector<Vector> reduced_rows() const;

 private:
  using IntRow = std::vector<std::pair<std::size_t, Integer>>;

  std::vector<IntRow> fully_reduced() const;

  std::size_t cols_;
  std::vector<IntRow> pivots_;
  std::vector<long> pivot_of_col_;
};

std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
// Some x with m x = b, or nullopt. Throws InputError when b.size() != rows.
std::optional<Vector> solve_system(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

// Reduced echelon basis of span(vectors); empty input gives an empty basis.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
std::size_t span_dimension(const std::vector<Vector>& vectors, std::size_t dim);
bool in_span(const std::vector<Vector>& vectors, const Vector& v);
// True when span(a) == span(b).
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);
// Coordinates of v in an independent family, or nullopt when v is outside it.
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v);
// Basis of {w : w . b = 0 for all b in vectors}.
std::vector<Vector> annihilator(const std::vector<Vector>& vectors, std::size_t dim);

// Distinct eigenvalues of a matrix that is diagonalizable over Q with
// rational eigenvalues, in increasing order. Throws InputError when the
// minimal polynomial does not split into distinct rational linear factors.
std::vector<Scalar> rational_eigenvalues(const Matrix& m);

}  // namespace bdouble
