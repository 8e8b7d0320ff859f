#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "comalg/rational.hpp"

namespace comalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Rectangular in general; the
/// square case is what every algebraic operation works with.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Matrix whose rows are the given vectors (all of equal length).
  static Matrix from_vectors(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length; only meaningful for square matrices.
  std::size_t n() const { return rows_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> data() const { return data_; }

  bool is_zero() const;

  Matrix transpose() const;
  Matrix pow(unsigned exponent) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Matrix-vector product.
Vector operator*(const Matrix& a, std::span<const Rational> v);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);
/// AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

/// Row-major flattening: entry (i, j) lands at index i*n + j.
Vector vectorize(const Matrix& a);
Matrix devectorize(std::span<const Rational> v, std::size_t n);

}  // namespace comalg
