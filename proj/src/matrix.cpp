#include "comalg/matrix.hpp"

#include <cmath>
#include <sstream>

#include "comalg/errors.hpp"

namespace comalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged rows in matrix literal");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_vectors(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("vector length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

// Zero entries are skipped on both sides; most matrices here are sparse.
Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j).add_product(aik, bkj);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i].add_product(a(i, j), v[j]);
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (b(p, q).is_zero()) continue;
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
      }
    }
  }
  return k;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw DimensionMismatch("block_diagonal needs square blocks");
    n += b.n();
  }
  Matrix m(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i) {
      for (std::size_t j = 0; j < b.n(); ++j) m(offset + i, offset + j) = b(i, j);
    }
    offset += b.n();
  }
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vector vectorize(const Matrix& a) { return Vector(a.data().begin(), a.data().end()); }

Matrix devectorize(std::span<const Rational> v, std::size_t n) {
  if (v.size() != n * n) throw DimensionMismatch("vector length is not n^2");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  }
  return m;
}

}  // namespace comalg
