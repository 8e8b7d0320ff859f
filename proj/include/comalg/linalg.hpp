#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "comalg/matrix.hpp"

namespace comalg {

/// Operations that materialize n^2 x n^2 matrices refuse n above this
/// unless the caller passes a larger cap explicitly.
inline constexpr std::size_t kDefaultSizeCap = 32;

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// A linear subspace of Q^d, stored as the nonzero rows of its RREF basis.
/// Two subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span_of(std::span<const Vector> vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after elimination against the basis; zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(std::span<const Rational> v) const;

  /// Adjoins v, keeping the basis in RREF. Returns true iff the dimension grew.
  bool insert(Vector v);

  Matrix basis_matrix() const { return Matrix::from_vectors(rows_, ambient_dim_); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {v : Mv = 0}.
Subspace kernel_basis(const Matrix& m);

/// Dimension of the linear span of the given n x n matrices.
std::size_t span_dimension(std::span<const Matrix> matrices);

/// Exact inverse; throws SingularMatrix.
Matrix inverse(const Matrix& m);

}  // namespace comalg
