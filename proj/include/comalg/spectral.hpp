#pragma once

#include <cstddef>
#include <vector>

#include "comalg/family.hpp"
#include "comalg/linalg.hpp"
#include "comalg/matrix.hpp"
#include "comalg/partition.hpp"

namespace comalg {

/// True iff A^n = 0. Multiplies up to n times, stopping at the first zero power.
bool is_nilpotent(const Matrix& a);

/// (rank A^0, rank A^1, ...) up to and including the first zero rank, or
/// until the sequence stabilizes for non-nilpotent input.
std::vector<std::size_t> rank_sequence(const Matrix& a);

/// Jordan block sizes of a nilpotent matrix, from its rank sequence: the
/// number of blocks of size >= t is rank(A^{t-1}) - rank(A^t).
/// Throws NotNilpotent.
Partition jordan_type(const Matrix& a);

/// diag(J_{p_1}, ..., J_{p_k}) with ones on the superdiagonal of each block.
Matrix jordan_matrix(const Partition& p);

/// A joint generalized eigenspace of a commuting family.
struct JointBlock {
  /// Basis vectors of the block, in RREF (as rows).
  std::vector<Vector> basis;
  /// One eigenvalue per generator, in generator order.
  std::vector<Rational> eigenvalues;

  std::size_t dim() const { return basis.size(); }
  /// n x dim matrix whose columns are the basis vectors.
  Matrix basis_columns() const;
};

/// Matrix R with A W = W R, where W has full column rank and its column
/// span is A-invariant. Throws Error if the span is not invariant.
Matrix restrict_to(const Matrix& a, const Matrix& columns);

/// Splits Q^n into joint generalized eigenspaces, refining generator by
/// generator in input order. Blocks are ordered by their eigenvalue tuples.
/// Throws NotSplitOverRationals, NotCommuting.
std::vector<JointBlock> joint_spectral_decomposition(const CommutingFamily& family);

/// For each joint block, the generators restricted to it with the block's
/// eigenvalue subtracted. Every output family is nilpotent and verified.
std::vector<CommutingFamily> nilpotent_reduction(const CommutingFamily& family);

}  // namespace comalg
