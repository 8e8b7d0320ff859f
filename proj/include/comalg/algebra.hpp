#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "comalg/bounds.hpp"
#include "comalg/family.hpp"
#include "comalg/linalg.hpp"
#include "comalg/matrix.hpp"

namespace comalg {

/// Basis of the unital algebra generated by a list of n x n matrices.
struct AlgebraBasis {
  std::size_t n = 0;
  std::vector<Matrix> basis;
  /// RREF span of the vectorized basis, for exact membership queries.
  Subspace span;
  /// Saturation passes until no product enlarged the span.
  std::size_t rounds = 0;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Matrix& a) const { return span.contains(vectorize(a)); }
};

/// Smallest unital subalgebra of M_n(Q) containing the generators.
///
/// Starts from span{I, generators} and left-multiplies every basis element
/// by every generator, adjoining products that enlarge the span, until a
/// full pass adds nothing. A span that contains I and is closed under left
/// multiplication by the generators contains every word in them (induction
/// on word length), so the result is closed under products. Commutativity
/// is not used.
AlgebraBasis generated_algebra_basis(std::size_t n, std::span<const Matrix> generators);
AlgebraBasis generated_algebra_basis(const CommutingFamily& family);

/// Exact checks that the identity lies in the span and that every
/// generator times every basis element does too.
bool is_closed_unital_algebra(const AlgebraBasis& algebra, std::span<const Matrix> generators);

/// dim span{A_1^{j_1} ... A_l^{j_l} : 0 <= j_i < exponent_cap}. For a
/// nilpotent commuting family with exponent_cap = n this equals the
/// generated algebra dimension. Throws NotCommuting, NotNilpotent.
std::size_t monomial_span_dimension(const CommutingFamily& family, std::size_t exponent_cap);

/// Generated algebra dimension against (l+1) n^{2-2/(l+1)}. For nilpotent
/// families the dimension is cross-checked against the monomial span and
/// a disagreement throws OracleDisagreement. Throws NotCommuting.
BoundReport verify_commuting_bound(const CommutingFamily& family);

}  // namespace comalg
