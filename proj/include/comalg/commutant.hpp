#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "comalg/linalg.hpp"
#include "comalg/matrix.hpp"
#include "comalg/partition.hpp"

namespace comalg {

/// The linear map B -> AB - BA on vectorized n x n matrices, as the
/// n^2 x n^2 matrix A (x) I - I (x) A^T (row-major vectorization).
Matrix commutation_operator(const Matrix& a);

struct CommutantBasis {
  Matrix of;
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Basis of {B : AB = BA}. Throws SizeCapExceeded when n > size_cap.
CommutantBasis commutant_basis(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

/// sum over ordered pairs (i, j) of min(p_i, p_j): the commutant dimension
/// of a nilpotent matrix with Jordan type p.
std::size_t commutant_dimension_formula(const Partition& p);

/// dim span{A^m B : AB = BA}. Throws NotNilpotent.
std::size_t shifted_commutant_dimension(const Matrix& a, std::size_t m, std::size_t size_cap = kDefaultSizeCap);
/// Same, reusing a precomputed commutant basis of A.
std::size_t shifted_commutant_dimension(const CommutantBasis& commutant, std::size_t m);

/// sum over ordered pairs with max(p_i, p_j) >= m of min(p_i, p_j). An
/// upper bound for the shifted commutant dimension, itself at most n^2/m.
std::size_t shifted_commutant_certificate(const Partition& p, std::size_t m);

struct JordanLemmaReport {
  Partition partition;
  std::size_t m = 0;
  std::size_t dim = 0;
  std::size_t certificate = 0;
  mpz_class bound_numerator;    // n^2
  mpz_class bound_denominator;  // m
  bool holds = false;           // m * dim <= n^2
};

/// Checks m * dim span{A^m B : AB = BA} <= n^2 for A = jordan_matrix(p).
JordanLemmaReport verify_jordan_lemma(const Partition& p, std::size_t m, std::size_t size_cap = kDefaultSizeCap);

/// Arbitrary nilpotent matrix entry point; reduces to its Jordan type first.
JordanLemmaReport verify_jordan_lemma(const Matrix& a, std::size_t m, std::size_t size_cap = kDefaultSizeCap);

/// Reports for every 1 <= m <= n, sharing a single commutant computation.
std::vector<JordanLemmaReport> verify_jordan_lemma_all_m(const Partition& p,
                                                        std::size_t size_cap = kDefaultSizeCap);

}  // namespace comalg
