#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "comalg/family.hpp"
#include "comalg/partition.hpp"
#include "comalg/rational.hpp"
#include "comalg/rng.hpp"

namespace comalg {

/// Family constructors cap n here by default (the largest structured
/// family we check is the 64 x 64 Kronecker shift family).
inline constexpr std::size_t kDefaultFamilyCap = 64;

enum class Construction { polynomial, kronecker_shift, schur, block_diagonal, conjugated };

std::string to_string(Construction c);
Construction construction_from_string(const std::string& name);

struct FamilySpec;

/// l polynomials with zero constant term in N = jordan_matrix(seed).
/// coefficients[i][d-1] multiplies N^d in the i-th generator; when empty
/// they are drawn uniformly from [-coeff_bound, coeff_bound] using rng_seed.
struct PolynomialParams {
  std::vector<std::size_t> seed;
  std::size_t l = 1;
  long coeff_bound = 1;
  std::vector<std::vector<long>> coefficients;
};

/// n = m^factors; generator s is I (x) .. (x) J_m (x) .. (x) I with J_m in
/// slot s. Generators beyond `factors` (up to l) are zero.
struct KroneckerParams {
  std::size_t m = 2;
  std::size_t factors = 1;
  std::size_t l = 1;
};

/// Elementary matrices E_{i, n-cols+j} supported on the top-right
/// rows x cols corner, rows + cols <= n, taken in row-major order; the
/// first l of them, padded with zero generators when l > rows*cols.
/// Every product of two generators vanishes.
struct SchurParams {
  std::size_t n = 2;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::size_t l = 1;
};

/// Block-diagonal composition. Every block must have the same l.
/// shifts, when nonempty, is blocks x l: shifts[b][i] * I is added to
/// generator i on block b.
struct BlockDiagonalParams {
  std::vector<FamilySpec> blocks;
  std::vector<std::vector<Rational>> shifts;
};

/// S A S^{-1} for a random unimodular integer S drawn from rng_seed.
struct ConjugatedParams {
  std::shared_ptr<const FamilySpec> inner;
};

/// Recipe that deterministically reproduces a commuting family.
struct FamilySpec {
  std::variant<PolynomialParams, KroneckerParams, SchurParams, BlockDiagonalParams, ConjugatedParams> params;
  std::uint64_t rng_seed = 0;

  Construction construction() const { return static_cast<Construction>(params.index()); }
};

/// Side length of the family the spec produces.
std::size_t spec_n(const FamilySpec& spec);
/// Number of generators the spec produces.
std::size_t spec_l(const FamilySpec& spec);

/// Copy of the spec with every random choice (polynomial coefficients)
/// written out explicitly. build_family(materialize(s)) == build_family(s).
FamilySpec materialize(const FamilySpec& spec);

/// Builds and verifies the family. A non-commuting result is a
/// construction bug and throws NotCommuting. Throws SizeCapExceeded.
CommutingFamily build_family(const FamilySpec& spec, std::size_t size_cap = kDefaultFamilyCap);

FamilySpec polynomial_spec(const Partition& seed, std::size_t l, long coeff_bound, std::uint64_t rng_seed);
CommutingFamily polynomial_family(const Partition& seed, std::size_t l, long coeff_bound, std::uint64_t rng_seed);

CommutingFamily kronecker_shift_family(std::size_t m, std::size_t l, std::size_t size_cap = kDefaultFamilyCap);

/// k^2 generators E_{i, j+k} on n = 2k; generated algebra dimension k^2 + 1.
CommutingFamily schur_family(std::size_t k, std::size_t size_cap = kDefaultFamilyCap);

/// Random unimodular integer matrix (determinant +-1) with entries in
/// [-bound, bound], built from bounded row operations, a row permutation
/// and sign flips.
Matrix random_unimodular(std::size_t n, Rng& rng, long bound = 3);

/// Nilpotent commuting family: a polynomial family over a random partition
/// of n or a block-diagonal composition of such, optionally conjugated.
/// Fully determined by (n, l, rng_seed).
std::pair<CommutingFamily, FamilySpec> random_commuting_family(std::size_t n, std::size_t l, std::uint64_t rng_seed);

/// Block-diagonal family whose blocks carry pairwise distinct eigenvalue
/// tuples, optionally conjugated. Joint spectral decomposition recovers
/// exactly these blocks.
std::pair<CommutingFamily, FamilySpec> random_split_family(std::size_t n, std::size_t l, std::uint64_t rng_seed);

/// Random partition of n (parts drawn sequentially, then sorted).
Partition random_partition(std::size_t n, Rng& rng);

/// Random composition of n into k positive parts.
std::vector<std::size_t> random_composition(std::size_t n, std::size_t k, Rng& rng);

}  // namespace comalg
