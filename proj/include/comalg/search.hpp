#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "comalg/families.hpp"

namespace comalg {

struct TightnessRecord {
  FamilySpec spec;
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t dim = 0;
  /// dim / ((l+1) n^{2-2/(l+1)}), display only.
  std::string ratio_display;
  /// Exact verdict of the commuting-family dimension bound for this family.
  bool bound_holds = true;
  /// Set when a searched family violated the bound. The search stops and
  /// returns that family instead of the best one.
  bool falsified = false;
  std::size_t evaluations = 0;
};

/// Evaluates one spec: builds the family and computes its exact algebra
/// dimension and bound verdict.
TightnessRecord evaluate_spec(const FamilySpec& spec);

/// A random starting point for the search over families with the given
/// n and l: polynomial, Schur corner, block-diagonal or Kronecker shift.
FamilySpec random_search_spec(std::size_t n, std::size_t l, Rng& rng);

/// Neighbouring spec with the same n and l (coefficient change, box move
/// in the seed partition, corner resize, child mutation, or a fresh jump).
FamilySpec mutate_spec(const FamilySpec& spec, std::size_t n, std::size_t l, Rng& rng);

/// Hill climbing over family specs maximizing the exact algebra
/// dimension. max(1, budget / 10) restarts share `budget` evaluations;
/// restart r draws from derive_seed(rng_seed, r). Restart 0 starts from
/// the Schur corner with rows = n/2, cols = n - n/2 when n >= 2. Moves that do not lower
/// the dimension are accepted. The winner is the largest dim, ties broken
/// by the lexicographically smallest serialized spec.
TightnessRecord tightness_search(std::size_t n, std::size_t l, std::size_t budget, std::uint64_t rng_seed);

}  // namespace comalg
