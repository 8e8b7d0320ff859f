#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "comalg/matrix.hpp"

namespace comalg {

/// A list of n x n generators A_1..A_l. `verified()` means every pairwise
/// commutator has been checked to be exactly zero.
class CommutingFamily {
 public:
  CommutingFamily() = default;

  /// Checks shapes and pairwise commutators. Throws DimensionMismatch or
  /// NotCommuting (naming the offending pair).
  static CommutingFamily verify(std::size_t n, std::vector<Matrix> generators);

  /// Shape-checked generator list, commutation not checked.
  static CommutingFamily unchecked(std::size_t n, std::vector<Matrix> generators);

  std::size_t n() const { return n_; }
  std::size_t l() const { return generators_.size(); }
  const std::vector<Matrix>& generators() const { return generators_; }
  bool verified() const { return verified_; }

  friend bool operator==(const CommutingFamily&, const CommutingFamily&) = default;

 private:
  CommutingFamily(std::size_t n, std::vector<Matrix> generators, bool verified)
      : n_(n), generators_(std::move(generators)), verified_(verified) {}

  std::size_t n_ = 0;
  std::vector<Matrix> generators_;
  bool verified_ = false;
};

/// Indices (i, j), i < j, of the first pair that fails to commute.
std::optional<std::pair<std::size_t, std::size_t>> first_noncommuting_pair(std::span<const Matrix> generators);

}  // namespace comalg
