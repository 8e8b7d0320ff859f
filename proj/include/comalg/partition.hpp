#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace comalg {

/// Integer partition: nonempty, weakly decreasing positive parts. Used as
/// the Jordan type of a nilpotent matrix.
class Partition {
 public:
  /// Validates the invariants; throws std::invalid_argument.
  explicit Partition(std::vector<std::size_t> parts);

  /// Sorts the parts into weakly decreasing order before validating.
  static Partition from_unsorted(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  std::size_t largest() const { return parts_.front(); }

  /// "3+2+1"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::size_t> parts_;
  std::size_t n_ = 0;
};

/// All partitions of n in increasing lexicographic order of their part
/// sequences: 1+1+1, 2+1, 3.
std::vector<Partition> partitions_of(std::size_t n);

/// Number of partitions p(n).
std::size_t partition_count(std::size_t n);

}  // namespace comalg
