#include "comalg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace comalg {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

Partition Partition::from_unsorted(std::vector<std::size_t> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

// Parts bounded by `max_part`, emitted smallest-first so the overall order
// is increasing lexicographic.
void enumerate(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  const std::size_t hi = std::min(remaining, max_part);
  for (std::size_t part = 1; part <= hi; ++part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<std::size_t> prefix;
  enumerate(n, n, prefix, out);
  return out;
}

std::size_t partition_count(std::size_t n) {
  // p(n) via the standard DP over largest allowed part.
  std::vector<std::size_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

}  // namespace comalg
