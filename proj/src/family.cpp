#include "comalg/family.hpp"

#include <string>

#include "comalg/errors.hpp"

namespace comalg {

namespace {

void check_shapes(std::size_t n, const std::vector<Matrix>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != n || generators[i].cols() != n) {
      throw DimensionMismatch("generator " + std::to_string(i) + " is not " + std::to_string(n) + "x" +
                              std::to_string(n));
    }
  }
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> first_noncommuting_pair(std::span<const Matrix> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutator(generators[i], generators[j]).is_zero()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

CommutingFamily CommutingFamily::verify(std::size_t n, std::vector<Matrix> generators) {
  check_shapes(n, generators);
  if (auto pair = first_noncommuting_pair(generators)) {
    throw NotCommuting("generators " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                       " do not commute");
  }
  return CommutingFamily(n, std::move(generators), true);
}

CommutingFamily CommutingFamily::unchecked(std::size_t n, std::vector<Matrix> generators) {
  check_shapes(n, generators);
  return CommutingFamily(n, std::move(generators), false);
}

}  // namespace comalg
