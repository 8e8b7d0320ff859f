#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "comalg/rational.hpp"

namespace comalg {

/// Verdict of one inequality, decided as the exact integer comparison
/// lhs <= rhs. The `approx` entries are for display only.
struct BoundReport {
  mpz_class quantity;
  std::string inequality;
  mpz_class lhs;
  mpz_class rhs;
  bool holds = false;
  std::vector<std::pair<std::string, std::string>> approx;
};

/// dim <= (l+1) n^{2 - 2/(l+1)}, decided as dim^{l+1} <= (l+1)^{l+1} n^{2l}.
/// l = 0 (no generators) is accepted and reads dim <= 1.
BoundReport commuting_algebra_bound_check(const mpz_class& dim, std::uint64_t n, std::uint64_t l);

struct OptimalSplit {
  std::uint64_t n = 0;
  std::uint64_t l = 0;
  std::uint64_t x_star = 0;
  /// f(x_star) where f(x) = l n^2 / x + x^l.
  Rational f_min;
  std::string f_min_display;
  /// n^{2/(l+1)}, the continuous minimizer.
  std::string x0_display;
  /// (l+1) n^{2 - 2/(l+1)}, the continuous minimum.
  std::string continuous_display;
  /// f(x_star) > (l+1) n^{2 - 2/(l+1)}, decided exactly.
  bool integer_min_exceeds_continuous = false;
};

/// f(x) = l n^2 / x + x^l.
Rational split_objective(std::uint64_t n, std::uint64_t l, std::uint64_t x);

/// Integer x in [1, n^2] minimizing f, ties toward smaller x. f is strictly
/// convex on x > 0, so the scan stops at the first strict increase.
OptimalSplit optimal_split(std::uint64_t n, std::uint64_t l);

/// n <= (pq)^{(l+1)/2} (l+1)^{(l+1)/2}, decided as n^2 <= (pq(l+1))^{l+1}.
BoundReport rep_dim_bound_check(const mpz_class& n, std::uint64_t p, std::uint64_t q, std::uint64_t l);

/// Largest n with n^2 <= (pq(l+1))^{l+1}.
mpz_class max_irrep_dimension(std::uint64_t p, std::uint64_t q, std::uint64_t l);

struct HeckeBound {
  /// index^{2n} n^n, the square of index^n n^{n/2}.
  mpz_class squared;
  /// The bound itself when it is an integer.
  std::optional<mpz_class> exact;
  std::string display;
};

/// index^n * n^{n/2}, kept as its square.
HeckeBound hecke_bound_new(std::uint64_t n, std::uint64_t index);

inline constexpr std::uint64_t kMaxBernsteinRank = 20;

/// index^{2^{n-1}}. Throws SizeCapExceeded for n > kMaxBernsteinRank.
mpz_class hecke_bound_bernstein(std::uint64_t n, std::uint64_t index);

struct HeckeComparison {
  std::uint64_t n = 0;
  std::uint64_t index = 0;
  /// index^{2n} n^n < index^{2^n}
  bool new_smaller = false;
  /// Smallest index at which the new bound is strictly smaller, if any.
  std::optional<mpz_class> crossover_index;
};

HeckeComparison compare_hecke_bounds(std::uint64_t n, std::uint64_t index);

/// Smallest index >= 1 with index^{2n} n^n < index^{2^n}; none when no
/// index qualifies (n <= 2).
std::optional<mpz_class> hecke_crossover_index(std::uint64_t n);

/// Fixed-point decimal rendering with `digits` fractional digits.
std::string decimal(const mpq_class& value, int digits = 6);
/// sqrt(value) rendered in decimal.
std::string decimal_sqrt(const mpz_class& value, int digits = 6);

}  // namespace comalg
