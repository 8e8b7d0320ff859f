#include "comalg/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "comalg/algebra.hpp"
#include "comalg/bounds.hpp"
#include "comalg/io.hpp"

namespace comalg {

namespace {

std::string ratio_string(std::size_t dim, std::size_t n, std::size_t l) {
  const long double bound = static_cast<long double>(l + 1) *
                            std::pow(static_cast<long double>(n), 2.0L - 2.0L / static_cast<long double>(l + 1));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", static_cast<long double>(dim) / bound);
  return buf;
}

std::vector<std::pair<std::size_t, std::size_t>> kronecker_shapes(std::size_t n, std::size_t l) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t m = 2; m <= n; ++m) {
    std::size_t power = m;
    for (std::size_t f = 1; f <= l && power <= n; ++f) {
      if (power == n) shapes.emplace_back(m, f);
      power *= m;
    }
  }
  return shapes;
}

FamilySpec random_polynomial(std::size_t n, std::size_t l, Rng& rng) {
  const Partition seed = random_partition(n, rng);
  return materialize(polynomial_spec(seed, l, 2, rng.next()));
}

std::size_t pick(std::size_t count, Rng& rng) {
  return static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(count) - 1));
}

FamilySpec mutate_polynomial(PolynomialParams p, std::uint64_t seed, Rng& rng) {
  const bool has_coefficients =
      std::any_of(p.coefficients.begin(), p.coefficients.end(), [](const auto& c) { return !c.empty(); });
  if (has_coefficients && rng.chance(1, 2)) {
    std::size_t i = pick(p.coefficients.size(), rng);
    while (p.coefficients[i].empty()) i = (i + 1) % p.coefficients.size();
    const std::size_t d = pick(p.coefficients[i].size(), rng);
    p.coefficients[i][d] = rng.uniform(-p.coeff_bound, p.coeff_bound);
    return FamilySpec{std::move(p), seed};
  }
  // Move one box of the seed partition to another part or a new part.
  std::vector<std::size_t> parts = p.seed;
  const std::size_t from = pick(parts.size(), rng);
  std::size_t to = pick(parts.size() + 1, rng);
  if (to == from) to = parts.size();
  --parts[from];
  if (to == parts.size()) {
    parts.push_back(1);
  } else {
    ++parts[to];
  }
  parts.erase(std::remove(parts.begin(), parts.end(), std::size_t{0}), parts.end());
  const Partition seed_partition = Partition::from_unsorted(parts);
  p.seed = seed_partition.parts();
  for (auto& coeffs : p.coefficients) {
    coeffs.resize(std::min(coeffs.size(), seed_partition.largest() - 1));
    while (coeffs.size() + 1 < seed_partition.largest()) coeffs.push_back(rng.uniform(-p.coeff_bound, p.coeff_bound));
  }
  return FamilySpec{std::move(p), seed};
}

}  // namespace

TightnessRecord evaluate_spec(const FamilySpec& spec) {
  const CommutingFamily family = build_family(spec);
  TightnessRecord r;
  r.spec = spec;
  r.n = family.n();
  r.l = family.l();
  r.dim = generated_algebra_basis(family).dim();
  r.bound_holds =
      commuting_algebra_bound_check(mpz_class(static_cast<unsigned long>(r.dim)), r.n, r.l).holds;
  r.ratio_display = ratio_string(r.dim, r.n, r.l);
  r.evaluations = 1;
  return r;
}

FamilySpec random_search_spec(std::size_t n, std::size_t l, Rng& rng) {
  enum Kind { polynomial, schur, block, kron };
  std::vector<Kind> kinds{polynomial};
  if (n >= 2) {
    kinds.push_back(schur);
    kinds.push_back(block);
  }
  const auto shapes = kronecker_shapes(n, l);
  if (!shapes.empty()) kinds.push_back(kron);

  switch (kinds[pick(kinds.size(), rng)]) {
    case polynomial:
      return random_polynomial(n, l, rng);
    case schur: {
      const auto rows = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) - 1));
      const auto cols = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n - rows)));
      return FamilySpec{SchurParams{n, rows, cols, l}, 0};
    }
    case block: {
      BlockDiagonalParams params;
      for (std::size_t size : random_composition(n, 2, rng)) params.blocks.push_back(random_polynomial(size, l, rng));
      return FamilySpec{std::move(params), 0};
    }
    case kron: {
      const auto [m, f] = shapes[pick(shapes.size(), rng)];
      return FamilySpec{KroneckerParams{m, f, l}, 0};
    }
  }
  return random_polynomial(n, l, rng);
}

FamilySpec mutate_spec(const FamilySpec& spec, std::size_t n, std::size_t l, Rng& rng) {
  if (rng.chance(1, 10)) return random_search_spec(n, l, rng);
  switch (spec.construction()) {
    case Construction::polynomial:
      if (n < 2) return random_search_spec(n, l, rng);
      return mutate_polynomial(std::get<PolynomialParams>(spec.params), spec.rng_seed, rng);
    case Construction::schur: {
      SchurParams p = std::get<SchurParams>(spec.params);
      std::size_t& side = rng.chance(1, 2) ? p.rows : p.cols;
      if (rng.chance(1, 2)) {
        ++side;
      } else if (side > 1) {
        --side;
      }
      if (p.rows + p.cols > p.n) return random_search_spec(n, l, rng);
      return FamilySpec{p, spec.rng_seed};
    }
    case Construction::block_diagonal: {
      BlockDiagonalParams p = std::get<BlockDiagonalParams>(spec.params);
      const std::size_t b = pick(p.blocks.size(), rng);
      p.blocks[b] = mutate_spec(p.blocks[b], spec_n(p.blocks[b]), l, rng);
      return FamilySpec{std::move(p), spec.rng_seed};
    }
    case Construction::conjugated: {
      const auto& inner = std::get<ConjugatedParams>(spec.params).inner;
      return FamilySpec{ConjugatedParams{std::make_shared<const FamilySpec>(mutate_spec(*inner, n, l, rng))},
                        spec.rng_seed};
    }
    case Construction::kronecker_shift:
      break;
  }
  return random_search_spec(n, l, rng);
}

TightnessRecord tightness_search(std::size_t n, std::size_t l, std::size_t budget, std::uint64_t rng_seed) {
  if (budget < 1) throw std::invalid_argument("tightness search needs budget >= 1");
  if (n < 1 || l < 1) throw std::invalid_argument("tightness search needs n, l >= 1");
  const std::size_t restarts = std::max<std::size_t>(1, budget / 10);

  TightnessRecord best;
  std::string best_key;
  bool have_best = false;
  std::size_t evaluations = 0;
  auto consider = [&](const TightnessRecord& r) {
    const std::string key = to_json(r.spec).dump();
    if (!have_best || r.dim > best.dim || (r.dim == best.dim && key < best_key)) {
      best = r;
      best_key = key;
      have_best = true;
    }
  };

  for (std::size_t restart = 0; restart < restarts; ++restart) {
    const std::size_t steps = budget / restarts + (restart < budget % restarts ? 1 : 0);
    Rng rng(derive_seed(rng_seed, restart));
    // The first restart climbs from the balanced Schur corner, the best
    // structured start known for l >= rows * cols.
    const FamilySpec start = restart == 0 && n >= 2 ? FamilySpec{SchurParams{n, n / 2, n - n / 2, l}, 0}
                                                    : random_search_spec(n, l, rng);
    TightnessRecord current = evaluate_spec(start);
    ++evaluations;
    if (!current.bound_holds) {
      current.falsified = true;
      current.evaluations = evaluations;
      return current;
    }
    consider(current);
    for (std::size_t step = 1; step < steps; ++step) {
      TightnessRecord candidate = evaluate_spec(mutate_spec(current.spec, n, l, rng));
      ++evaluations;
      if (!candidate.bound_holds) {
        candidate.falsified = true;
        candidate.evaluations = evaluations;
        return candidate;
      }
      if (candidate.dim >= current.dim) current = std::move(candidate);
      consider(current);
    }
  }
  best.evaluations = evaluations;
  return best;
}

}  // namespace comalg
