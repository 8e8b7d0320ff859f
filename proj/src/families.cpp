#include "comalg/families.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "comalg/errors.hpp"
#include "comalg/linalg.hpp"
#include "comalg/spectral.hpp"

namespace comalg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw SizeCapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds size cap " +
                          std::to_string(cap));
  }
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > cap / std::max<std::size_t>(base, 1)) {
      throw SizeCapExceeded("kronecker shift: m^factors exceeds size cap " + std::to_string(cap));
    }
    out *= base;
  }
  return out;
}

std::vector<std::vector<long>> draw_coefficients(const PolynomialParams& p, std::uint64_t seed) {
  const Partition partition(p.seed);
  Rng rng(seed);
  std::vector<std::vector<long>> out(p.l);
  for (auto& coeffs : out) {
    for (std::size_t d = 1; d < partition.largest(); ++d) coeffs.push_back(rng.uniform(-p.coeff_bound, p.coeff_bound));
  }
  return out;
}

std::vector<Matrix> build_polynomial(const PolynomialParams& p, std::uint64_t seed) {
  const Partition partition(p.seed);
  const Matrix nil = jordan_matrix(partition);
  const auto coefficients = p.coefficients.empty() ? draw_coefficients(p, seed) : p.coefficients;
  if (coefficients.size() != p.l) throw std::invalid_argument("polynomial spec: need one coefficient list per generator");
  const std::size_t n = partition.n();
  std::vector<Matrix> powers{nil};
  while (powers.size() + 1 < partition.largest()) powers.push_back(powers.back() * nil);
  std::vector<Matrix> gens;
  for (const auto& coeffs : coefficients) {
    Matrix g = Matrix::zero(n);
    for (std::size_t d = 0; d < coeffs.size() && d < powers.size(); ++d) {
      if (coeffs[d] != 0) g += powers[d] * Rational(coeffs[d]);
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<Matrix> build_kronecker(const KroneckerParams& p, std::size_t cap) {
  if (p.m < 1 || p.factors < 1) throw std::invalid_argument("kronecker shift: need m >= 1 and factors >= 1");
  if (p.l < p.factors) throw std::invalid_argument("kronecker shift: l must be >= factors");
  const std::size_t n = checked_power(p.m, p.factors, cap);
  const Matrix shift = jordan_matrix(Partition({p.m}));
  const Matrix id = Matrix::identity(p.m);
  std::vector<Matrix> gens;
  for (std::size_t slot = 0; slot < p.factors; ++slot) {
    Matrix g = slot == 0 ? shift : id;
    for (std::size_t s = 1; s < p.factors; ++s) g = kronecker(g, s == slot ? shift : id);
    gens.push_back(std::move(g));
  }
  while (gens.size() < p.l) gens.push_back(Matrix::zero(n));
  return gens;
}

std::vector<Matrix> build_schur(const SchurParams& p, std::size_t cap) {
  check_cap(p.n, cap, "schur");
  if (p.rows + p.cols > p.n) throw std::invalid_argument("schur: rows + cols must not exceed n");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < p.rows && gens.size() < p.l; ++i) {
    for (std::size_t j = 0; j < p.cols && gens.size() < p.l; ++j) {
      Matrix e = Matrix::zero(p.n);
      e(i, p.n - p.cols + j) = 1;
      gens.push_back(std::move(e));
    }
  }
  while (gens.size() < p.l) gens.push_back(Matrix::zero(p.n));
  return gens;
}

std::vector<Matrix> build_generators(const FamilySpec& spec, std::size_t cap);

std::vector<Matrix> build_block_diagonal(const BlockDiagonalParams& p, std::size_t cap) {
  if (p.blocks.empty()) throw std::invalid_argument("block diagonal: need at least one block");
  std::size_t total = 0;
  std::vector<std::vector<Matrix>> parts;
  for (const auto& child : p.blocks) {
    parts.push_back(build_generators(child, cap));
    total += spec_n(child);
  }
  check_cap(total, cap, "block diagonal");
  const std::size_t l = parts.front().size();
  for (const auto& part : parts) {
    if (part.size() != l) throw DimensionMismatch("block diagonal: blocks have different generator counts");
  }
  if (!p.shifts.empty()) {
    if (p.shifts.size() != parts.size()) throw DimensionMismatch("block diagonal: one shift row per block");
    for (const auto& row : p.shifts) {
      if (row.size() != l) throw DimensionMismatch("block diagonal: one shift per generator");
    }
  }
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      Matrix block = parts[b][i];
      if (!p.shifts.empty()) {
        for (std::size_t d = 0; d < block.n(); ++d) block(d, d) += p.shifts[b][i];
      }
      blocks.push_back(std::move(block));
    }
    gens.push_back(block_diagonal(blocks));
  }
  return gens;
}

std::vector<Matrix> build_generators(const FamilySpec& spec, std::size_t cap) {
  return std::visit(
      overloaded{
          [&](const PolynomialParams& p) {
            check_cap(Partition(p.seed).n(), cap, "polynomial");
            return build_polynomial(p, spec.rng_seed);
          },
          [&](const KroneckerParams& p) { return build_kronecker(p, cap); },
          [&](const SchurParams& p) { return build_schur(p, cap); },
          [&](const BlockDiagonalParams& p) { return build_block_diagonal(p, cap); },
          [&](const ConjugatedParams& p) {
            if (!p.inner) throw std::invalid_argument("conjugated spec without inner spec");
            std::vector<Matrix> gens = build_generators(*p.inner, cap);
            Rng rng(spec.rng_seed);
            const Matrix s = random_unimodular(spec_n(*p.inner), rng);
            const Matrix s_inv = inverse(s);
            for (auto& g : gens) g = s * g * s_inv;
            return gens;
          },
      },
      spec.params);
}

}  // namespace

std::string to_string(Construction c) {
  switch (c) {
    case Construction::polynomial: return "polynomial";
    case Construction::kronecker_shift: return "kronecker_shift";
    case Construction::schur: return "schur";
    case Construction::block_diagonal: return "block_diagonal";
    case Construction::conjugated: return "conjugated";
  }
  return "unknown";
}

Construction construction_from_string(const std::string& name) {
  for (auto c : {Construction::polynomial, Construction::kronecker_shift, Construction::schur,
                 Construction::block_diagonal, Construction::conjugated}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

std::size_t spec_n(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const PolynomialParams& p) { return Partition(p.seed).n(); },
                        [](const KroneckerParams& p) {
                          std::size_t n = 1;
                          for (std::size_t i = 0; i < p.factors; ++i) {
                            if (p.m != 0 && n > std::numeric_limits<std::size_t>::max() / p.m) {
                              return std::numeric_limits<std::size_t>::max();
                            }
                            n *= p.m;
                          }
                          return n;
                        },
                        [](const SchurParams& p) { return p.n; },
                        [](const BlockDiagonalParams& p) {
                          std::size_t n = 0;
                          for (const auto& b : p.blocks) n += spec_n(b);
                          return n;
                        },
                        [](const ConjugatedParams& p) { return p.inner ? spec_n(*p.inner) : 0; },
                    },
                    spec.params);
}

std::size_t spec_l(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const PolynomialParams& p) { return p.l; },
                        [](const KroneckerParams& p) { return p.l; },
                        [](const SchurParams& p) { return p.l; },
                        [](const BlockDiagonalParams& p) { return p.blocks.empty() ? 0 : spec_l(p.blocks.front()); },
                        [](const ConjugatedParams& p) { return p.inner ? spec_l(*p.inner) : 0; },
                    },
                    spec.params);
}

FamilySpec materialize(const FamilySpec& spec) {
  FamilySpec out = spec;
  if (auto* p = std::get_if<PolynomialParams>(&out.params)) {
    if (p->coefficients.empty()) p->coefficients = draw_coefficients(*p, spec.rng_seed);
  } else if (auto* b = std::get_if<BlockDiagonalParams>(&out.params)) {
    for (auto& child : b->blocks) child = materialize(child);
  } else if (auto* c = std::get_if<ConjugatedParams>(&out.params)) {
    if (c->inner) c->inner = std::make_shared<const FamilySpec>(materialize(*c->inner));
  }
  return out;
}

CommutingFamily build_family(const FamilySpec& spec, std::size_t size_cap) {
  const std::size_t n = spec_n(spec);
  check_cap(n, size_cap, "family");
  return CommutingFamily::verify(n, build_generators(spec, size_cap));
}

FamilySpec polynomial_spec(const Partition& seed, std::size_t l, long coeff_bound, std::uint64_t rng_seed) {
  if (l < 1) throw std::invalid_argument("polynomial family needs l >= 1");
  if (coeff_bound < 1) throw std::invalid_argument("polynomial family needs coeff_bound >= 1");
  return FamilySpec{PolynomialParams{seed.parts(), l, coeff_bound, {}}, rng_seed};
}

CommutingFamily polynomial_family(const Partition& seed, std::size_t l, long coeff_bound, std::uint64_t rng_seed) {
  return build_family(polynomial_spec(seed, l, coeff_bound, rng_seed), std::max(seed.n(), kDefaultFamilyCap));
}

CommutingFamily kronecker_shift_family(std::size_t m, std::size_t l, std::size_t size_cap) {
  if (m < 2 || l < 1) throw std::invalid_argument("kronecker shift family needs m >= 2, l >= 1");
  return build_family(FamilySpec{KroneckerParams{m, l, l}, 0}, size_cap);
}

CommutingFamily schur_family(std::size_t k, std::size_t size_cap) {
  if (k < 1) throw std::invalid_argument("schur family needs k >= 1");
  return build_family(FamilySpec{SchurParams{2 * k, k, k, k * k}, 0}, size_cap);
}

Matrix random_unimodular(std::size_t n, Rng& rng, long bound) {
  Matrix s = Matrix::identity(n);
  if (n >= 2) {
    for (std::size_t step = 0; step < 3 * n; ++step) {
      const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
      if (j >= i) ++j;
      const long c = rng.chance(1, 2) ? 1 : -1;
      Vector row(s.row(i).begin(), s.row(i).end());
      bool ok = true;
      for (std::size_t col = 0; col < n && ok; ++col) {
        row[col].add_product(Rational(c), s(j, col));
        ok = row[col] <= Rational(bound) && row[col] >= Rational(-bound);
      }
      if (!ok) continue;
      for (std::size_t col = 0; col < n; ++col) s(i, col) = row[col];
    }
    for (std::size_t i = n - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)));
      if (j == i) continue;
      auto a = s.row(i);
      auto b = s.row(j);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(1, 2)) {
      for (auto& x : s.row(i)) x = -x;
    }
  }
  return s;
}

Partition random_partition(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random partition of 0");
  std::vector<std::size_t> parts;
  std::size_t remaining = n;
  while (remaining > 0) {
    const auto part = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(remaining)));
    parts.push_back(part);
    remaining -= part;
  }
  return Partition::from_unsorted(std::move(parts));
}

std::vector<std::size_t> random_composition(std::size_t n, std::size_t k, Rng& rng) {
  if (k == 0 || k > n) throw std::invalid_argument("random composition needs 1 <= k <= n");
  std::vector<std::size_t> parts(k, 1);
  for (std::size_t extra = n - k; extra > 0; --extra) {
    ++parts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1))];
  }
  return parts;
}

std::pair<CommutingFamily, FamilySpec> random_commuting_family(std::size_t n, std::size_t l, std::uint64_t rng_seed) {
  if (n < 1 || l < 1) throw std::invalid_argument("random family needs n, l >= 1");
  Rng rng(rng_seed);
  FamilySpec spec;
  if (n >= 2 && rng.chance(1, 3)) {
    const auto k = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(std::min<std::size_t>(3, n))));
    BlockDiagonalParams params;
    for (std::size_t size : random_composition(n, k, rng)) {
      const Partition seed = random_partition(size, rng);
      const long bound = rng.uniform(1, 3);
      params.blocks.push_back(polynomial_spec(seed, l, bound, rng.next()));
    }
    spec = FamilySpec{std::move(params), 0};
  } else {
    const Partition seed = random_partition(n, rng);
    const long bound = rng.uniform(1, 3);
    spec = polynomial_spec(seed, l, bound, rng.next());
  }
  if (rng.chance(1, 2)) {
    spec = FamilySpec{ConjugatedParams{std::make_shared<const FamilySpec>(std::move(spec))}, rng.next()};
  }
  spec = materialize(spec);
  return {build_family(spec), spec};
}

std::pair<CommutingFamily, FamilySpec> random_split_family(std::size_t n, std::size_t l, std::uint64_t rng_seed) {
  if (n < 1 || l < 1) throw std::invalid_argument("split family needs n, l >= 1");
  Rng rng(rng_seed);
  const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(4, n))));
  BlockDiagonalParams params;
  std::set<std::vector<Rational>> used;
  for (std::size_t size : random_composition(n, k, rng)) {
    const Partition seed = random_partition(size, rng);
    const long bound = rng.uniform(1, 2);
    params.blocks.push_back(polynomial_spec(seed, l, bound, rng.next()));
    std::vector<Rational> tuple;
    do {
      tuple.clear();
      for (std::size_t i = 0; i < l; ++i) {
        const long num = rng.uniform(-5, 5);
        const long den = rng.uniform(1, 3);
        tuple.emplace_back(mpz_class(num), mpz_class(den));
      }
    } while (used.count(tuple));
    used.insert(tuple);
    params.shifts.push_back(std::move(tuple));
  }
  FamilySpec spec{std::move(params), 0};
  if (rng.chance(1, 2)) {
    spec = FamilySpec{ConjugatedParams{std::make_shared<const FamilySpec>(std::move(spec))}, rng.next()};
  }
  spec = materialize(spec);
  return {build_family(spec), spec};
}

}  // namespace comalg
