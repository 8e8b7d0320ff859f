#include <fstream>
#include <set>

#include <doctest.h>

#include "comalg/algebra.hpp"
#include "comalg/errors.hpp"
#include "comalg/families.hpp"
#include "comalg/io.hpp"
#include "comalg/linalg.hpp"
#include "comalg/search.hpp"
#include "comalg/spectral.hpp"
#include "oracles.hpp"

using namespace comalg;

namespace {

std::size_t algebra_dim(const CommutingFamily& f) { return generated_algebra_basis(f).dim(); }

FamilySpec explicit_polynomial(std::vector<std::size_t> seed, std::vector<std::vector<long>> coefficients) {
  PolynomialParams p;
  p.seed = std::move(seed);
  p.l = coefficients.size();
  p.coeff_bound = 1;
  p.coefficients = std::move(coefficients);
  return FamilySpec{std::move(p), 0};
}

}  // namespace

TEST_CASE("polynomial_family examples") {
  const CommutingFamily j2 = build_family(explicit_polynomial({2}, {{1}}));
  CHECK(j2.generators() == std::vector<Matrix>{jordan_matrix(Partition({2}))});

  const CommutingFamily powers = build_family(explicit_polynomial({3}, {{1, 0}, {0, 1}}));
  const Matrix n3 = jordan_matrix(Partition({3}));
  CHECK(powers.generators() == std::vector<Matrix>{n3, n3 * n3});
  CHECK(algebra_dim(powers) == 3);

  for (std::size_t l = 1; l <= 4; ++l) {
    const CommutingFamily zero = polynomial_family(Partition({1}), l, 3, 99);
    CHECK(zero.l() == l);
    for (const auto& g : zero.generators()) CHECK(g == Matrix::zero(1));
    CHECK(algebra_dim(zero) == 1);
  }

  const CommutingFamily random = polynomial_family(Partition({4, 2}), 3, 2, 5);
  CHECK(random.verified());
  for (const auto& g : random.generators()) CHECK(is_nilpotent(g));
  const FamilySpec materialized = materialize(polynomial_spec(Partition({4, 2}), 3, 2, 5));
  const auto& coeffs = std::get<PolynomialParams>(materialized.params);
  for (const auto& c : coeffs.coefficients) {
    CHECK(c.size() == 3);
    for (long v : c) CHECK((v >= -2 && v <= 2));
  }
}

TEST_CASE("kronecker_shift_family examples") {
  const CommutingFamily a = kronecker_shift_family(2, 1);
  CHECK(a.generators() == std::vector<Matrix>{jordan_matrix(Partition({2}))});
  const CommutingFamily b = kronecker_shift_family(2, 2);
  CHECK(b.n() == 4);
  CHECK(b.l() == 2);
  CHECK(algebra_dim(b) == 4);
  CHECK(algebra_dim(kronecker_shift_family(3, 2)) == 9);
  CHECK_THROWS_AS(kronecker_shift_family(2, 7), SizeCapExceeded);
  CHECK_THROWS_AS(kronecker_shift_family(5, 3), SizeCapExceeded);
}

TEST_CASE("schur_family examples") {
  const CommutingFamily a = schur_family(1);
  CHECK(a.n() == 2);
  CHECK(a.generators() == std::vector<Matrix>{jordan_matrix(Partition({2}))});
  CHECK(algebra_dim(a) == 2);
  const CommutingFamily b = schur_family(2);
  CHECK(b.n() == 4);
  CHECK(b.l() == 4);
  CHECK(algebra_dim(b) == 5);
  const CommutingFamily c = schur_family(3);
  CHECK(c.n() == 6);
  CHECK(c.l() == 9);
  CHECK(algebra_dim(c) == 10);
  CHECK_THROWS_AS(schur_family(33), SizeCapExceeded);
}

TEST_CASE("structured family dimensions") {
  for (std::size_t m = 2; m <= 8; ++m) {
    std::size_t n = m;
    for (std::size_t l = 1; n <= 64; ++l, n *= m) {
      CAPTURE(m);
      CAPTURE(l);
      const CommutingFamily f = kronecker_shift_family(m, l);
      CHECK(f.n() == n);
      for (const auto& g : f.generators()) CHECK(jordan_type(g) == Partition(std::vector<std::size_t>(n / m, m)));
      CHECK(algebra_dim(f) == n);
    }
  }
  for (std::size_t k = 1; 2 * k <= 12; ++k) {
    const CommutingFamily f = schur_family(k);
    const std::size_t dim = algebra_dim(f);
    CHECK(dim == k * k + 1);
    CHECK(commuting_algebra_bound_check(dim, 2 * k, k * k).holds);
  }
}

TEST_CASE("random_commuting_family examples") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [f, spec] = random_commuting_family(1, 3, seed);
    for (const auto& g : f.generators()) CHECK(g == Matrix::zero(1));
  }

  const Json fixture = read_json_file(COMALG_TEST_DATA_DIR "/random_family_seed42.json");
  const auto [family, spec] = random_commuting_family(4, 2, 42);
  CHECK(to_json(spec) == fixture["spec"]);
  CHECK(to_json(family) == fixture["family"]);
  CHECK(build_family(spec_from_json(fixture["spec"])) == family);
}

TEST_CASE("random families are deterministic and verified") {
  std::set<std::string> constructions;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(derive_seed(909, seed));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto l = static_cast<std::size_t>(rng.uniform(1, 4));
    const std::uint64_t family_seed = rng.next();
    const auto [f, spec] = random_commuting_family(n, l, family_seed);
    const auto [g, spec2] = random_commuting_family(n, l, family_seed);
    CHECK(f == g);
    CHECK(to_json(spec).dump() == to_json(spec2).dump());
    CHECK(f.verified());
    CHECK(f.n() == n);
    CHECK(f.l() == l);
    CHECK_FALSE(first_noncommuting_pair(f.generators()).has_value());
    CHECK(build_family(spec) == f);
    CHECK(build_family(spec_from_json(to_json(spec))) == f);
    constructions.insert(to_string(spec.construction()));
  }
  CHECK(constructions.count("polynomial") == 1);
  CHECK(constructions.count("block_diagonal") == 1);
  CHECK(constructions.count("conjugated") == 1);
}

TEST_CASE("random_unimodular") {
  Rng rng(derive_seed(1001, 0));
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    const Matrix s = random_unimodular(n, rng);
    for (const auto& x : s.data()) {
      CHECK(x.is_integer());
      CHECK((x >= Rational(-3) && x <= Rational(3)));
    }
    const Matrix inv = inverse(s);
    CHECK(s * inv == Matrix::identity(n));
    for (const auto& x : inv.data()) CHECK(x.is_integer());
  }
}

TEST_CASE("build_family rejects inconsistent specs") {
  BlockDiagonalParams p;
  p.blocks.push_back(explicit_polynomial({2}, {{1}}));
  p.blocks.push_back(explicit_polynomial({1}, {{}, {}}));
  CHECK_THROWS(build_family(FamilySpec{p, 0}));
  CHECK_THROWS(build_family(FamilySpec{SchurParams{4, 3, 2, 1}, 0}));
}

TEST_CASE("tightness_search examples") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (std::size_t budget : {1, 5, 20}) {
      const TightnessRecord r = tightness_search(2, 1, budget, seed);
      CHECK(r.dim == 2);
      CHECK(r.ratio_display == "0.500000");
      CHECK_FALSE(r.falsified);
    }
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const TightnessRecord r = tightness_search(4, 4, 50, seed);
    CHECK(r.dim >= 5);
    CHECK(r.evaluations == 50);
  }
  const TightnessRecord one = tightness_search(5, 2, 1, 17);
  CHECK(one.evaluations == 1);
  CHECK(one.dim == evaluate_spec(one.spec).dim);
  CHECK_THROWS(tightness_search(3, 2, 0, 1));
}

TEST_CASE("tightness_search is deterministic and never reports a violation") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Rng rng(derive_seed(1111, seed));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto l = static_cast<std::size_t>(rng.uniform(1, 4));
    const TightnessRecord a = tightness_search(n, l, 30, seed);
    const TightnessRecord b = tightness_search(n, l, 30, seed);
    CHECK(to_json(a.spec).dump() == to_json(b.spec).dump());
    CHECK(a.dim == b.dim);
    CHECK_FALSE(a.falsified);
    CHECK(a.bound_holds);
    const CommutingFamily f = build_family(a.spec);
    CHECK(f.n() == n);
    CHECK(f.l() == l);
    CHECK(algebra_dim(f) == a.dim);
    CHECK(verify_commuting_bound(f).holds);
    CHECK(std::stod(a.ratio_display) <= 1.0);
  }
}

TEST_CASE("search moves stay inside the commuting variety") {
  Rng rng(derive_seed(1212, 0));
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto l = static_cast<std::size_t>(rng.uniform(1, 4));
    FamilySpec spec = random_search_spec(n, l, rng);
    for (int step = 0; step < 5; ++step) {
      spec = mutate_spec(spec, n, l, rng);
      CAPTURE(to_json(spec).dump());
      const CommutingFamily f = build_family(spec);
      CHECK(f.n() == n);
      CHECK(f.l() == l);
    }
  }
}
