#include <doctest.h>

#include "comalg/commutant.hpp"
#include "comalg/errors.hpp"
#include "comalg/families.hpp"
#include "comalg/linalg.hpp"
#include "comalg/spectral.hpp"
#include "oracles.hpp"

using namespace comalg;

TEST_CASE("commutant_basis examples") {
  CHECK(commutant_basis(Matrix::identity(2)).dim() == 4);

  const Matrix j2 = jordan_matrix(Partition({2}));
  const CommutantBasis c = commutant_basis(j2);
  CHECK(c.dim() == 2);
  const std::vector<Matrix> expected{Matrix::identity(2), j2};
  std::vector<Matrix> both = c.basis;
  both.insert(both.end(), expected.begin(), expected.end());
  CHECK(span_dimension(both) == 2);

  const Matrix j21 = jordan_matrix(Partition({2, 1}));
  CHECK(commutant_basis(j21).dim() == 5);
  CHECK(oracle::commutant_dim(j21) == 5);

  CHECK_THROWS_AS(commutant_basis(Matrix::identity(33)), SizeCapExceeded);
  CHECK(commutant_basis(Matrix::identity(3), 3).dim() == 9);
}

TEST_CASE("commutant basis invariants") {
  Rng rng(derive_seed(303, 0));
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix a = oracle::random_int_matrix(n, n, rng, 2);
    const CommutantBasis c = commutant_basis(a);
    CAPTURE(a.to_string());
    CHECK(c.dim() == oracle::commutant_dim(a));
    CHECK(c.dim() >= n);
    CHECK(span_dimension(c.basis) == c.dim());
    for (const auto& b : c.basis) CHECK(commutator(a, b).is_zero());
    std::vector<Matrix> with_identity = c.basis;
    with_identity.push_back(Matrix::identity(n));
    CHECK(span_dimension(with_identity) == c.dim());
  }
}

TEST_CASE("commutant_dimension_formula examples") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(commutant_dimension_formula(Partition(std::vector<std::size_t>(n, 1))) == n * n);
    CHECK(commutant_dimension_formula(Partition({n})) == n);
  }
  CHECK(commutant_dimension_formula(Partition({2, 1})) == 5);
}

TEST_CASE("formula agrees with the kernel for every partition of n <= 10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      CAPTURE(p.to_string());
      const std::size_t formula = commutant_dimension_formula(p);
      CHECK(formula == oracle::min_sum(p.parts()));
      CHECK(commutant_basis(jordan_matrix(p)).dim() == formula);
    }
  }
}

TEST_CASE("min times max equals the product") {
  for (std::size_t a = 1; a <= 50; ++a) {
    for (std::size_t b = 1; b <= 50; ++b) {
      // The per-block-pair count min(a, b) meets a b / max(a, b) with equality.
      CHECK(std::min(a, b) * std::max(a, b) == a * b);
      CHECK(oracle::min_sum({a, b}) == a + b + 2 * std::min(a, b));
    }
  }
}

TEST_CASE("shifted_commutant_dimension examples") {
  const Matrix j2 = jordan_matrix(Partition({2}));
  CHECK(shifted_commutant_dimension(j2, 1) == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (std::size_t m = n; m <= n + 2; ++m) CHECK(shifted_commutant_dimension(jordan_matrix(p), m) == 0);
    }
  }
  CHECK(shifted_commutant_dimension(jordan_matrix(Partition({2, 1})), 1) == 1);
  CHECK_THROWS_AS(shifted_commutant_dimension(Matrix::identity(2), 1), NotNilpotent);
  CHECK_THROWS(shifted_commutant_dimension(j2, 0));
}

TEST_CASE("verify_jordan_lemma examples") {
  const auto r3 = verify_jordan_lemma(Partition({3}), 3);
  CHECK(r3.dim == 0);
  CHECK(r3.bound_numerator == 9);
  CHECK(r3.bound_denominator == 3);
  CHECK(r3.holds);

  const auto r21 = verify_jordan_lemma(Partition({2, 1}), 1);
  CHECK(r21.dim == 1);
  CHECK(r21.bound_numerator == 9);
  CHECK(r21.bound_denominator == 1);
  CHECK(r21.holds);

  for (std::size_t n = 1; n <= 6; ++n) {
    const auto r = verify_jordan_lemma(Partition(std::vector<std::size_t>(n, 1)), 1);
    CHECK(r.dim == 0);
    CHECK(r.bound_numerator == n * n);
    CHECK(r.holds);
  }

  const Matrix a = jordan_matrix(Partition({3, 1}));
  const auto via_matrix = verify_jordan_lemma(a, 1);
  CHECK(via_matrix.partition == Partition({3, 1}));
  CHECK(via_matrix.dim == verify_jordan_lemma(Partition({3, 1}), 1).dim);
}

TEST_CASE("shifted commutant bound, monotonicity and closed form for n <= 10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      CAPTURE(p.to_string());
      const Matrix a = jordan_matrix(p);
      const CommutantBasis c = commutant_basis(a);
      std::size_t previous = c.dim();
      for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t d = shifted_commutant_dimension(c, m);
        CAPTURE(m);
        CHECK(m * d <= n * n);
        CHECK(d <= previous);
        CHECK(d <= shifted_commutant_certificate(p, m));
        // A^m maps the min(a, b)-dimensional space of block homomorphisms
        // onto one of dimension max(0, min(a, b) - m).
        std::size_t closed = 0;
        for (auto x : p.parts())
          for (auto y : p.parts()) closed += std::min(x, y) > m ? std::min(x, y) - m : 0;
        CHECK(d == closed);
        previous = d;
      }
    }
  }
}

TEST_CASE("shifted commutant dimension is a conjugation invariant") {
  Rng rng(derive_seed(404, 0));
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const Partition p = random_partition(n, rng);
    const Matrix s = random_unimodular(n, rng);
    const Matrix a = jordan_matrix(p);
    const Matrix b = s * a * inverse(s);
    for (std::size_t m = 1; m <= n; ++m) {
      CAPTURE(p.to_string());
      CHECK(shifted_commutant_dimension(b, m) == shifted_commutant_dimension(a, m));
    }
  }
}

TEST_CASE("commutation operator matches the entrywise equations") {
  Rng rng(derive_seed(505, 0));
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Matrix a = oracle::random_int_matrix(n, n, rng, 3);
    const Matrix b = oracle::random_int_matrix(n, n, rng, 3);
    const Matrix op = commutation_operator(a);
    CHECK(op * vectorize(b) == vectorize(commutator(a, b)));
  }
}
