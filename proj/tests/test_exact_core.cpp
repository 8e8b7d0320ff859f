#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "comalg/errors.hpp"
#include "comalg/linalg.hpp"
#include "comalg/matrix.hpp"
#include "comalg/rational.hpp"
#include "comalg/rng.hpp"
#include "oracles.hpp"

using namespace comalg;

namespace {

Matrix m2(long a, long b, long c, long d) { return Matrix::from_rows({{a, b}, {c, d}}); }

Matrix j2() { return m2(0, 1, 0, 0); }

bool is_rref(const Matrix& r, std::size_t rank, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < rank; ++i) {
    if (i > 0 && pivots[i] <= pivots[i - 1]) return false;
    if (r(i, pivots[i]) != Rational(1)) return false;
    for (std::size_t j = 0; j < pivots[i]; ++j)
      if (!r(i, j).is_zero()) return false;
    for (std::size_t k = 0; k < r.rows(); ++k)
      if (k != i && !r(k, pivots[i]).is_zero()) return false;
  }
  for (std::size_t i = rank; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!r(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(mpz_class(6), mpz_class(-4)).to_string() == "-3/2");
  CHECK(Rational(mpz_class(6), mpz_class(-4)).denominator() == 2);
  CHECK(Rational::parse("-10/4") == Rational(mpz_class(-5), mpz_class(2)));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational::parse("0/5").is_zero());
  for (const char* bad : {"", "1/0", "1/", "/2", "a", "1/-2", "--1", "1.5", " 1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
  CHECK_THROWS(Rational(mpz_class(1), mpz_class(0)));
  Rational x(3);
  CHECK_THROWS(x /= Rational(0));
  CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == Rational(mpz_class(1), mpz_class(2)));
  CHECK(Rational(-1) < Rational(mpz_class(-1), mpz_class(2)));
}

TEST_CASE("rref examples") {
  const auto id = rref(Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.rank == 3);

  const auto z = rref(Matrix(2, 2));
  CHECK(z.reduced == Matrix(2, 2));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());

  const auto r = rref(m2(1, 2, 2, 4));
  CHECK(r.reduced == m2(1, 2, 0, 0));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
  CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
  const Subspace k = kernel_basis(Matrix::from_rows({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == Vector{1, -1});
}

TEST_CASE("vectorize examples") {
  CHECK(vectorize(Matrix::from_rows({{5}})) == Vector{5});
  CHECK(vectorize(Matrix::identity(2)) == Vector{1, 0, 0, 1});
  CHECK(vectorize(j2()) == Vector{0, 1, 0, 0});
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, Rational::parse("9/7")}});
  CHECK(devectorize(vectorize(a), 3) == a);
}

TEST_CASE("span_dimension examples") {
  const std::vector<Matrix> scalars{Matrix::identity(2), Matrix::identity(2) * Rational(2)};
  CHECK(span_dimension(scalars) == 1);
  CHECK(span_dimension(std::vector<Matrix>{}) == 0);
  const std::vector<Matrix> ij{Matrix::identity(2), j2()};
  CHECK(span_dimension(ij) == 2);
  const std::vector<Matrix> mixed{Matrix::identity(2), Matrix::identity(3)};
  CHECK_THROWS_AS(span_dimension(mixed), DimensionMismatch);
}

TEST_CASE("matrix arithmetic") {
  const Matrix a = m2(1, 2, 3, 4);
  const Matrix b = m2(0, 1, 1, 0);
  CHECK(a * b == m2(2, 1, 4, 3));
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(a.pow(0) == Matrix::identity(2));
  CHECK(a.pow(3) == a * a * a);
  CHECK(kronecker(Matrix::identity(2), j2()) ==
        Matrix::from_rows({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
  const std::vector<Matrix> blocks{j2(), Matrix::from_rows({{7}})};
  CHECK(block_diagonal(blocks) == Matrix::from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 7}}));
  const Matrix inv = inverse(a);
  CHECK(a * inv == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(m2(1, 2, 2, 4)), SingularMatrix);
}

TEST_CASE("rref properties on random matrices") {
  Rng rng(derive_seed(11, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 7));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
    const Matrix m = oracle::random_rational_matrix(rows, cols, rng);
    const RrefResult r = rref(m);
    CAPTURE(m.to_string());
    CHECK(is_rref(r.reduced, r.rank, r.pivots));
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(r.rank == oracle::rank(m));
    CHECK(rank(m.transpose()) == r.rank);

    const Subspace k = kernel_basis(m);
    CHECK(r.rank + k.dim() == cols);
    for (const auto& v : k.basis()) {
      const Vector mv = m * v;
      CHECK(std::all_of(mv.begin(), mv.end(), [](const Rational& x) { return x.is_zero(); }));
    }
  }
}

TEST_CASE("rref of integer matrices is reproducible") {
  Rng a(derive_seed(5, 1));
  Rng b(derive_seed(5, 1));
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix ma = oracle::random_int_matrix(5, 6, a);
    const Matrix mb = oracle::random_int_matrix(5, 6, b);
    CHECK(rref(ma).reduced == rref(mb).reduced);
  }
  // Pinned entries for one instance.
  const Matrix m = Matrix::from_rows({{2, -3, 1}, {4, 1, -9}, {6, -2, -8}});
  const RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.reduced.to_string() == Matrix::from_rows({{1, 0, Rational::parse("-13/7")},
                                                    {0, 1, Rational::parse("-11/7")},
                                                    {0, 0, 0}})
                                     .to_string());
}

TEST_CASE("span_dimension permutation and combination invariance") {
  Rng rng(derive_seed(23, 0));
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto count = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < count; ++i) ms.push_back(oracle::random_rational_matrix(n, n, rng));
    const std::size_t d = span_dimension(ms);
    CHECK(d == oracle::span_rank(ms, n));

    std::vector<Matrix> permuted = ms;
    for (std::size_t i = permuted.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(permuted[i - 1], permuted[j]);
    }
    CHECK(span_dimension(permuted) == d);

    Matrix combo(n, n);
    for (const auto& m : ms) combo += m * Rational(mpz_class(rng.uniform(-5, 5)), mpz_class(rng.uniform(1, 3)));
    ms.push_back(combo);
    CHECK(span_dimension(ms) == d);
  }
}

TEST_CASE("subspace insert keeps reduced echelon form") {
  Rng rng(derive_seed(31, 0));
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = oracle::random_rational_matrix(6, 5, rng);
    Subspace s(5);
    std::size_t grew = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const auto row = m.row(i);
      if (s.insert(Vector(row.begin(), row.end()))) ++grew;
      CHECK(s.contains(row));
    }
    CHECK(grew == s.dim());
    CHECK(s.dim() == oracle::rank(m));
    const RrefResult r = rref(m);
    REQUIRE(s.dim() == r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) {
      const auto row = r.reduced.row(i);
      CHECK(s.basis()[i] == Vector(row.begin(), row.end()));
    }
    CHECK(s.pivots() == r.pivots);
  }
}
