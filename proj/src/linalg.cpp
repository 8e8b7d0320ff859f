#include "comalg/linalg.hpp"

#include <algorithm>

#include "comalg/errors.hpp"

namespace comalg {

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      auto a = m.row(pivot);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Rational inv = Rational(1) / m(r, c);
    auto prow = m.row(r);
    for (std::size_t j = c; j < cols; ++j) {
      if (!prow[j].is_zero()) prow[j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      auto target = m.row(i);
      for (std::size_t j = c; j < cols; ++j) {
        if (!prow[j].is_zero()) target[j].sub_product(factor, prow[j]);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::span_of(std::span<const Vector> vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const Rational factor = v[p];
    const Vector& row = rows_[k];
    for (std::size_t j = p; j < ambient_dim_; ++j) {
      if (!row[j].is_zero()) v[j].sub_product(factor, row[j]);
    }
  }
  return v;
}

bool Subspace::contains(std::span<const Rational> v) const {
  const Vector residue = reduce(Vector(v.begin(), v.end()));
  return std::all_of(residue.begin(), residue.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Subspace::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t lead = 0;
  while (lead < ambient_dim_ && v[lead].is_zero()) ++lead;
  if (lead == ambient_dim_) return false;

  const Rational inv = Rational(1) / v[lead];
  for (std::size_t j = lead; j < ambient_dim_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  for (auto& row : rows_) {
    if (row[lead].is_zero()) continue;
    const Rational factor = row[lead];
    for (std::size_t j = lead; j < ambient_dim_; ++j) {
      if (!v[j].is_zero()) row[j].sub_product(factor, v[j]);
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  Subspace kernel(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, f);
    kernel.insert(std::move(v));
  }
  return kernel;
}

std::size_t span_dimension(std::span<const Matrix> matrices) {
  if (matrices.empty()) return 0;
  const std::size_t n = matrices.front().rows();
  Subspace s(n * n);
  for (const auto& a : matrices) {
    if (a.rows() != n || a.cols() != n) throw DimensionMismatch("span_dimension: matrices of different sizes");
    s.insert(vectorize(a));
  }
  return s.dim();
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.n();
  if (n == 0) return Matrix();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

}  // namespace comalg
