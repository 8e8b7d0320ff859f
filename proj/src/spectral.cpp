#include "comalg/spectral.hpp"

#include <string>

#include "comalg/errors.hpp"
#include "comalg/polynomial.hpp"

namespace comalg {

bool is_nilpotent(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("nilpotency test on a non-square matrix");
  const std::size_t n = a.n();
  Matrix power = a;
  for (std::size_t t = 1; t <= n; ++t) {
    if (power.is_zero()) return true;
    if (t < n) power = power * a;
  }
  return power.is_zero();
}

std::vector<std::size_t> rank_sequence(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("rank sequence of a non-square matrix");
  std::vector<std::size_t> ranks{a.n()};
  Matrix power = a;
  for (;;) {
    const std::size_t r = rank(power);
    if (r == ranks.back()) break;
    ranks.push_back(r);
    if (r == 0) break;
    power = power * a;
  }
  return ranks;
}

Partition jordan_type(const Matrix& a) {
  if (!is_nilpotent(a)) throw NotNilpotent("jordan_type: matrix " + a.to_string() + " is not nilpotent");
  const auto ranks = rank_sequence(a);
  // at_least[t] = number of blocks of size >= t, for t = 1..T.
  const std::size_t longest = ranks.size() - 1;
  std::vector<std::size_t> at_least(longest + 2, 0);
  for (std::size_t t = 1; t <= longest; ++t) at_least[t] = ranks[t - 1] - ranks[t];
  std::vector<std::size_t> parts;
  for (std::size_t t = longest; t >= 1; --t) {
    const std::size_t exactly = at_least[t] - at_least[t + 1];
    parts.insert(parts.end(), exactly, t);
  }
  return Partition(std::move(parts));
}

Matrix jordan_matrix(const Partition& p) {
  Matrix m = Matrix::zero(p.n());
  std::size_t offset = 0;
  for (std::size_t size : p.parts()) {
    for (std::size_t i = 0; i + 1 < size; ++i) m(offset + i, offset + i + 1) = 1;
    offset += size;
  }
  return m;
}

Matrix JointBlock::basis_columns() const {
  const std::size_t n = basis.empty() ? 0 : basis.front().size();
  return Matrix::from_vectors(basis, n).transpose();
}

Matrix restrict_to(const Matrix& a, const Matrix& columns) {
  const std::size_t k = columns.cols();
  const Matrix image = a * columns;
  // k independent rows of W form an invertible k x k submatrix.
  const RrefResult r = rref(columns.transpose());
  if (r.rank != k) throw Error("restrict_to: basis columns are linearly dependent");
  Matrix sub(k, k);
  Matrix image_sub(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      sub(i, j) = columns(r.pivots[i], j);
      image_sub(i, j) = image(r.pivots[i], j);
    }
  }
  Matrix restricted = inverse(sub) * image_sub;
  if (columns * restricted != image) throw Error("restrict_to: subspace is not invariant");
  return restricted;
}

std::vector<JointBlock> joint_spectral_decomposition(const CommutingFamily& family) {
  if (!family.verified()) {
    if (auto pair = first_noncommuting_pair(family.generators())) {
      throw NotCommuting("generators " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                         " do not commute");
    }
  }
  const std::size_t n = family.n();
  std::vector<JointBlock> blocks;
  if (n == 0) return blocks;
  {
    JointBlock whole;
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n);
      e[i] = 1;
      whole.basis.push_back(std::move(e));
    }
    blocks.push_back(std::move(whole));
  }

  for (std::size_t g = 0; g < family.l(); ++g) {
    const Matrix& a = family.generators()[g];
    std::vector<JointBlock> refined;
    for (const auto& block : blocks) {
      const Matrix w = block.basis_columns();
      const Matrix r = restrict_to(a, w);
      const std::size_t k = r.n();
      const RootExtraction spectrum = rational_roots(characteristic_polynomial(r));
      if (spectrum.leftover_degree > 0) {
        throw NotSplitOverRationals("generator " + std::to_string(g) +
                                    " has a characteristic polynomial that does not split over Q");
      }
      for (const auto& root : spectrum.roots) {
        Matrix shifted = r;
        for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= root.value;
        const Subspace local = kernel_basis(shifted.pow(static_cast<unsigned>(k)));
        if (local.dim() != root.multiplicity) {
          throw Error("generalized eigenspace dimension differs from algebraic multiplicity");
        }
        Subspace global(n);
        for (const auto& v : local.basis()) global.insert(w * v);
        JointBlock next;
        next.basis = global.basis();
        next.eigenvalues = block.eigenvalues;
        next.eigenvalues.push_back(root.value);
        refined.push_back(std::move(next));
      }
    }
    blocks = std::move(refined);
  }
  return blocks;
}

std::vector<CommutingFamily> nilpotent_reduction(const CommutingFamily& family) {
  std::vector<CommutingFamily> out;
  for (const auto& block : joint_spectral_decomposition(family)) {
    const Matrix w = block.basis_columns();
    std::vector<Matrix> restricted;
    for (std::size_t g = 0; g < family.l(); ++g) {
      Matrix r = restrict_to(family.generators()[g], w);
      for (std::size_t i = 0; i < r.n(); ++i) r(i, i) -= block.eigenvalues[g];
      if (!is_nilpotent(r)) throw Error("nilpotent_reduction: shifted restriction is not nilpotent");
      restricted.push_back(std::move(r));
    }
    out.push_back(CommutingFamily::verify(block.dim(), std::move(restricted)));
  }
  return out;
}

}  // namespace comalg
