#include "comalg/algebra.hpp"

#include <string>

#include "comalg/errors.hpp"
#include "comalg/spectral.hpp"

namespace comalg {

AlgebraBasis generated_algebra_basis(std::size_t n, std::span<const Matrix> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != n || generators[i].cols() != n) {
      throw DimensionMismatch("generator " + std::to_string(i) + " is not " + std::to_string(n) + "x" +
                              std::to_string(n));
    }
  }
  AlgebraBasis out;
  out.n = n;
  out.span = Subspace(n * n);
  auto adjoin = [&out](const Matrix& a) {
    if (out.span.insert(vectorize(a))) out.basis.push_back(a);
  };
  adjoin(Matrix::identity(n));
  for (const auto& g : generators) adjoin(g);

  // Each pass multiplies the elements added by the previous pass.
  std::size_t begin = 0;
  while (begin < out.basis.size()) {
    const std::size_t end = out.basis.size();
    ++out.rounds;
    for (std::size_t k = begin; k < end; ++k) {
      for (const auto& g : generators) adjoin(g * out.basis[k]);
    }
    begin = end;
  }
  return out;
}

AlgebraBasis generated_algebra_basis(const CommutingFamily& family) {
  return generated_algebra_basis(family.n(), family.generators());
}

bool is_closed_unital_algebra(const AlgebraBasis& algebra, std::span<const Matrix> generators) {
  if (!algebra.contains(Matrix::identity(algebra.n))) return false;
  for (const auto& g : generators) {
    for (const auto& b : algebra.basis) {
      if (!algebra.contains(g * b)) return false;
    }
  }
  return true;
}

namespace {

void require_commuting(const CommutingFamily& family) {
  if (family.verified()) return;
  if (auto pair = first_noncommuting_pair(family.generators())) {
    throw NotCommuting("generators " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                       " do not commute");
  }
}

void collect_monomials(const std::vector<std::vector<Matrix>>& powers, std::size_t slot, const Matrix& prefix,
                       Subspace& span) {
  if (slot == powers.size()) {
    span.insert(vectorize(prefix));
    return;
  }
  for (const auto& p : powers[slot]) {
    const Matrix next = prefix * p;
    // prefix * A^e = 0 forces prefix * A^{e'} = 0 for all e' > e.
    if (next.is_zero()) break;
    collect_monomials(powers, slot + 1, next, span);
  }
}

}  // namespace

std::size_t monomial_span_dimension(const CommutingFamily& family, std::size_t exponent_cap) {
  if (exponent_cap == 0) throw std::invalid_argument("exponent cap must be >= 1");
  require_commuting(family);
  const std::size_t n = family.n();
  std::vector<std::vector<Matrix>> powers;
  for (std::size_t i = 0; i < family.l(); ++i) {
    const Matrix& a = family.generators()[i];
    if (!is_nilpotent(a)) throw NotNilpotent("generator " + std::to_string(i) + " is not nilpotent");
    std::vector<Matrix> table{Matrix::identity(n)};
    while (table.size() < exponent_cap) {
      Matrix next = table.back() * a;
      if (next.is_zero()) break;
      table.push_back(std::move(next));
    }
    powers.push_back(std::move(table));
  }
  Subspace span(n * n);
  collect_monomials(powers, 0, Matrix::identity(n), span);
  return span.dim();
}

BoundReport verify_commuting_bound(const CommutingFamily& family) {
  require_commuting(family);
  const AlgebraBasis algebra = generated_algebra_basis(family);
  bool nilpotent = true;
  for (const auto& g : family.generators()) nilpotent = nilpotent && is_nilpotent(g);
  if (nilpotent && family.n() > 0) {
    const std::size_t oracle = monomial_span_dimension(family, family.n());
    if (oracle != algebra.dim()) {
      throw OracleDisagreement("saturation dimension " + std::to_string(algebra.dim()) +
                               " differs from monomial span dimension " + std::to_string(oracle));
    }
  }
  return commuting_algebra_bound_check(mpz_class(static_cast<unsigned long>(algebra.dim())), family.n(), family.l());
}

}  // namespace comalg
