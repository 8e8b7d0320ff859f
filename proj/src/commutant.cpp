#include "comalg/commutant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "comalg/errors.hpp"
#include "comalg/spectral.hpp"

namespace comalg {

Matrix commutation_operator(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("commutation operator of a non-square matrix");
  const Matrix id = Matrix::identity(a.n());
  return kronecker(a, id) - kronecker(id, a.transpose());
}

CommutantBasis commutant_basis(const Matrix& a, std::size_t size_cap) {
  if (!a.is_square()) throw DimensionMismatch("commutant of a non-square matrix");
  if (a.n() > size_cap) {
    throw SizeCapExceeded("commutant: n = " + std::to_string(a.n()) + " exceeds size cap " +
                          std::to_string(size_cap));
  }
  const Subspace kernel = kernel_basis(commutation_operator(a));
  CommutantBasis out{a, {}};
  for (const auto& v : kernel.basis()) out.basis.push_back(devectorize(v, a.n()));
  return out;
}

std::size_t commutant_dimension_formula(const Partition& p) {
  std::size_t total = 0;
  for (auto li : p.parts()) {
    for (auto lj : p.parts()) total += std::min(li, lj);
  }
  return total;
}

std::size_t shifted_commutant_dimension(const CommutantBasis& commutant, std::size_t m) {
  if (m == 0) throw std::invalid_argument("shifted commutant needs m >= 1");
  if (!is_nilpotent(commutant.of)) throw NotNilpotent("shifted commutant of a non-nilpotent matrix");
  const Matrix power = commutant.of.pow(static_cast<unsigned>(std::min(m, commutant.of.n())));
  if (power.is_zero()) return 0;
  std::vector<Matrix> images;
  images.reserve(commutant.dim());
  for (const auto& b : commutant.basis) images.push_back(power * b);
  return span_dimension(images);
}

std::size_t shifted_commutant_dimension(const Matrix& a, std::size_t m, std::size_t size_cap) {
  if (m == 0) throw std::invalid_argument("shifted commutant needs m >= 1");
  if (!is_nilpotent(a)) throw NotNilpotent("shifted commutant of a non-nilpotent matrix");
  return shifted_commutant_dimension(commutant_basis(a, size_cap), m);
}

std::size_t shifted_commutant_certificate(const Partition& p, std::size_t m) {
  std::size_t total = 0;
  for (auto li : p.parts()) {
    for (auto lj : p.parts()) {
      if (std::max(li, lj) >= m) total += std::min(li, lj);
    }
  }
  return total;
}

namespace {

JordanLemmaReport make_report(const Partition& p, std::size_t m, std::size_t dim) {
  JordanLemmaReport r{p, m, dim, shifted_commutant_certificate(p, m), {}, {}, false};
  r.bound_numerator = mpz_class(static_cast<unsigned long>(p.n())) * static_cast<unsigned long>(p.n());
  r.bound_denominator = static_cast<unsigned long>(m);
  r.holds = mpz_class(static_cast<unsigned long>(m)) * static_cast<unsigned long>(dim) <= r.bound_numerator;
  return r;
}

}  // namespace

JordanLemmaReport verify_jordan_lemma(const Partition& p, std::size_t m, std::size_t size_cap) {
  if (m == 0) throw std::invalid_argument("verify_jordan_lemma needs m >= 1");
  const Matrix a = jordan_matrix(p);
  return make_report(p, m, shifted_commutant_dimension(commutant_basis(a, size_cap), m));
}

JordanLemmaReport verify_jordan_lemma(const Matrix& a, std::size_t m, std::size_t size_cap) {
  return verify_jordan_lemma(jordan_type(a), m, size_cap);
}

std::vector<JordanLemmaReport> verify_jordan_lemma_all_m(const Partition& p, std::size_t size_cap) {
  const CommutantBasis commutant = commutant_basis(jordan_matrix(p), size_cap);
  std::vector<JordanLemmaReport> out;
  for (std::size_t m = 1; m <= p.n(); ++m) out.push_back(make_report(p, m, shifted_commutant_dimension(commutant, m)));
  return out;
}

}  // namespace comalg
