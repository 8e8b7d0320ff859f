#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "comalg/matrix.hpp"
#include "comalg/rational.hpp"

namespace comalg {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial is the empty vector; otherwise the last coefficient
/// is nonzero.
using Polynomial = std::vector<Rational>;

void trim(Polynomial& p);
long degree(const Polynomial& p);  // -1 for zero
Rational evaluate(const Polynomial& p, const Rational& x);
Polynomial derivative(const Polynomial& p);
/// Quotient and remainder of a / b; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial monic(Polynomial p);
Polynomial gcd(Polynomial a, Polynomial b);
/// Product of the distinct irreducible factors (p / gcd(p, p')), monic.
Polynomial squarefree_part(const Polynomial& p);

/// det(xI - A) by the Faddeev-LeVerrier recurrence, exact over Q.
Polynomial characteristic_polynomial(const Matrix& a);

struct RationalRoot {
  Rational value;
  std::size_t multiplicity = 0;
};

struct RootExtraction {
  std::vector<RationalRoot> roots;  // ascending
  /// Degree of the factor left after removing every rational root; zero
  /// iff the polynomial splits into linear factors over Q.
  std::size_t leftover_degree = 0;
};

/// Every rational root with multiplicity, by the rational root test on the
/// squarefree part.
RootExtraction rational_roots(const Polynomial& p);

/// Positive divisors of |value| (value != 0), ascending.
std::vector<mpz_class> divisors(const mpz_class& value);

}  // namespace comalg
