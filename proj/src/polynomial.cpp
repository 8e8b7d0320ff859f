#include "comalg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "comalg/errors.hpp"

namespace comalg {

void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const Polynomial& p) {
  Polynomial q = p;
  trim(q);
  return static_cast<long>(q.size()) - 1;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  Polynomial divisor = b;
  trim(divisor);
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = a;
  trim(rem);
  if (rem.size() < divisor.size()) return {Polynomial{}, rem};

  Polynomial quot(rem.size() - divisor.size() + 1);
  const Rational lead_inv = Rational(1) / divisor.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational coef = rem[k + divisor.size() - 1] * lead_inv;
    quot[k] = coef;
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[k + j].sub_product(coef, divisor[j]);
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Polynomial monic(Polynomial p) {
  trim(p);
  if (p.empty()) return p;
  const Rational inv = Rational(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial q = p;
  trim(q);
  if (q.size() <= 1) return monic(q);
  const Polynomial g = gcd(q, derivative(q));
  return monic(divmod(q, g).first);
}

Polynomial characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.n();
  Polynomial c(n + 1);
  c[n] = 1;
  Matrix m = Matrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const Matrix am = a * m;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2;
    mpz_class y = 2;
    mpz_class d = 1;
    auto step = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& primes) {
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (n % p == 0) {
      ++primes[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  std::vector<mpz_class> stack{n};
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
      ++primes[m];
      continue;
    }
    const mpz_class d = pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
}

}  // namespace

std::vector<mpz_class> divisors(const mpz_class& value) {
  if (value == 0) throw std::invalid_argument("divisors of zero");
  std::map<mpz_class, unsigned> primes;
  factor_into(abs(value), primes);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, exponent] : primes) {
    const std::size_t base = divs.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RootExtraction rational_roots(const Polynomial& p) {
  Polynomial poly = p;
  trim(poly);
  RootExtraction out;
  if (poly.size() <= 1) return out;

  // Integer primitive form of the squarefree part.
  const Polynomial sf = squarefree_part(poly);
  mpz_class lcm_den = 1;
  for (const auto& c : sf) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> coeffs;
  for (const auto& c : sf) coeffs.push_back(c.numerator() * (lcm_den / c.denominator()));

  std::set<Rational> found;
  std::size_t shift = 0;
  while (coeffs[shift] == 0) ++shift;
  if (shift > 0) found.insert(Rational(0));

  const std::size_t target = sf.size() - 1;
  const auto lows = divisors(coeffs[shift]);
  const auto highs = divisors(coeffs.back());
  for (const auto& b : highs) {
    for (const auto& a : lows) {
      if (found.size() == target) break;
      for (int s : {1, -1}) {
        const Rational candidate(mpz_class(a * s), b);
        if (found.count(candidate)) continue;
        if (evaluate(sf, candidate).is_zero()) found.insert(candidate);
      }
    }
  }

  std::size_t total = 0;
  for (const auto& root : found) {
    const Polynomial linear{-root, Rational(1)};
    std::size_t mult = 0;
    for (;;) {
      auto [q, r] = divmod(poly, linear);
      if (!r.empty()) break;
      poly = std::move(q);
      ++mult;
    }
    out.roots.push_back({root, mult});
    total += mult;
  }
  out.leftover_degree = static_cast<std::size_t>(degree(p)) - total;
  return out;
}

}  // namespace comalg
