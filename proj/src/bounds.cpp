#include "comalg/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "comalg/errors.hpp"

namespace comalg {

namespace {

mpz_class power(const mpz_class& base, std::uint64_t exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

std::string fixed(long double value, int digits = 6) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, value);
  return buf;
}

void require_positive(std::uint64_t v, const char* name) {
  if (v == 0) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

}  // namespace

std::string decimal(const mpq_class& value, int digits) {
  const mp_bitcnt_t bits = 128 + mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2);
  const mpf_class f(value, bits);
  const int len = gmp_snprintf(nullptr, 0, "%.*Ff", digits, f.get_mpf_t());
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  gmp_snprintf(out.data(), out.size(), "%.*Ff", digits, f.get_mpf_t());
  out.resize(static_cast<std::size_t>(len));
  return out;
}

std::string decimal_sqrt(const mpz_class& value, int digits) {
  const mp_bitcnt_t bits = 128 + mpz_sizeinbase(value.get_mpz_t(), 2);
  mpf_class f(value, bits);
  mpf_class root(0, bits);
  mpf_sqrt(root.get_mpf_t(), f.get_mpf_t());
  const int len = gmp_snprintf(nullptr, 0, "%.*Ff", digits, root.get_mpf_t());
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  gmp_snprintf(out.data(), out.size(), "%.*Ff", digits, root.get_mpf_t());
  out.resize(static_cast<std::size_t>(len));
  return out;
}

BoundReport commuting_algebra_bound_check(const mpz_class& dim, std::uint64_t n, std::uint64_t l) {
  require_positive(n, "n");
  BoundReport r;
  r.quantity = dim;
  r.inequality = "dim^(l+1) <= (l+1)^(l+1) * n^(2l)";
  r.lhs = power(dim, l + 1);
  r.rhs = power(to_mpz(l + 1), l + 1) * power(to_mpz(n), 2 * l);
  r.holds = r.lhs <= r.rhs;
  const long double bound =
      static_cast<long double>(l + 1) * std::pow(static_cast<long double>(n), 2.0L - 2.0L / static_cast<long double>(l + 1));
  r.approx = {{"dim", dim.get_str()},
              {"bound", fixed(bound)},
              {"ratio", fixed(static_cast<long double>(dim.get_d()) / bound)}};
  return r;
}

Rational split_objective(std::uint64_t n, std::uint64_t l, std::uint64_t x) {
  require_positive(x, "x");
  const mpz_class n2 = to_mpz(n) * to_mpz(n);
  return Rational(to_mpz(l) * n2, to_mpz(x)) + Rational(power(to_mpz(x), l));
}

OptimalSplit optimal_split(std::uint64_t n, std::uint64_t l) {
  require_positive(n, "n");
  require_positive(l, "l");
  OptimalSplit out;
  out.n = n;
  out.l = l;
  out.x_star = 1;
  out.f_min = split_objective(n, l, 1);
  Rational previous = out.f_min;
  for (std::uint64_t x = 2; x <= n * n; ++x) {
    const Rational f = split_objective(n, l, x);
    if (f > previous) break;
    if (f < out.f_min) {
      out.f_min = f;
      out.x_star = x;
    }
    previous = f;
  }
  out.f_min_display = decimal(out.f_min.raw());
  const long double nn = static_cast<long double>(n);
  const long double ll = static_cast<long double>(l);
  out.x0_display = fixed(std::pow(nn, 2.0L / (ll + 1.0L)));
  out.continuous_display = fixed((ll + 1.0L) * std::pow(nn, 2.0L - 2.0L / (ll + 1.0L)));
  // f_min > (l+1) n^{2l/(l+1)}  <=>  a^{l+1} > (l+1)^{l+1} n^{2l} b^{l+1}, f_min = a/b.
  const mpz_class a = out.f_min.numerator();
  const mpz_class b = out.f_min.denominator();
  out.integer_min_exceeds_continuous =
      power(a, l + 1) > power(to_mpz(l + 1), l + 1) * power(to_mpz(n), 2 * l) * power(b, l + 1);
  return out;
}

BoundReport rep_dim_bound_check(const mpz_class& n, std::uint64_t p, std::uint64_t q, std::uint64_t l) {
  require_positive(p, "p");
  require_positive(q, "q");
  require_positive(l, "l");
  BoundReport r;
  r.quantity = n;
  r.inequality = "n^2 <= (p*q*(l+1))^(l+1)";
  r.lhs = n * n;
  r.rhs = power(to_mpz(p) * to_mpz(q) * to_mpz(l + 1), l + 1);
  r.holds = r.lhs <= r.rhs;
  r.approx = {{"n", n.get_str()}, {"bound", decimal_sqrt(r.rhs)}};
  return r;
}

mpz_class max_irrep_dimension(std::uint64_t p, std::uint64_t q, std::uint64_t l) {
  require_positive(p, "p");
  require_positive(q, "q");
  require_positive(l, "l");
  const mpz_class square_bound = power(to_mpz(p) * to_mpz(q) * to_mpz(l + 1), l + 1);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), square_bound.get_mpz_t());
  return root;
}

HeckeBound hecke_bound_new(std::uint64_t n, std::uint64_t index) {
  require_positive(n, "n");
  require_positive(index, "index");
  HeckeBound out;
  out.squared = power(to_mpz(index), 2 * n) * power(to_mpz(n), n);
  if (mpz_perfect_square_p(out.squared.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), out.squared.get_mpz_t());
    out.exact = root;
  }
  out.display = decimal_sqrt(out.squared);
  return out;
}

mpz_class hecke_bound_bernstein(std::uint64_t n, std::uint64_t index) {
  require_positive(n, "n");
  require_positive(index, "index");
  if (n > kMaxBernsteinRank) {
    throw SizeCapExceeded("Bernstein bound refused for n = " + std::to_string(n) + " > " +
                          std::to_string(kMaxBernsteinRank));
  }
  return power(to_mpz(index), std::uint64_t{1} << (n - 1));
}

std::optional<mpz_class> hecke_crossover_index(std::uint64_t n) {
  require_positive(n, "n");
  if (n > kMaxBernsteinRank) {
    throw SizeCapExceeded("Hecke comparison refused for n = " + std::to_string(n));
  }
  // new^2 < old^2  <=>  n^n < index^e  with e = 2^n - 2n (after dividing by index^{2n}).
  const std::uint64_t full = std::uint64_t{1} << n;
  if (full <= 2 * n) return std::nullopt;
  const std::uint64_t e = full - 2 * n;
  const mpz_class target = power(to_mpz(n), n);
  mpz_class root;
  mpz_root(root.get_mpz_t(), target.get_mpz_t(), e);
  mpz_class k = root + 1;
  // floor root r satisfies r^e <= n^n < (r+1)^e.
  if (!(power(k, e) > target) || (k > 1 && power(k - 1, e) > target)) {
    throw Error("hecke_crossover_index: integer root check failed");
  }
  return k;
}

HeckeComparison compare_hecke_bounds(std::uint64_t n, std::uint64_t index) {
  require_positive(n, "n");
  require_positive(index, "index");
  if (n > kMaxBernsteinRank) {
    throw SizeCapExceeded("Hecke comparison refused for n = " + std::to_string(n));
  }
  HeckeComparison out;
  out.n = n;
  out.index = index;
  const std::uint64_t full = std::uint64_t{1} << n;
  if (full > 2 * n) {
    out.new_smaller = power(to_mpz(n), n) < power(to_mpz(index), full - 2 * n);
  } else {
    // index^{2^n} <= index^{2n}, and n^n >= 1: the new bound is never smaller.
    out.new_smaller = false;
  }
  out.crossover_index = hecke_crossover_index(n);
  return out;
}

}  // namespace comalg
