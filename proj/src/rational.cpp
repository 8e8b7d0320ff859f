#include "comalg/rational.hpp"

#include <stdexcept>

#include "comalg/errors.hpp"

namespace comalg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw ParseError("", "malformed rational '" + std::string(text) + "'");
  }
  const mpz_class p(std::string(num), 10);
  const mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace comalg
