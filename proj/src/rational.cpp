#include "reciplab/rational.hpp"

#include "reciplab/errors.hpp"

namespace reciplab {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDivisor("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroDivisor("inverse of zero rational");
  return Rational(mpq_class(q_.get_den(), q_.get_num()));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDivisor("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(r);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace reciplab
