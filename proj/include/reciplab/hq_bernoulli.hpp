#pragma once

#include <map>
#include <string>
#include <vector>

#include "reciplab/characters.hpp"
#include "reciplab/qrational.hpp"

namespace reciplab {

// Polynomial in a formal symbol L (standing for log q) with coefficients in
// Q(zeta)(q). Zero coefficients are never stored.
class LogPolynomial {
 public:
  LogPolynomial() = default;
  LogPolynomial(const QRationalFunction& c);  // NOLINT(google-explicit-constructor)
  LogPolynomial(const Rational& c) : LogPolynomial(QRationalFunction(c)) {}  // NOLINT
  LogPolynomial(long c) : LogPolynomial(QRationalFunction(c)) {}  // NOLINT
  LogPolynomial(int c) : LogPolynomial(QRationalFunction(c)) {}  // NOLINT

  // c * L^d
  static LogPolynomial term(const QRationalFunction& c, int d);
  static LogPolynomial L() { return term(QRationalFunction(1), 1); }

  const std::map<int, QRationalFunction>& coeffs() const { return c_; }
  QRationalFunction coeff(int d) const;
  bool is_zero() const { return c_.empty(); }
  // -1 for zero
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

  // q -> q^m, L -> m L
  LogPolynomial substitute(std::size_t m) const;

  LogPolynomial& operator+=(const LogPolynomial& o);
  LogPolynomial& operator-=(const LogPolynomial& o);
  LogPolynomial& operator*=(const LogPolynomial& o);
  friend LogPolynomial operator+(LogPolynomial a, const LogPolynomial& b) { return a += b; }
  friend LogPolynomial operator-(LogPolynomial a, const LogPolynomial& b) { return a -= b; }
  friend LogPolynomial operator*(LogPolynomial a, const LogPolynomial& b) { return a *= b; }
  LogPolynomial operator-() const;
  friend bool operator==(const LogPolynomial& a, const LogPolynomial& b);

  std::string to_string() const;

 private:
  void prune();
  std::map<int, QRationalFunction> c_;
};

// zeta * q^h as a rational function (h may be negative).
QRationalFunction twist_monomial(const Cyclotomic& zeta, long h);

// B^{(h)}_{0..n, zeta}(q) from (hL + t)/(zeta q^h e^t - 1).
std::vector<LogPolynomial> hq_bernoulli_numbers(int n, long h, const Cyclotomic& zeta);
LogPolynomial hq_bernoulli_number(int n, long h, const Cyclotomic& zeta);
// B^{(h)}_{n,zeta}(x, q) = sum_k C(n,k) B^{(h)}_{k,zeta}(q) x^{n-k}
LogPolynomial hq_bernoulli_poly(int n, long h, const Cyclotomic& zeta, const Rational& x);
// f^{n-1} sum_{j=1}^{f} chi(j) zeta^j q^{hj} B^{(h)}_{n,zeta^f}((j+x)/f, q^f)
LogPolynomial hq_bernoulli_char(int n, long h, const Cyclotomic& zeta, const DirichletCharacter& chi,
                                const Rational& x = Rational(0));

// B^{(h)}_{n,zeta}(x,q) - m^{n-1} sum_{a<m} zeta^a q^{ha} B^{(h)}_{n,zeta^m}((a+x)/m, q^m)
LogPolynomial distribution_residual(int n, long h, const Cyclotomic& zeta, const Rational& x, long m);

// sum_{j<b} (j/b) B^{(h)}_{m,zeta}({ja/b}, q)
LogPolynomial hq_dedekind_formal(int m, long a, long b, long h, const Cyclotomic& zeta);

}  // namespace reciplab
