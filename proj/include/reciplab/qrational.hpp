#pragma once

#include <string>

#include "reciplab/cyclotomic.hpp"
#include "reciplab/polynomial.hpp"

namespace reciplab {

using QPoly = Polynomial<Cyclotomic>;

// Rational function of the indeterminate q over a cyclotomic field, kept in
// canonical form: gcd(numerator, denominator) = 1 and monic denominator.
class QRationalFunction {
 public:
  QRationalFunction() : num_(), den_(Cyclotomic(1)) {}
  QRationalFunction(const Cyclotomic& c) : num_(c), den_(Cyclotomic(1)) {}  // NOLINT
  QRationalFunction(const Rational& c) : QRationalFunction(Cyclotomic(c)) {}  // NOLINT
  QRationalFunction(long c) : QRationalFunction(Cyclotomic(c)) {}  // NOLINT
  QRationalFunction(int c) : QRationalFunction(Cyclotomic(c)) {}  // NOLINT
  QRationalFunction(QPoly num, QPoly den);
  explicit QRationalFunction(QPoly num) : QRationalFunction(std::move(num), QPoly(Cyclotomic(1))) {}

  // The indeterminate q itself, and c * q^e.
  static QRationalFunction q() { return monomial(Cyclotomic(1), 1); }
  static QRationalFunction monomial(const Cyclotomic& c, std::size_t e) {
    return QRationalFunction(QPoly::monomial(c, e));
  }

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // q -> q^e
  QRationalFunction substitute(std::size_t e) const;
  // Value at a point of the coefficient field; throws ZeroDivisor at a pole.
  Cyclotomic evaluate(const Cyclotomic& point) const;

  QRationalFunction inverse() const;
  QRationalFunction& operator+=(const QRationalFunction& o);
  QRationalFunction& operator-=(const QRationalFunction& o);
  QRationalFunction& operator*=(const QRationalFunction& o);
  QRationalFunction& operator/=(const QRationalFunction& o) { return *this *= o.inverse(); }
  friend QRationalFunction operator+(QRationalFunction a, const QRationalFunction& b) { return a += b; }
  friend QRationalFunction operator-(QRationalFunction a, const QRationalFunction& b) { return a -= b; }
  friend QRationalFunction operator*(QRationalFunction a, const QRationalFunction& b) { return a *= b; }
  friend QRationalFunction operator/(QRationalFunction a, const QRationalFunction& b) { return a /= b; }
  QRationalFunction operator-() const;

  friend bool operator==(const QRationalFunction& a, const QRationalFunction& b);

  std::string to_string() const;

 private:
  void canonicalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace reciplab
