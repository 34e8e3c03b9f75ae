#include "reciplab/qrational.hpp"

namespace reciplab {

QRationalFunction::QRationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivisor("rational function with zero denominator");
  canonicalize();
}

void QRationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Cyclotomic(1));
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  Cyclotomic lead_inv = den_.leading().inverse();
  if (!lead_inv.is_one()) {
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
  }
}

QRationalFunction QRationalFunction::substitute(std::size_t e) const {
  // Substitution keeps coprimality, so only the monic normalization is needed.
  QRationalFunction r;
  r.num_ = num_.substitute_power(e);
  r.den_ = den_.substitute_power(e);
  return r;
}

Cyclotomic QRationalFunction::evaluate(const Cyclotomic& point) const {
  Cyclotomic d = den_.evaluate(point);
  if (d.is_zero()) throw ZeroDivisor("rational function evaluated at a pole");
  return num_.evaluate(point) / d;
}

QRationalFunction QRationalFunction::inverse() const {
  if (num_.is_zero()) throw ZeroDivisor("inverse of zero rational function");
  return QRationalFunction(den_, num_);
}

QRationalFunction& QRationalFunction::operator+=(const QRationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  if (o.den_.is_constant()) {
    num_ += o.num_ * den_;
    canonicalize();
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    canonicalize();
    return *this;
  }
  QPoly g = poly_gcd(den_, o.den_);
  QPoly b_red = den_.divmod(g).first;
  QPoly d_red = o.den_.divmod(g).first;
  num_ = num_ * d_red + o.num_ * b_red;
  den_ = den_ * d_red;
  canonicalize();
  return *this;
}

QRationalFunction& QRationalFunction::operator-=(const QRationalFunction& o) { return *this += -o; }

QRationalFunction QRationalFunction::operator-() const {
  QRationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

QRationalFunction& QRationalFunction::operator*=(const QRationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = QRationalFunction();
  // Cross-cancel before multiplying to keep degrees small.
  QPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant() && !n1.is_constant()) {
    QPoly g = poly_gcd(n1, d2);
    if (g.degree() > 0) {
      n1 = n1.divmod(g).first;
      d2 = d2.divmod(g).first;
    }
  }
  if (!d1.is_constant() && !n2.is_constant()) {
    QPoly g = poly_gcd(n2, d1);
    if (g.degree() > 0) {
      n2 = n2.divmod(g).first;
      d1 = d1.divmod(g).first;
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  Cyclotomic lead_inv = den_.leading().inverse();
  if (!lead_inv.is_one()) {
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
  }
  return *this;
}

bool operator==(const QRationalFunction& a, const QRationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string QRationalFunction::to_string() const {
  std::string n = num_.to_string("q");
  if (den_.is_constant()) return n;
  return "(" + n + ")/(" + den_.to_string("q") + ")";
}

}  // namespace reciplab
