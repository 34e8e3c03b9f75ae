#include "reciplab/hq_bernoulli.hpp"

#include "reciplab/classical.hpp"

namespace reciplab {

LogPolynomial::LogPolynomial(const QRationalFunction& c) {
  if (!c.is_zero()) c_.emplace(0, c);
}

LogPolynomial LogPolynomial::term(const QRationalFunction& c, int d) {
  if (d < 0) throw DegenerateParams("L-degree must be >= 0");
  LogPolynomial p;
  if (!c.is_zero()) p.c_.emplace(d, c);
  return p;
}

QRationalFunction LogPolynomial::coeff(int d) const {
  auto it = c_.find(d);
  return it == c_.end() ? QRationalFunction() : it->second;
}

void LogPolynomial::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero()) it = c_.erase(it);
    else ++it;
  }
}

LogPolynomial LogPolynomial::substitute(std::size_t m) const {
  LogPolynomial r;
  for (const auto& [d, c] : c_) r.c_.emplace(d, c.substitute(m) * QRationalFunction(Rational(static_cast<long>(m)).pow(d)));
  return r;
}

LogPolynomial& LogPolynomial::operator+=(const LogPolynomial& o) {
  for (const auto& [d, c] : o.c_) {
    auto it = c_.find(d);
    if (it == c_.end()) c_.emplace(d, c);
    else it->second += c;
  }
  prune();
  return *this;
}

LogPolynomial& LogPolynomial::operator-=(const LogPolynomial& o) { return *this += -o; }

LogPolynomial& LogPolynomial::operator*=(const LogPolynomial& o) {
  std::map<int, QRationalFunction> r;
  for (const auto& [d1, c1] : c_)
    for (const auto& [d2, c2] : o.c_) {
      auto it = r.find(d1 + d2);
      if (it == r.end()) r.emplace(d1 + d2, c1 * c2);
      else it->second += c1 * c2;
    }
  c_ = std::move(r);
  prune();
  return *this;
}

LogPolynomial LogPolynomial::operator-() const {
  LogPolynomial r = *this;
  for (auto& [d, c] : r.c_) c = -c;
  return r;
}

bool operator==(const LogPolynomial& a, const LogPolynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  auto ib = b.c_.begin();
  for (const auto& [d, c] : a.c_) {
    if (d != ib->first || !(c == ib->second)) return false;
    ++ib;
  }
  return true;
}

std::string LogPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (d == 1) s += "*L";
    else if (d > 1) s += "*L^" + std::to_string(d);
  }
  return s;
}

QRationalFunction twist_monomial(const Cyclotomic& zeta, long h) {
  if (h >= 0) return QRationalFunction::monomial(zeta, static_cast<std::size_t>(h));
  return QRationalFunction(zeta) / QRationalFunction::monomial(Cyclotomic(1), static_cast<std::size_t>(-h));
}

std::vector<LogPolynomial> hq_bernoulli_numbers(int n, long h, const Cyclotomic& zeta) {
  if (n < 0) throw DegenerateParams("n must be >= 0");
  if (h == 0 && zeta.is_one()) throw DegenerateParams("zeta = 1 with h = 0 makes zeta q^h e^t - 1 vanish at t = 0");
  QRationalFunction w = twist_monomial(zeta, h);
  QRationalFunction inv = (w - QRationalFunction(1)).inverse();
  LogPolynomial wl(w), invl(inv);
  std::vector<LogPolynomial> b;
  b.push_back(LogPolynomial::term(QRationalFunction(h) * inv, 1));
  for (int m = 1; m <= n; ++m) {
    LogPolynomial s;
    for (int k = 0; k < m; ++k) s += LogPolynomial(Rational(binomial(m, k))) * b[static_cast<std::size_t>(k)];
    LogPolynomial rhs = (m == 1 ? LogPolynomial(1) : LogPolynomial()) - wl * s;
    b.push_back(rhs * invl);
  }
  return b;
}

LogPolynomial hq_bernoulli_number(int n, long h, const Cyclotomic& zeta) { return hq_bernoulli_numbers(n, h, zeta).back(); }

LogPolynomial hq_bernoulli_poly(int n, long h, const Cyclotomic& zeta, const Rational& x) {
  auto b = hq_bernoulli_numbers(n, h, zeta);
  LogPolynomial s;
  Rational xp(1);
  for (int k = n; k >= 0; --k) {
    s += LogPolynomial(Rational(binomial(n, k)) * xp) * b[static_cast<std::size_t>(k)];
    xp *= x;
  }
  return s;
}

LogPolynomial hq_bernoulli_char(int n, long h, const Cyclotomic& zeta, const DirichletCharacter& chi, const Rational& x) {
  const long f = chi.modulus();
  Cyclotomic zf = zeta.pow(f);
  auto bf = hq_bernoulli_numbers(n, h, zf);
  LogPolynomial s;
  for (long j = 1; j <= f; ++j) {
    const Cyclotomic& c = chi(j);
    if (c.is_zero()) continue;
    Rational y = (Rational(j) + x) / Rational(f);
    LogPolynomial inner;
    Rational yp(1);
    for (int k = n; k >= 0; --k) {
      inner += LogPolynomial(Rational(binomial(n, k)) * yp) * bf[static_cast<std::size_t>(k)];
      yp *= y;
    }
    s += LogPolynomial(twist_monomial(c * zeta.pow(j), h * j)) * inner.substitute(static_cast<std::size_t>(f));
  }
  return LogPolynomial(Rational(f).pow(n - 1)) * s;
}

LogPolynomial distribution_residual(int n, long h, const Cyclotomic& zeta, const Rational& x, long m) {
  if (m < 1) throw DegenerateParams("m must be positive");
  LogPolynomial lhs = hq_bernoulli_poly(n, h, zeta, x);
  Cyclotomic zm = zeta.pow(m);
  auto bm = hq_bernoulli_numbers(n, h, zm);
  LogPolynomial s;
  for (long a = 0; a < m; ++a) {
    Rational y = (Rational(a) + x) / Rational(m);
    LogPolynomial inner;
    Rational yp(1);
    for (int k = n; k >= 0; --k) {
      inner += LogPolynomial(Rational(binomial(n, k)) * yp) * bm[static_cast<std::size_t>(k)];
      yp *= y;
    }
    s += LogPolynomial(twist_monomial(zeta.pow(a), h * a)) * inner.substitute(static_cast<std::size_t>(m));
  }
  return lhs - LogPolynomial(Rational(m).pow(n - 1)) * s;
}

LogPolynomial hq_dedekind_formal(int m, long a, long b, long h, const Cyclotomic& zeta) {
  if (b < 1) throw DegenerateParams("b must be positive");
  if (gcd_long(a, b) != 1) throw NotCoprime("gcd(a, b) must be 1");
  auto bn = hq_bernoulli_numbers(m, h, zeta);
  LogPolynomial s;
  for (long j = 1; j < b; ++j) {
    Rational x = Rational(j * a, b).frac();
    LogPolynomial v;
    Rational xp(1);
    for (int k = m; k >= 0; --k) {
      v += LogPolynomial(Rational(binomial(m, k)) * xp) * bn[static_cast<std::size_t>(k)];
      xp *= x;
    }
    s += LogPolynomial(Rational(j, b)) * v;
  }
  return s;
}

}  // namespace reciplab
