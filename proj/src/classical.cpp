#include "reciplab/classical.hpp"

#include <mutex>

namespace reciplab {

std::vector<Rational> bernoulli_numbers(int n) {
  if (n < 0) throw DegenerateParams("Bernoulli index must be >= 0");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    Rational s(0);
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * cache[static_cast<std::size_t>(k)];
    cache.push_back(-s / Rational(m + 1));
  }
  return {cache.begin(), cache.begin() + n + 1};
}

Rational bernoulli_number(int n) { return bernoulli_numbers(n).back(); }

Rational bernoulli_function(int n, const Rational& x) {
  if (n < 1) throw DegenerateParams("Bernoulli function needs n >= 1");
  if (n == 1 && x.is_integer()) return Rational(0);
  return bernoulli_poly(n, x.frac());
}

std::vector<Scalar> fe_numbers(int n, const Scalar& u) {
  if (n < 0) throw DegenerateParams("Frobenius-Euler index must be >= 0");
  if (u.is_one()) throw PoleAtOne("Frobenius-Euler numbers have a pole at u = 1");
  Scalar inv = (u - Scalar(1)).inverse();
  std::vector<Scalar> h{Scalar(1)};
  for (int m = 1; m <= n; ++m) {
    Scalar s(0);
    for (int k = 0; k < m; ++k) s += Scalar(Rational(binomial(m, k))) * h[static_cast<std::size_t>(k)];
    h.push_back(s * inv);
  }
  return h;
}

Scalar fe_number(int n, const Scalar& u) { return fe_numbers(n, u).back(); }

Scalar fe_poly(int n, const Scalar& x, const Scalar& u) { return FeTable(u, n).poly(n, x); }

Scalar fe_function(int n, const Rational& x, const Scalar& u) {
  if (u.is_zero()) throw ZeroDivisor("Frobenius-Euler function needs u != 0");
  return FeTable(u, n).function(n, x);
}

FeTable::FeTable(const Scalar& u, int max_n) : u_(u), h_(fe_numbers(max_n, u)) {
  if (!u.is_zero()) u_inv_ = u.inverse();
}

Scalar FeTable::poly(int n, const Scalar& x) const {
  Scalar acc(0);
  for (int k = 0; k <= n; ++k) acc = acc * x + Scalar(Rational(binomial(n, k))) * number(k);
  return acc;
}

Scalar FeTable::poly(int n, const Rational& x) const {
  Scalar acc(0);
  Rational xp(1);
  for (int k = n; k >= 0; --k) {
    acc += number(k) * Scalar(Rational(binomial(n, k)) * xp);
    xp *= x;
  }
  return acc;
}

Scalar FeTable::u_pow(long e) const {
  if (e < 0) {
    if (u_.is_zero()) throw ZeroDivisor("negative power of u = 0");
    return u_inv_.pow(-e);
  }
  return u_.pow(e);
}

Scalar FeTable::function(int n, const Rational& x) const {
  BigInt fl = x.floor();
  if (!fl.fits_slong_p()) throw DegenerateParams("Frobenius-Euler function argument out of range");
  long k = fl.get_si();
  Scalar v = poly(n, x.frac());
  if (k == 0) return v;
  return u_pow(k) * v;
}

Scalar char_fe_number(int n, const DirichletCharacter& chi, const Scalar& u, std::optional<long> multiple) {
  const long f = chi.modulus();
  long big_f = multiple.value_or(f);
  if (big_f < 1 || big_f % f != 0) throw DegenerateParams("F must be a positive multiple of the character modulus");
  Scalar uf = u.pow(big_f);
  if (uf.is_one()) throw PoleAtOne("u^F = 1 in generalized Frobenius-Euler number");
  FeTable tab(uf, n);
  Scalar sum(0);
  for (long a = 0; a < big_f; ++a) {
    const Scalar& c = chi(a);
    if (c.is_zero()) continue;
    sum += c * u.pow(big_f - a) * tab.poly(n, Rational(a, big_f));
  }
  return Scalar(Rational(BigInt(big_f)).pow(n)) * sum;
}

Scalar char_bernoulli_poly(int n, const DirichletCharacter& chi, const Scalar& x) {
  const long f = chi.modulus();
  Scalar sum(0);
  Scalar inv_f(Rational(1, f));
  for (long a = 0; a < f; ++a) {
    const Scalar& c = chi(a);
    if (c.is_zero()) continue;
    sum += c * bernoulli_poly(n, (Scalar(a) + x) * inv_f);
  }
  return Scalar(Rational(BigInt(f)).pow(n - 1)) * sum;
}

Rational hurwitz_zeta_neg(int n, const Rational& x) {
  if (x.sign() <= 0) throw OutOfDomain("Hurwitz zeta needs x > 0");
  return -bernoulli_poly(n + 1, x) / Rational(n + 1);
}

}  // namespace reciplab
