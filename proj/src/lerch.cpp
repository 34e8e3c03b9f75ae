#include "reciplab/lerch.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include "reciplab/barnes.hpp"
#include "reciplab/egf.hpp"

namespace reciplab {

const Polynomial<Rational>& power_sum_numerator(int k) {
  if (k < 0) throw DegenerateParams("power sum index must be >= 0");
  static std::mutex mu;
  static std::vector<Polynomial<Rational>> cache{Polynomial<Rational>(Rational(1))};
  std::lock_guard<std::mutex> lock(mu);
  const auto z = Polynomial<Rational>::x();
  const Polynomial<Rational> one_minus_z = Polynomial<Rational>(Rational(1)) - z;
  while (static_cast<int>(cache.size()) <= k) {
    const auto& prev = cache.back();
    auto kk = static_cast<long>(cache.size());
    cache.push_back(z * (prev.derivative() * one_minus_z + prev * Rational(kk)));
  }
  return cache[static_cast<std::size_t>(k)];
}

Scalar power_sum_closed(int k, const Scalar& z) {
  if (z.is_one()) throw PoleAtOne("power sum has a pole at z = 1");
  Polynomial<Rational> num = power_sum_numerator(k);
  Scalar denom = (Scalar(1) - z).pow(k + 1);
  return num.evaluate(z) / denom;
}

namespace {

Scalar inverse_checked(const Scalar& u) {
  if (u.is_zero()) throw ZeroDivisor("u = 0");
  if (u.is_one()) throw PoleAtOne("l-function value has a pole at u = 1");
  return u.inverse();
}

}  // namespace

Scalar l_neg(int n, const Rational& x, const Scalar& u) {
  Scalar z = inverse_checked(u);
  Scalar acc(0);
  Rational xp(1);
  for (int k = n; k >= 0; --k) {
    acc += Scalar(Rational(binomial(n, k)) * xp) * power_sum_closed(k, z);
    xp *= x;
  }
  return acc;
}

Scalar l_neg_onevar(int n, const Scalar& u) {
  Scalar v = power_sum_closed(n, inverse_checked(u));
  return n == 0 ? v - Scalar(1) : v;
}

Scalar multiple_l_neg(int n, const Rational& x, const Scalar& u, const std::vector<long>& a) {
  if (a.empty()) throw DegenerateParams("multiple l-function needs r >= 1");
  Scalar z = inverse_checked(u);
  auto ord = static_cast<std::size_t>(n);
  auto acc = EgfSeries<Scalar>::exponential(Scalar(x), ord);
  for (long aj : a) {
    if (aj < 1) throw DegenerateParams("parameters a_j must be positive");
    Scalar za = z.pow(aj);
    if (za.is_one()) throw PoleAtOne("u^{a_j} = 1 in multiple l-function");
    EgfSeries<Scalar> f(ord);
    Rational ap(1);
    for (std::size_t m = 0; m <= ord; ++m) {
      f[m] = power_sum_closed(static_cast<int>(m), za) * Scalar(ap);
      ap *= Rational(aj);
    }
    acc = acc * f;
  }
  return acc[ord];
}

Scalar char_double_l_neg(int n, const Scalar& u, const DirichletCharacter& chi, long k, long h) {
  if (h < 1 || k < 1) throw DegenerateParams("h, k must be positive");
  if (gcd_long(h, k) != 1) throw NotCoprime("double l-function needs gcd(h, k) = 1");
  const long hk = h * k;
  if (hk % chi.modulus() != 0) throw DegenerateParams("character modulus must divide hk");
  Scalar ui = inverse_checked(u);
  Scalar uhk_inv = ui.pow(hk);
  if (uhk_inv.is_one()) throw PoleAtOne("u^{hk} = 1 in double l-function");
  Scalar sum(0);
  for (long a = 0; a < k; ++a) {
    for (long b = 0; b < h; ++b) {
      long x = k * b + h * a;
      const Scalar& c = chi(x);
      if (c.is_zero()) continue;
      sum += c * ui.pow(x) * barnes_fe({hk, hk}, u, Scalar(x), n);
    }
  }
  Scalar d = Scalar(1) - uhk_inv;
  return sum / (d * d);
}

NumericL l_numeric(std::complex<double> s, double x, double u, double tol, long max_terms) {
  if (!(u > 1.0)) throw OutOfDomain("numeric l-function needs real u > 1");
  if (!(tol > 0.0)) throw OutOfDomain("tolerance must be positive");
  if (x < 0.0) throw OutOfDomain("numeric l-function needs x >= 0");
  const double sigma = s.real();
  const double eps = std::numeric_limits<double>::epsilon();
  std::complex<double> acc = 0.0;
  double rounding = 0.0;  // first-order bound on accumulated floating error
  double upow = 1.0;  // u^{-m}
  for (long m = 0; m < max_terms; ++m) {
    double base = static_cast<double>(m) + x;
    std::complex<double> term;
    if (base == 0.0) {
      if (s == std::complex<double>(0.0)) term = 1.0;
      else if (sigma < 0.0) term = 0.0;
      else throw OutOfDomain("term 0^{-s} undefined for Re(s) >= 0, s != 0");
    } else {
      term = upow * std::exp(-s * std::log(base));
    }
    acc += term;
    rounding += eps * (std::abs(acc) + 8.0 * std::abs(term));
    upow /= u;
    // tail from index m+1: terms t_j = u^{-j} (j+x)^{-sigma}
    double next = static_cast<double>(m + 1) + x;
    double t_next = upow * std::pow(next, -sigma);
    double ratio = (1.0 / u) * (sigma < 0.0 ? std::pow(1.0 + 1.0 / next, -sigma) : 1.0);
    if (ratio < 1.0) {
      double tail = t_next / (1.0 - ratio);
      if (tail + rounding <= tol) return {acc, tail + rounding, m + 1};
      if (rounding > tol) break;
    }
  }
  throw ToleranceUnreachable("tolerance not reachable within the iteration cap");
}

}  // namespace reciplab
