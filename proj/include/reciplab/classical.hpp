#pragma once

#include <optional>
#include <vector>

#include "reciplab/characters.hpp"
#include "reciplab/cyclotomic.hpp"
#include "reciplab/rational.hpp"

namespace reciplab {

// Bernoulli numbers B_0..B_n of t/(e^t - 1), via sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int n);
Rational bernoulli_number(int n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
template <class T>
T bernoulli_poly(int n, const T& x) {
  auto b = bernoulli_numbers(n);
  T acc(0);
  for (int k = 0; k <= n; ++k) acc = acc * x + T(Rational(binomial(n, k)) * b[static_cast<std::size_t>(k)]);
  return acc;
}

// Periodic Bernoulli function: B_n({x}), with the value 0 at integers for n = 1.
Rational bernoulli_function(int n, const Rational& x);

// Frobenius-Euler numbers H_0(u)..H_n(u) of (1-u)/(e^t - u).
std::vector<Scalar> fe_numbers(int n, const Scalar& u);
Scalar fe_number(int n, const Scalar& u);
// H_n(x, u) = sum_k C(n,k) H_k(u) x^{n-k}.
Scalar fe_poly(int n, const Scalar& x, const Scalar& u);
// Quasi-periodic extension u^{floor x} H_n({x}, u).
Scalar fe_function(int n, const Rational& x, const Scalar& u);

// Frobenius-Euler data for one parameter u, reused across many evaluations.
class FeTable {
 public:
  FeTable(const Scalar& u, int max_n);

  const Scalar& u() const { return u_; }
  int max_n() const { return static_cast<int>(h_.size()) - 1; }
  const Scalar& number(int n) const { return h_.at(static_cast<std::size_t>(n)); }
  Scalar poly(int n, const Scalar& x) const;
  Scalar poly(int n, const Rational& x) const;
  Scalar function(int n, const Rational& x) const;
  // u^e for any integer e (u != 0 for negative e).
  Scalar u_pow(long e) const;

 private:
  Scalar u_;
  Scalar u_inv_;
  std::vector<Scalar> h_;
};

// H_{n,chi}(u) = f^n sum_{a<f} chi(a) u^{f-a} H_n(a/f, u^f) with f the modulus
// of chi. With `multiple` = F (f | F) the same sum is taken over a < F with
// F in place of f.
Scalar char_fe_number(int n, const DirichletCharacter& chi, const Scalar& u,
                      std::optional<long> multiple = std::nullopt);

// B_{n,chi}(x) = f^{n-1} sum_{a<f} chi(a) B_n((a+x)/f).
Scalar char_bernoulli_poly(int n, const DirichletCharacter& chi, const Scalar& x);

// zeta(-n, x) = -B_{n+1}(x)/(n+1), x > 0.
Rational hurwitz_zeta_neg(int n, const Rational& x);

}  // namespace reciplab
