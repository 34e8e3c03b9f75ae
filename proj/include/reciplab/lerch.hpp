#pragma once

#include <complex>
#include <vector>

#include "reciplab/characters.hpp"
#include "reciplab/cyclotomic.hpp"
#include "reciplab/polynomial.hpp"

namespace reciplab {

// Numerator N_k of P_k(z) = sum_{m>=0} m^k z^m = N_k(z) / (1-z)^{k+1}.
const Polynomial<Rational>& power_sum_numerator(int k);
Scalar power_sum_closed(int k, const Scalar& z);

// l(-n, x; u) = sum_{m>=0} u^{-m} (m+x)^n, continued in u.
Scalar l_neg(int n, const Rational& x, const Scalar& u);
// l(-n; u) = sum_{m>=1} u^{-m} m^n.
Scalar l_neg_onevar(int n, const Scalar& u);
// sum over m_1..m_r >= 0 of u^{-(a.m)} (x + a.m)^n.
Scalar multiple_l_neg(int n, const Rational& x, const Scalar& u, const std::vector<long>& a);

// sum_{a<k, b<h} chi(kb+ha) u^{-(kb+ha)} H_{2,n}(kb+ha, u | hk, hk) / (1 - u^{-hk})^2.
Scalar char_double_l_neg(int n, const Scalar& u, const DirichletCharacter& chi, long k, long h);

struct NumericL {
  std::complex<double> value;
  double bound;  // |value - exact| <= bound
  long terms;
};

// sum_{m>=0} u^{-m} (m+x)^{-s} for real u > 1, x >= 0.
NumericL l_numeric(std::complex<double> s, double x, double u, double tol, long max_terms = 10'000'000);

}  // namespace reciplab
