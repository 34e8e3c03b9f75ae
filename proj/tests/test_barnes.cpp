#include <algorithm>

#include "doctest.h"
#include "reciplab/barnes.hpp"
#include "reciplab/classical.hpp"

using namespace reciplab;

namespace {

// (x + sum_j a_j H^{(j)})^n expanded over compositions, (H^{(j)})^m -> H_m(u^{a_j}).
Scalar multinomial_oracle(const std::vector<long>& a, const Scalar& u, const Scalar& x, int n) {
  std::vector<std::vector<Scalar>> h;
  for (long aj : a) h.push_back(fe_numbers(n, u.pow(aj)));
  Scalar total(0);
  std::vector<int> k(a.size(), 0);
  for (;;) {
    int used = 0;
    for (int v : k) used += v;
    if (used <= n) {
      Rational coef = Rational(factorial(n)) / Rational(factorial(n - used));
      Scalar term(1);
      for (std::size_t j = 0; j < a.size(); ++j) {
        coef /= Rational(factorial(k[j]));
        term *= h[j][static_cast<std::size_t>(k[j])] * Scalar(Rational(a[j]).pow(k[j]));
      }
      total += Scalar(coef) * term * x.pow(n - used);
    }
    std::size_t i = 0;
    while (i < k.size() && ++k[i] > n) k[i++] = 0;
    if (i == k.size()) break;
  }
  return total;
}

}  // namespace

TEST_CASE("barnes_fe examples") {
  for (const auto& u : {Scalar(2), Scalar(-3), Scalar::root_of_unity(5)})
    for (int n = 0; n <= 6; ++n)
      for (const auto& x : {Rational(0), Rational(1, 2), Rational(7, 3)})
        CHECK(barnes_fe({1}, u, Scalar(x), n) == fe_poly(n, Scalar(x), u));
  CHECK(barnes_fe({1, 1}, Scalar(2), Scalar(0), 1) == Scalar(2));
  CHECK(barnes_fe({3, 4, 2}, Scalar(Rational(5, 2)), Scalar(Rational(1, 3)), 0) == Scalar(1));
}

TEST_CASE("barnes_fe errors") {
  CHECK_THROWS_AS(barnes_fe({2}, Scalar(-1), Scalar(0), 2), PoleAtOne);
  CHECK_THROWS_AS(barnes_fe({3}, Scalar::root_of_unity(3), Scalar(0), 2), PoleAtOne);
  CHECK_THROWS_AS(barnes_fe({0}, Scalar(2), Scalar(0), 2), DegenerateParams);
  CHECK_THROWS_AS(barnes_fe({}, Scalar(2), Scalar(0), 2), DegenerateParams);
}

TEST_CASE("r = 1 with a_1 > 1 is not H_n(x, u^{a_1})") {
  Scalar u(2), x(Rational(1, 2));
  CHECK_FALSE(barnes_fe({2}, u, x, 2) == fe_poly(2, x, u.pow(2)));
  Scalar expect(0);
  auto h = fe_numbers(2, u.pow(2));
  for (int k = 0; k <= 2; ++k)
    expect += Scalar(Rational(binomial(2, k)) * Rational(2).pow(k)) * h[static_cast<std::size_t>(k)] * x.pow(2 - k);
  CHECK(barnes_fe({2}, u, x, 2) == expect);
}

TEST_CASE("EGF product equals multinomial expansion") {
  std::vector<std::vector<long>> params{{1}, {2}, {1, 3}, {2, 2}, {4, 1}, {1, 2, 3}, {3, 3, 4}, {4, 2, 1}};
  for (const auto& u : {Scalar(2), Scalar(Rational(-1, 2)), Scalar::root_of_unity(7)})
    for (const auto& a : params)
      for (int n = 0; n <= 5; ++n)
        for (const auto& x : {Scalar(0), Scalar(Rational(2, 3))})
          CHECK(barnes_fe(a, u, x, n) == multinomial_oracle(a, u, x, n));
}

TEST_CASE("permutation symmetry") {
  std::vector<long> a{1, 3, 4};
  Scalar u(3), x(Rational(1, 5));
  auto ref = barnes_fe(a, u, x, 5);
  do {
    CHECK(barnes_fe(a, u, x, 5) == ref);
  } while (std::next_permutation(a.begin(), a.end()));
}

TEST_CASE("two-parameter case used by the character reciprocity law") {
  // (H(u^{hk}) hk + H(u^{hk}) hk + kb + ha)^n
  long h = 3, k = 2, hk = 6;
  Scalar u(2);
  for (long a = 0; a < k; ++a)
    for (long b = 0; b < h; ++b)
      for (int n = 0; n <= 4; ++n) {
        Scalar x(k * b + h * a);
        auto hv = fe_numbers(n, u.pow(hk));
        Scalar direct(0);
        for (int i = 0; i <= n; ++i)
          for (int j = 0; i + j <= n; ++j)
            direct += Scalar(Rational(binomial(n, i)) * Rational(binomial(n - i, j)) * Rational(hk).pow(i + j)) *
                      hv[static_cast<std::size_t>(i)] * hv[static_cast<std::size_t>(j)] * x.pow(n - i - j);
        CHECK(barnes_fe({hk, hk}, u, x, n) == direct);
      }
}
