#include "doctest.h"
#include "gen.hpp"
#include "reciplab/classical.hpp"
#include "reciplab/cyclotomic.hpp"
#include "reciplab/egf.hpp"
#include "reciplab/qrational.hpp"

using namespace reciplab;

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).denominator() > 0);
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(-7, 3).floor() == -3);
  CHECK(Rational(-7, 3).frac() == Rational(2, 3));
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(-3, 6).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), ZeroDivisor);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDivisor);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK(binomial(6, 2) == 15);
}

TEST_CASE("cyclotomic_normalize examples") {
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(4, 2).is_rational());
  CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1));
  auto z6 = Cyclotomic::root_of_unity(6);
  CHECK(z6.conductor() == 6);
  REQUIRE(z6.coeffs().size() == 2);
  CHECK(z6.coeffs()[0] == Rational(0));
  CHECK(z6.coeffs()[1] == Rational(1));
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(Cyclotomic::normalize(6, {Rational(0), Rational(0), Rational(1)}) ==
        Cyclotomic::root_of_unity(6) - Cyclotomic(1));
}

TEST_CASE("cyclotomic identities") {
  for (long m = 1; m <= 30; ++m) {
    auto z = Cyclotomic::root_of_unity(m);
    CHECK(z.pow(m).is_one());
    CHECK(z.coeffs().size() == static_cast<std::size_t>(euler_phi(m)));
    Cyclotomic phi(0);
    const auto& p = cyclotomic_polynomial(m);
    for (std::size_t i = 0; i < p.size(); ++i) phi += Cyclotomic(p[i]) * z.pow(static_cast<long>(i));
    CHECK(phi.is_zero());
  }
  CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
}

TEST_CASE("cyclotomic_invert examples") {
  CHECK(Cyclotomic(1).inverse() == Cyclotomic(1));
  auto i = Cyclotomic::root_of_unity(4);
  CHECK(i.inverse() == -i);
  auto w = Cyclotomic(1) + Cyclotomic::root_of_unity(3);
  CHECK((w * w.inverse()).is_one());
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), ZeroDivisor);
  CHECK_THROWS_AS(Cyclotomic(1) / (Cyclotomic::root_of_unity(7) - Cyclotomic::root_of_unity(7)), ZeroDivisor);
}

TEST_CASE("cyclotomic field axioms on random samples") {
  for (long m : {1L, 3L, 4L, 5L, 8L, 9L, 12L, 15L}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = gen::cyclotomic(m), b = gen::cyclotomic(m), c = gen::cyclotomic(m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Cyclotomic(0));
      auto z = gen::nonzero_cyclotomic(m);
      CHECK((z * z.inverse()).is_one());
      CHECK(z.pow(-3) * z.pow(3) == Cyclotomic(1));
    }
  }
}

TEST_CASE("embedding round trip and mixed conductors") {
  for (int trial = 0; trial < 30; ++trial) {
    auto a = gen::cyclotomic(3), b = gen::cyclotomic(4);
    auto ae = a.embed(12), be = b.embed(12);
    CHECK(ae == a);
    CHECK(ae.conductor() == 12);
    CHECK(ae * be == a * b);
    CHECK(ae + be == a + b);
    CHECK(12 % (a * b).conductor() == 0);
  }
  auto z3 = Cyclotomic::root_of_unity(3), z4 = Cyclotomic::root_of_unity(4);
  CHECK(z3 * z4 == Cyclotomic::root_of_unity(12, 7));
  // zeta_6 = -zeta_3^2
  CHECK(Cyclotomic::root_of_unity(6) == -Cyclotomic::root_of_unity(3, 2));
}

TEST_CASE("galois action") {
  auto z = Cyclotomic::root_of_unity(7);
  CHECK(z.galois(3) == Cyclotomic::root_of_unity(7, 3));
  auto a = gen::cyclotomic(7), b = gen::cyclotomic(7);
  CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
}

TEST_CASE("cyclotomic to_string") {
  CHECK(Cyclotomic(Rational(1, 2)).to_string() == "1/2");
  CHECK(Cyclotomic::root_of_unity(5, 2).to_string() == "z5^2");
}

TEST_CASE("egf_multiply examples") {
  using S = EgfSeries<Rational>;
  S s(std::vector<Rational>{Rational(1), Rational(3), Rational(-2), Rational(1, 2)});
  CHECK(S::identity(3) * s == s);
  auto e = S::exponential(Rational(1), 8);
  auto e2 = e * e;
  for (std::size_t n = 0; n <= 8; ++n) CHECK(e2[n] == Rational(2).pow(static_cast<long>(n)));
  auto h = fe_numbers(2, Scalar(2));
  EgfSeries<Scalar> f(h);
  CHECK((f * f)[2] == Scalar(8));
  CHECK_THROWS_AS(S(2) * S(3), OrderMismatch);
}

TEST_CASE("egf product commutative and associative") {
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> a, b, c;
    for (int i = 0; i <= 6; ++i) {
      a.push_back(gen::rational());
      b.push_back(gen::rational());
      c.push_back(gen::rational());
    }
    EgfSeries<Rational> A(a), B(b), C(c);
    CHECK(A * B == B * A);
    CHECK((A * B) * C == A * (B * C));
  }
}

TEST_CASE("egf oracle for Bernoulli and Frobenius-Euler numbers") {
  // (e^t - 1) * sum B_n t^n/n! = t
  const std::size_t N = 8;
  auto b = bernoulli_numbers(static_cast<int>(N));
  auto em1 = EgfSeries<Rational>::exponential(Rational(1), N);
  em1[0] = Rational(0);
  auto prod = em1 * EgfSeries<Rational>(b);
  for (std::size_t n = 0; n <= N; ++n) CHECK(prod[n] == (n == 1 ? Rational(1) : Rational(0)));
  // (e^t - u) F_u(t) = 1 - u
  for (const Scalar& u : {Scalar(2), Scalar(-1), Scalar(Rational(5, 2)), Scalar::root_of_unity(5)}) {
    auto emu = EgfSeries<Scalar>::exponential(Scalar(1), N);
    emu[0] = emu[0] - u;
    auto p = emu * EgfSeries<Scalar>(fe_numbers(static_cast<int>(N), u));
    CHECK(p[0] == Scalar(1) - u);
    for (std::size_t n = 1; n <= N; ++n) CHECK(p[n].is_zero());
  }
}

TEST_CASE("qrf_substitute examples") {
  auto q = QRationalFunction::q();
  CHECK(q.substitute(3) == QRationalFunction::monomial(Cyclotomic(1), 3));
  auto f = QRationalFunction(1) / (q - QRationalFunction(1));
  CHECK(f.substitute(2) == QRationalFunction(1) / (q * q - QRationalFunction(1)));
  auto g = q / (q * q + QRationalFunction(1));
  auto q2 = q * q;
  CHECK(g.substitute(2) == q2 / (q2 * q2 + QRationalFunction(1)));
}

TEST_CASE("qrational canonical form") {
  auto q = QRationalFunction::q();
  auto one = QRationalFunction(1);
  auto a = (q * q - one) / (q - one);
  CHECK(a == q + one);
  CHECK(a.denominator().degree() == 0);
  auto b = (QRationalFunction(2) * q) / (QRationalFunction(4) * q + QRationalFunction(2));
  CHECK(b.denominator().leading() == Cyclotomic(1));
  // equality is cross-multiplication
  auto c = (q + one) / (q - one);
  auto d = (q * q + QRationalFunction(2) * q + one) / (q * q - one);
  CHECK(c == d);
  CHECK((c - d).is_zero());
  CHECK_THROWS_AS(QRationalFunction(0).inverse(), ZeroDivisor);
  auto z = QRationalFunction(Cyclotomic::root_of_unity(3));
  auto e = one / (z * q - one);
  CHECK(e.evaluate(Cyclotomic(2)) == (Cyclotomic(2) * Cyclotomic::root_of_unity(3) - Cyclotomic(1)).inverse());
  CHECK_THROWS_AS(e.evaluate(Cyclotomic::root_of_unity(3, 2)), ZeroDivisor);
}
