#pragma once

#include <string>
#include <vector>

#include "reciplab/polynomial.hpp"
#include "reciplab/rational.hpp"

namespace reciplab {

// m-th cyclotomic polynomial with integer coefficients, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long m);

long euler_phi(long m);

// Element of Q(zeta_m), stored as the residue of a polynomial in zeta_m
// modulo Phi_m: coeffs()[i] is the coefficient of zeta_m^i, i < phi(m).
//
// Values that happen to be rational are kept at conductor 1, so the
// conductor of a result can be smaller than that of its operands. Binary
// operations lift both operands to lcm of the conductors first.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : conductor_(1), c_{r} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}          // NOLINT
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}           // NOLINT

  // Residue of sum raw[i] zeta_m^i modulo Phi_m (any length of raw).
  static Cyclotomic normalize(long m, const std::vector<Rational>& raw);
  // zeta_m^k for any integer k.
  static Cyclotomic root_of_unity(long m, long k = 1);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  // Requires is_rational().
  const Rational& rational() const;

  // Same value represented in Q(zeta_target); target must be a multiple of
  // the current conductor.
  Cyclotomic embed(long target) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;
  // Field automorphism zeta_m -> zeta_m^j (gcd(j, m) = 1).
  Cyclotomic galois(long j) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // Human-readable form such as "1/2 + 3*z5^2"; rationals print plainly.
  std::string to_string() const;

 private:
  Cyclotomic(long m, std::vector<Rational> c) : conductor_(m), c_(std::move(c)) {}
  void collapse();

  long conductor_;
  std::vector<Rational> c_;
};

using Scalar = Cyclotomic;

}  // namespace reciplab
