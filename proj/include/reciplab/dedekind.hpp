#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reciplab/characters.hpp"
#include "reciplab/cyclotomic.hpp"
#include "reciplab/rational.hpp"

namespace reciplab {

struct Residual {
  Scalar lhs;
  Scalar rhs;
  Scalar residual;  // lhs - rhs
  bool zero() const { return residual.is_zero(); }
};

// ((x))
Rational sawtooth(const Rational& x);
// s(h, k) = sum_{a<k} ((a/k)) ((ha/k))
Rational classical_dedekind(long h, long k);

// S_{n,u}(h, k) at u = root^k:
//   sum_{a<k} root^{-ha} (a/k) Hbar_n(ha/k, root^k).
Scalar fe_dedekind_sum(int n, long h, long k, const Scalar& root);

// S_{n,u^k}(h, k | chi) = h^n sum_{a<k, b<h} chi(kb+ha) u^{-(kb+ha)} (a/k) Hbar_n(a/k + b/h, u^{hk}).
Scalar fe_dedekind_sum_char(int n, long h, long k, const Scalar& u, const DirichletCharacter& chi);

// Reciprocity law for S_{n,u^k}(h, k).
Residual th11_residual(int n, long h, long k, const Scalar& u);

// Character reciprocity law. With U = u^{hk}, A = (1/hk) H_{n+1,chi}(u) + H_{n,chi}(u)
// and G = sum_{a,b} chi(x) u^{-x} H_{2,n}(x, u | hk, hk), x = kb+ha:
//   k^n S(h,k|chi) + h^n S(k,h|chi) = ((1-U)/U) A / (1-u^f) - (U/(U-1)) G.
Residual th4_residual(int n, long h, long k, const Scalar& u, const DirichletCharacter& chi);
// Same left side against ((1-U)/U) (u^f/(1-u^f)) A + (U/(U-1)) G.
Residual th4_residual_as_printed(int n, long h, long k, const Scalar& u, const DirichletCharacter& chi);

// Second evaluation of char_double_l_neg through the character reciprocity law:
//   -A/(1-u^f) - (U/(U-1)) (k^n S(h,k|chi) + h^n S(k,h|chi)).
Scalar char_double_l_neg_via_reciprocity(int n, const Scalar& u, const DirichletCharacter& chi, long k, long h);

struct TwistedEntry {
  std::string law;          // "th11" or "th4"
  long zeta_exponent;       // u = zeta_d^j
  long chi_modulus = 1;
  long chi_index = 0;
  bool skipped = false;     // pole point
  std::optional<Residual> result;
};

// Both reciprocity laws at every primitive d-th root of unity, d | hk - 1,
// with th4 over all characters mod f for every f | hk. Pole points are
// flagged as skipped.
std::vector<TwistedEntry> twisted_residuals(int n, long h, long k, long d);

}  // namespace reciplab
