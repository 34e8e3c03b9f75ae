#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reciplab/hq_bernoulli.hpp"
#include "reciplab/rational.hpp"

namespace reciplab {

// v_p of a nonzero integer.
long padic_valuation(const BigInt& n, long p);
long padic_valuation(const Rational& r, long p);

// Element of Q_p known modulo p^precision(): p^valuation() * unit() with the
// unit known modulo p^(precision() - valuation()). A zero carries only its
// precision; exact zero has precision kExact.
class PAdic {
 public:
  static constexpr long kExact = 1L << 40;

  PAdic() = default;
  // r rounded to relative precision rel (absolute precision v_p(r) + rel).
  static PAdic from_rational(const Rational& r, long p, long rel);
  static PAdic zero(long p, long precision = kExact);
  // p^v * unit + O(p^precision); unit is reduced and stripped of p.
  static PAdic from_parts(long p, long v, const BigInt& unit, long precision) { return PAdic(p, v, unit, precision); }

  long prime() const { return p_; }
  bool is_zero() const { return unit_ == 0; }
  // For a zero this is its precision: the value is divisible by p^precision.
  long valuation() const { return is_zero() ? prec_ : v_; }
  long precision() const { return prec_; }
  long relative_precision() const { return is_zero() ? 0 : prec_ - v_; }
  const BigInt& unit() const { return unit_; }

  // Drop digits beyond absolute precision n (never adds digits).
  PAdic with_precision(long n) const;
  // p^v * unit as a rational number (the canonical representative).
  Rational to_rational() const;

  PAdic inverse() const;
  PAdic pow(long e) const;

  PAdic& operator+=(const PAdic& o);
  PAdic& operator-=(const PAdic& o) { return *this += -o; }
  PAdic& operator*=(const PAdic& o);
  PAdic& operator/=(const PAdic& o) { return *this *= o.inverse(); }
  friend PAdic operator+(PAdic a, const PAdic& b) { return a += b; }
  friend PAdic operator-(PAdic a, const PAdic& b) { return a -= b; }
  friend PAdic operator*(PAdic a, const PAdic& b) { return a *= b; }
  friend PAdic operator/(PAdic a, const PAdic& b) { return a /= b; }
  PAdic operator-() const;

  // Equal to within the smaller of the two precisions.
  bool agrees_with(const PAdic& o) const { return (*this - o).is_zero(); }

  // e.g. "57 + O(5^3)" or "5^-1 * 3 + O(5^2)"
  std::string to_string() const;

 private:
  PAdic(long p, long v, BigInt unit, long prec);
  void normalize();

  long p_ = 2;
  long v_ = 0;
  BigInt unit_ = 0;
  long prec_ = kExact;
};

// Teichmueller lift of a mod p to precision N.
PAdic teichmuller(long a, long p, long N);
// omega(a)^e, e may be negative.
PAdic teichmuller_power(long a, long e, long p, long N);

// Iwasawa logarithm on 1 + pZ_p.
PAdic padic_log(const PAdic& x);
// exp(x) for v_p(x) >= 1 (p odd).
PAdic padic_exp(const PAdic& x);

// g(x) = q^{hx} * poly(x), poly lowest degree first.
struct VolkenbornIntegrand {
  std::vector<Rational> poly;
  PAdic q;
  long h = 0;
};

// (1/p^level) sum_{x<p^level} g(x), or with weight q^x and 1/[p^level]_q.
// `prec` is the absolute precision wanted in the result.
PAdic volkenborn(const VolkenbornIntegrand& g, long level, long prec, bool q_weighted = false);

// B^{(h)}_{0..n}(q) at zeta = 1 evaluated in Q_p with L = log_p q.
std::vector<PAdic> padic_hq_bernoulli_numbers(int n, long h, const PAdic& q, const PAdic& L);
PAdic padic_hq_bernoulli_poly(int n, long h, const PAdic& q, const PAdic& L, const Rational& x);
// (1.4) at zeta = 1 for chi = omega^i (conductor p), as a function of x.
PAdic padic_hq_bernoulli_char(int n, long h, const PAdic& q, const PAdic& L, int i, const Rational& x);

// A LogPolynomial with rational coefficients at q and L.
PAdic evaluate_padic(const LogPolynomial& f, const PAdic& q, const PAdic& L);

struct PAdicResidual {
  PAdic lhs;
  PAdic rhs;
  PAdic residual;
  long exact_terms = 0;  // summands taken from the exact value instead of T
};

// Level-N Volkenborn integral of q^{hx} x^n minus B^{(h)}_n(q).
PAdicResidual witt_residual(int n, long h, const PAdic& q, long level, long prec);

// sum_{j<b} (j/b) B^{(h)}_m({ja/b}, q), p | b.
PAdic padic_dedekind(int m, long a, long b, long h, const PAdic& q, long prec);

// omega^{-1}(j) (<j>^s / b) sum_{k<=K} C(s,k) (b/j)^k B_k with B_k = B^{(h)}_k(q), or
// the character numbers of omega^i when chi_power is set.
PAdic interpolant_T(const PAdic& s, long j, long b, long h, const PAdic& q, long K, long prec,
                    std::optional<int> chi_power = std::nullopt);

// sum_j j T(m; (aj)_b) - b^m s_m(a, b : q)
PAdicResidual th13_residual(int m, long a, long b, long h, const PAdic& q, long N, long K);
// sum_{j<fb} j chi(j) T_chi(m; (aj)_b) - f b^m s_m(a, b : q, chi), chi = omega^i
PAdicResidual th19_residual(int m, long a, long b, long h, const PAdic& q, long N, long K, int i);

}  // namespace reciplab
