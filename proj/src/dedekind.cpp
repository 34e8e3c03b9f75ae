#include "reciplab/dedekind.hpp"

#include "reciplab/barnes.hpp"
#include "reciplab/classical.hpp"

namespace reciplab {

namespace {

void require_coprime(long h, long k) {
  if (h < 1 || k < 1) throw DegenerateParams("h, k must be positive");
  if (gcd_long(h, k) != 1) throw NotCoprime("gcd(h, k) must be 1");
}

Scalar pow_rational(long base, int e) { return Scalar(Rational(BigInt(base)).pow(e)); }

}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x.frac() - Rational(1, 2);
}

Rational classical_dedekind(long h, long k) {
  if (k < 1) throw DegenerateParams("k must be positive");
  if (gcd_long(h, k) != 1) throw NotCoprime("gcd(h, k) must be 1");
  Rational s(0);
  for (long a = 1; a < k; ++a) s += sawtooth(Rational(a, k)) * sawtooth(Rational(h * a, k));
  return s;
}

Scalar fe_dedekind_sum(int n, long h, long k, const Scalar& root) {
  require_coprime(h, k);
  if (root.is_zero()) throw ZeroDivisor("root = 0");
  Scalar u = root.pow(k);
  if (u.is_one()) throw PoleAtOne("root^k = 1");
  FeTable tab(u, n);
  Scalar rinv = root.inverse();
  Scalar sum(0);
  for (long a = 1; a < k; ++a)
    sum += rinv.pow(h * a) * Scalar(Rational(a, k)) * tab.function(n, Rational(h * a, k));
  return sum;
}

Scalar fe_dedekind_sum_char(int n, long h, long k, const Scalar& u, const DirichletCharacter& chi) {
  require_coprime(h, k);
  const long hk = h * k;
  if (hk % chi.modulus() != 0) throw DegenerateParams("character modulus must divide hk");
  if (u.is_zero()) throw ZeroDivisor("u = 0");
  Scalar uhk = u.pow(hk);
  if (uhk.is_one()) throw PoleAtOne("u^{hk} = 1");
  FeTable tab(uhk, n);
  Scalar uinv = u.inverse();
  // u^{-x} for 0 <= x < 2hk
  std::vector<Scalar> upow(static_cast<std::size_t>(2 * hk));
  upow[0] = Scalar(1);
  for (std::size_t i = 1; i < upow.size(); ++i) upow[i] = upow[i - 1] * uinv;
  Scalar sum(0);
  for (long a = 1; a < k; ++a) {
    for (long b = 0; b < h; ++b) {
      long x = k * b + h * a;
      const Scalar& c = chi(x);
      if (c.is_zero()) continue;
      sum += c * upow[static_cast<std::size_t>(x)] * Scalar(Rational(a, k)) *
             tab.function(n, Rational(a, k) + Rational(b, h));
    }
  }
  return pow_rational(h, n) * sum;
}

Residual th11_residual(int n, long h, long k, const Scalar& u) {
  require_coprime(h, k);
  if (u.is_zero()) throw ZeroDivisor("u = 0");
  if (u.is_one()) throw PoleAtOne("u = 1");
  Scalar uk = u.pow(k), uh = u.pow(h);
  if (uk.is_one() || uh.is_one()) throw PoleAtOne("u^h = 1 or u^k = 1");
  Scalar ck = uk / (Scalar(1) - uk);
  Scalar ch = uh / (Scalar(1) - uh);
  Scalar c1 = u / (Scalar(1) - u);
  Scalar lhs = ck * pow_rational(k, n) * fe_dedekind_sum(n, h, k, u) +
               ch * pow_rational(h, n) * fe_dedekind_sum(n, k, h, u);
  auto hk_ = fe_numbers(n, uk);
  auto hh_ = fe_numbers(n, uh);
  auto hu = fe_numbers(n + 1, u);
  Scalar conv(0);
  for (int j = 0; j <= n; ++j) {
    conv += Scalar(Rational(binomial(n, j))) * hk_[static_cast<std::size_t>(j)] * pow_rational(k, j) *
            hh_[static_cast<std::size_t>(n - j)] * pow_rational(h, n - j);
  }
  Scalar rhs = ck * ch * conv + Scalar(Rational(1, h * k)) * c1 * hu[static_cast<std::size_t>(n + 1)] +
               c1 * hu[static_cast<std::size_t>(n)];
  return {lhs, rhs, lhs - rhs};
}

namespace {

struct Th4Parts {
  Scalar lhs;
  Scalar a;    // (1/hk) H_{n+1,chi}(u) + H_{n,chi}(u)
  Scalar g;    // barnes sum
  Scalar U;
  Scalar uf;
};

Th4Parts th4_parts(int n, long h, long k, const Scalar& u, const DirichletCharacter& chi) {
  require_coprime(h, k);
  const long hk = h * k;
  if (hk % chi.modulus() != 0) throw DegenerateParams("character modulus must divide hk");
  if (u.is_zero()) throw ZeroDivisor("u = 0");
  if (u.is_one()) throw PoleAtOne("u = 1");
  Scalar uf = u.pow(chi.modulus());
  if (uf.is_one()) throw PoleAtOne("u^f = 1");
  Scalar U = u.pow(hk);
  if (U.is_one()) throw PoleAtOne("u^{hk} = 1");
  Th4Parts p;
  p.U = U;
  p.uf = uf;
  p.lhs = pow_rational(k, n) * fe_dedekind_sum_char(n, h, k, u, chi) +
          pow_rational(h, n) * fe_dedekind_sum_char(n, k, h, u, chi);
  p.a = Scalar(Rational(1, hk)) * char_fe_number(n + 1, chi, u) + char_fe_number(n, chi, u);
  // Barnes values at x from the x = 0 series: sum_j C(n,j) P_j x^{n-j}
  auto base = barnes_fe_series({hk, hk}, u, Scalar(0), n);
  Scalar uinv = u.inverse();
  Scalar g(0);
  for (long a = 0; a < k; ++a) {
    for (long b = 0; b < h; ++b) {
      long x = k * b + h * a;
      const Scalar& c = chi(x);
      if (c.is_zero()) continue;
      Scalar bx(0);
      for (int j = 0; j <= n; ++j)
        bx += Scalar(Rational(binomial(n, j)) * Rational(x).pow(n - j)) * base[static_cast<std::size_t>(j)];
      g += c * uinv.pow(x) * bx;
    }
  }
  p.g = g;
  return p;
}

}  // namespace

Residual th4_residual(int n, long h, long k, const Scalar& u, const DirichletCharacter& chi) {
  auto p = th4_parts(n, h, k, u, chi);
  Scalar one(1);
  Scalar rhs = ((one - p.U) / p.U) * p.a / (one - p.uf) - (p.U / (p.U - one)) * p.g;
  return {p.lhs, rhs, p.lhs - rhs};
}

Residual th4_residual_as_printed(int n, long h, long k, const Scalar& u, const DirichletCharacter& chi) {
  auto p = th4_parts(n, h, k, u, chi);
  Scalar one(1);
  Scalar rhs = ((one - p.U) / p.U) * (p.uf / (one - p.uf)) * p.a + (p.U / (p.U - one)) * p.g;
  return {p.lhs, rhs, p.lhs - rhs};
}

Scalar char_double_l_neg_via_reciprocity(int n, const Scalar& u, const DirichletCharacter& chi, long k, long h) {
  auto p = th4_parts(n, h, k, u, chi);
  Scalar one(1);
  return -(p.a / (one - p.uf)) - (p.U / (p.U - one)) * p.lhs;
}

std::vector<TwistedEntry> twisted_residuals(int n, long h, long k, long d) {
  require_coprime(h, k);
  const long hk = h * k;
  if (d < 2 || (hk - 1) % d != 0) throw DegenerateParams("d must be a divisor > 1 of hk - 1");
  std::vector<long> moduli;
  for (long f = 1; f <= hk; ++f)
    if (hk % f == 0) moduli.push_back(f);
  std::vector<TwistedEntry> out;
  for (long j = 1; j < d; ++j) {
    if (gcd_long(j, d) != 1) continue;
    Scalar zeta = Scalar::root_of_unity(d, j);
    TwistedEntry e{"th11", j};
    if (zeta.pow(h).is_one() || zeta.pow(k).is_one()) e.skipped = true;
    else e.result = th11_residual(n, h, k, zeta);
    out.push_back(std::move(e));
    for (long f : moduli) {
      for (const auto& chi : enumerate_characters(f)) {
        TwistedEntry t{"th4", j, f, chi.index()};
        if (zeta.pow(f).is_one() || zeta.pow(hk).is_one()) t.skipped = true;
        else t.result = th4_residual(n, h, k, zeta, chi);
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace reciplab
