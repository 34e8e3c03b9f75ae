#include "reciplab/hardy.hpp"

#include "reciplab/classical.hpp"
#include "reciplab/dedekind.hpp"

namespace reciplab {

namespace {

int parity_sign(const BigInt& e) { return mpz_odd_p(e.get_mpz_t()) ? -1 : 1; }
int parity_sign(long e) { return (e % 2 != 0) ? -1 : 1; }

BigInt floor_div(long a, long b) { return Rational(a, b).floor(); }

void require_k(long k) {
  if (k < 1) throw DegenerateParams("k must be positive");
}

}  // namespace

HardyVariant parse_hardy_variant(const std::string& name) {
  if (name == "S") return HardyVariant::S;
  if (name == "s1") return HardyVariant::s1;
  if (name == "s2") return HardyVariant::s2;
  if (name == "s3") return HardyVariant::s3;
  if (name == "s4") return HardyVariant::s4;
  if (name == "s5") return HardyVariant::s5;
  throw ConfigError("unknown Hardy sum variant: " + name);
}

std::string to_string(HardyVariant v) {
  switch (v) {
    case HardyVariant::S: return "S";
    case HardyVariant::s1: return "s1";
    case HardyVariant::s2: return "s2";
    case HardyVariant::s3: return "s3";
    case HardyVariant::s4: return "s4";
    case HardyVariant::s5: return "s5";
  }
  return "?";
}

Rational hardy_sum(HardyVariant v, long h, long k) {
  require_k(k);
  Rational s(0);
  switch (v) {
    case HardyVariant::S:
      for (long j = 1; j < k; ++j) s += Rational(parity_sign(floor_div(h * j, k) + j + 1));
      break;
    case HardyVariant::s1:
      for (long j = 1; j <= k; ++j) s += Rational(parity_sign(floor_div(h * j, k))) * sawtooth(Rational(j, k));
      break;
    case HardyVariant::s2:
      for (long j = 1; j <= k; ++j)
        s += Rational(parity_sign(j)) * sawtooth(Rational(j, k)) * sawtooth(Rational(h * j, k));
      break;
    case HardyVariant::s3:
      for (long j = 1; j <= k; ++j) s += Rational(parity_sign(j)) * sawtooth(Rational(h * j, k));
      break;
    case HardyVariant::s4:
      for (long j = 1; j < k; ++j) s += Rational(parity_sign(floor_div(h * j, k)));
      break;
    case HardyVariant::s5:
      for (long j = 1; j <= k; ++j) s += Rational(parity_sign(floor_div(h * j, k) + j)) * sawtooth(Rational(j, k));
      break;
  }
  return s;
}

Rational apostol_sum(int n, long h, long k) {
  require_k(k);
  Rational s(0);
  for (long a = 1; a < k; ++a) s += Rational(a, k) * bernoulli_function(n, Rational(h * a, k));
  return s;
}

RationalResidual apostol_reciprocity(int n, long h, long k) {
  if (h < 1 || k < 1) throw DegenerateParams("h, k must be positive");
  if (gcd_long(h, k) != 1) throw NotCoprime("gcd(h, k) must be 1");
  auto b = bernoulli_numbers(n + 1);
  Rational lhs = Rational(n + 1) * (Rational(h) * Rational(k).pow(n) * apostol_sum(n, h, k) +
                                    Rational(k) * Rational(h).pow(n) * apostol_sum(n, k, h));
  Rational rhs(0);
  for (int j = 0; j <= n + 1; ++j) {
    rhs += Rational(binomial(n + 1, j)) * Rational(parity_sign(static_cast<long>(j))) * b[static_cast<std::size_t>(j)] *
           Rational(h).pow(j) * b[static_cast<std::size_t>(n + 1 - j)] * Rational(k).pow(n + 1 - j);
  }
  rhs += Rational(n) * b[static_cast<std::size_t>(n + 1)];
  return {lhs, rhs, lhs - rhs};
}

Scalar char_bernoulli_function(int n, const DirichletCharacter& chi, const Rational& x) {
  if (n < 1) throw DegenerateParams("character Bernoulli function needs n >= 1");
  const long f = chi.modulus();
  Scalar s(0);
  for (long a = 0; a < f; ++a) {
    const Scalar& c = chi(a);
    if (c.is_zero()) continue;
    s += c * Scalar(bernoulli_function(n, (Rational(a) + x) / Rational(f)));
  }
  return Scalar(Rational(f).pow(n - 1)) * s;
}

Scalar berndt_char_dedekind(long h, long k, const DirichletCharacter& chi) {
  require_k(k);
  if (gcd_long(h, k) != 1) throw NotCoprime("gcd(h, k) must be 1");
  if (!is_primitive(chi)) throw NonPrimitive("Berndt's sum needs a primitive character");
  const long f = chi.modulus();
  Scalar s(0);
  for (long a = 0; a < k * f; ++a) {
    const Scalar& c = chi(a);
    if (c.is_zero()) continue;
    Rational b1 = bernoulli_function(1, Rational(a, k * f));
    if (b1.is_zero()) continue;
    s += c * char_bernoulli_function(1, chi, Rational(h * a, k)) * Scalar(b1);
  }
  return s;
}

Rational hb_sum(int variant, int n, long h, long k) {
  if (variant != 0 && variant != 1) throw DegenerateParams("HB variant must be 0 or 1");
  if (n < 0) throw DegenerateParams("n must be >= 0");
  require_k(k);
  if (k % 2 == 0) throw EvenModulus("(-1)^{ha/k} has no real value convention for even k");
  if (gcd_long(h, k) != 1) throw NotCoprime("gcd(h, k) must be 1");
  Rational s(0);
  for (long a = 1; a < k; ++a) {
    Rational arg = variant == 0 ? Rational(h * a, k) : Rational(h * a, 2 * k);
    s += Rational(parity_sign(h * a)) * Rational(a, k) * bernoulli_function(n + 1, arg);
  }
  return s;
}

PipelineCheck m5_check(int n, long h, long k) {
  if (n < 0) throw DegenerateParams("n must be >= 0");
  require_k(k);
  if (k % 2 == 0) throw EvenModulus("(-1)^{ha/k} has no real value convention for even k");
  if (h < 1) throw DegenerateParams("h must be positive");
  // root^k = -1 with root = -1 for odd k, and root^{-ha} = (-1)^{ha}
  Rational fe = fe_dedekind_sum(n, h, k, Scalar(-1)).rational();
  Rational c0 = Rational(2, n + 1);
  Rational c1 = Rational(2).pow(n + 2) / Rational(n + 1);
  Rational b(0);
  for (long a = 1; a < k; ++a) {
    b += Rational(parity_sign(h * a)) * Rational(a, k) *
         (c0 * bernoulli_function(n + 1, Rational(h * a, k)) - c1 * bernoulli_function(n + 1, Rational(h * a, 2 * k)));
  }
  return {fe, b};
}

}  // namespace reciplab
