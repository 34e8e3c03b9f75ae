#include "reciplab/padic.hpp"

#include "reciplab/classical.hpp"

#include <algorithm>
#include <cmath>

namespace reciplab {

namespace {

BigInt ipow(long p, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw ZeroDivisor("no inverse modulo p^k");
  return r;
}

long strip(BigInt& n, long p) {
  long v = 0;
  BigInt pp(p);
  while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    n /= pp;
    ++v;
  }
  return v;
}

void require_odd_prime(long p) {
  if (p < 3 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 25) == 0) throw BadModulus("p must be an odd prime");
}

}  // namespace

long padic_valuation(const BigInt& n, long p) {
  if (n == 0) throw DegenerateParams("valuation of 0");
  BigInt m = abs(n);
  return strip(m, p);
}

long padic_valuation(const Rational& r, long p) {
  return padic_valuation(r.numerator(), p) - padic_valuation(r.denominator(), p);
}

PAdic::PAdic(long p, long v, BigInt unit, long prec) : p_(p), v_(v), unit_(std::move(unit)), prec_(prec) { normalize(); }

void PAdic::normalize() {
  if (prec_ > kExact) prec_ = kExact;
  if (unit_ == 0) {
    v_ = prec_;
    return;
  }
  v_ += strip(unit_, p_);
  if (prec_ <= v_) {
    unit_ = 0;
    v_ = prec_;
    return;
  }
  unit_ = mod_pos(unit_, ipow(p_, prec_ - v_));
}

PAdic PAdic::from_rational(const Rational& r, long p, long rel) {
  if (rel < 1) throw PrecisionExhausted("relative precision must be positive");
  if (r.is_zero()) return zero(p);
  BigInt num = r.numerator(), den = r.denominator();
  long v = strip(num, p);
  v -= strip(den, p);
  BigInt mod = ipow(p, rel);
  BigInt u = mod_pos(num * inv_mod(mod_pos(den, mod), mod), mod);
  return PAdic(p, v, u, v + rel);
}

PAdic PAdic::zero(long p, long precision) { return PAdic(p, precision, BigInt(0), precision); }

PAdic PAdic::with_precision(long n) const {
  if (n >= prec_) return *this;
  return PAdic(p_, v_, unit_, n);
}

Rational PAdic::to_rational() const {
  if (is_zero()) return Rational(0);
  if (v_ >= 0) return Rational(BigInt(unit_ * ipow(p_, v_)));
  return Rational(unit_, ipow(p_, -v_));
}

PAdic PAdic::operator-() const {
  if (is_zero()) return *this;
  return PAdic(p_, v_, -unit_, prec_);
}

PAdic& PAdic::operator+=(const PAdic& o) {
  if (o.p_ != p_) throw DegenerateParams("p-adic numbers with different primes");
  long prec = std::min(prec_, o.prec_);
  if (o.is_zero()) return *this = with_precision(prec);
  if (is_zero()) return *this = o.with_precision(prec);
  long v = std::min(v_, o.v_);
  if (prec <= v) return *this = zero(p_, prec);
  long rel = prec - v;
  BigInt a(0);
  if (v_ - v < rel) a += unit_ * ipow(p_, v_ - v);
  if (o.v_ - v < rel) a += o.unit_ * ipow(p_, o.v_ - v);
  *this = PAdic(p_, v, a, prec);
  return *this;
}

PAdic& PAdic::operator*=(const PAdic& o) {
  if (o.p_ != p_) throw DegenerateParams("p-adic numbers with different primes");
  if (is_zero() || o.is_zero()) {
    long prec = std::min(kExact, valuation() + o.valuation());
    return *this = zero(p_, prec);
  }
  long rel = std::min(prec_ - v_, o.prec_ - o.v_);
  long v = v_ + o.v_;
  *this = PAdic(p_, v, unit_ * o.unit_, v + rel);
  return *this;
}

PAdic PAdic::inverse() const {
  if (is_zero()) {
    if (prec_ >= kExact) throw ZeroDivisor("inverse of p-adic zero");
    throw PrecisionExhausted("inverse of a p-adic value with no known digits");
  }
  long rel = prec_ - v_;
  return PAdic(p_, -v_, inv_mod(unit_, ipow(p_, rel)), -v_ + rel);
}

PAdic PAdic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  PAdic r = from_rational(Rational(1), p_, std::max<long>(1, relative_precision()));
  if (is_zero() && e > 0) return zero(p_, std::min(kExact, prec_ * e));
  PAdic b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string PAdic::to_string() const {
  std::string tail = prec_ >= kExact ? "" : " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
  if (is_zero()) return prec_ >= kExact ? "0" : "O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
  std::string head = v_ == 0 ? "" : std::to_string(p_) + "^" + std::to_string(v_) + " * ";
  return head + unit_.get_str() + tail;
}

PAdic teichmuller(long a, long p, long N) {
  require_odd_prime(p);
  if (N < 1) throw PrecisionExhausted("precision must be positive");
  if (mod_floor(a, p) == 0) throw NotCoprime("Teichmueller character needs gcd(a, p) = 1");
  BigInt mod = ipow(p, N);
  BigInt x = mod_pos(BigInt(a), mod);
  for (long i = 0; i < N; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
  return PAdic::from_rational(Rational(x), p, N);
}

PAdic teichmuller_power(long a, long e, long p, long N) { return teichmuller(a, p, N).pow(e); }

PAdic padic_log(const PAdic& x) {
  const long p = x.prime();
  if (x.is_zero() || x.valuation() != 0) throw OutOfDomain("p-adic log needs x = 1 mod p");
  PAdic one = PAdic::from_rational(Rational(1), p, x.precision() + 1);
  PAdic y = x - one;
  long target = x.precision();
  if (y.is_zero()) return PAdic::zero(p, target);
  long w = y.valuation();
  if (w < 1) throw OutOfDomain("p-adic log needs x = 1 mod p");
  PAdic sum = PAdic::zero(p);
  PAdic yk = y;
  for (long k = 1;; ++k) {
    double lower = static_cast<double>(k * w) - std::log(static_cast<double>(k)) / std::log(static_cast<double>(p));
    if (k > 1 && lower >= static_cast<double>(target) + 1) break;
    PAdic term = yk * PAdic::from_rational(Rational(1, k), p, target + 2);
    if (k % 2 == 0) sum -= term;
    else sum += term;
    yk *= y;
  }
  return sum.with_precision(target);
}

PAdic padic_exp(const PAdic& x) {
  const long p = x.prime();
  long target = x.precision();
  PAdic one = PAdic::from_rational(Rational(1), p, std::min(PAdic::kExact / 2, target + 1));
  if (x.is_zero()) return one.with_precision(target);
  long v = x.valuation();
  if (v < 1) throw OutOfDomain("p-adic exp needs v_p(x) >= 1");
  PAdic sum = one;
  PAdic term = one;
  for (long k = 1;; ++k) {
    double lower = static_cast<double>(k * v) - static_cast<double>(k - 1) / static_cast<double>(p - 1);
    if (lower >= static_cast<double>(target) + 1) break;
    term = term * x * PAdic::from_rational(Rational(1, k), p, target + 2);
    sum += term;
  }
  return sum.with_precision(target);
}

PAdic volkenborn(const VolkenbornIntegrand& g, long level, long prec, bool q_weighted) {
  const long p = g.q.prime();
  require_odd_prime(p);
  if (level < 0) throw DegenerateParams("level must be >= 0");
  long denom_loss = 0;
  for (const auto& c : g.poly)
    if (!c.is_zero()) denom_loss = std::max(denom_loss, -padic_valuation(c, p));
  const long W = prec + level + denom_loss + 4;
  if ((g.h != 0 || q_weighted) && (g.q.is_zero() || g.q.valuation() != 0))
    throw OutOfDomain("Volkenborn integrand needs q = 1 mod p");
  if (g.h != 0 || q_weighted) {
    if (!(g.q - PAdic::from_rational(Rational(1), p, W)).is_zero() &&
        (g.q - PAdic::from_rational(Rational(1), p, W)).valuation() < 1)
      throw OutOfDomain("Volkenborn integrand needs q = 1 mod p");
  }
  PAdic one = PAdic::from_rational(Rational(1), p, W);
  PAdic qh = g.h == 0 ? one : g.q.with_precision(W).pow(g.h);
  PAdic qw = g.q.with_precision(W);
  PAdic cur = one, curw = one;
  PAdic sum = PAdic::zero(p);
  BigInt count = ipow(p, level);
  long n = count.get_si();
  for (long x = 0; x < n; ++x) {
    Rational val(0);
    for (auto it = g.poly.rbegin(); it != g.poly.rend(); ++it) val = val * Rational(x) + *it;
    if (!val.is_zero()) {
      PAdic term = PAdic::from_rational(val, p, W) * cur;
      if (q_weighted) term *= curw;
      sum += term;
    }
    if (g.h != 0) cur *= qh;
    if (q_weighted) curw *= qw;
  }
  PAdic denom = q_weighted ? (curw - one) / (qw - one) : PAdic::from_rational(Rational(count), p, W);
  return (sum / denom).with_precision(prec);
}

std::vector<PAdic> padic_hq_bernoulli_numbers(int n, long h, const PAdic& q, const PAdic& L) {
  if (n < 0) throw DegenerateParams("n must be >= 0");
  if (h == 0) throw DegenerateParams("h = 0 with zeta = 1");
  const long p = q.prime();
  long W = std::max(q.precision(), L.precision());
  PAdic one = PAdic::from_rational(Rational(1), p, W);
  std::vector<PAdic> b;
  if ((q - one).is_zero()) {
    // q = 1 to working precision: the classical Bernoulli numbers
    for (const auto& c : bernoulli_numbers(n)) b.push_back(c.is_zero() ? PAdic::zero(p) : PAdic::from_rational(c, p, W));
    return b;
  }
  PAdic w = q.pow(h);
  PAdic dinv = (w - one).inverse();
  b.push_back(PAdic::from_rational(Rational(h), p, W) * L * dinv);
  for (int m = 1; m <= n; ++m) {
    PAdic s = PAdic::zero(p);
    for (int k = 0; k < m; ++k) s += PAdic::from_rational(Rational(binomial(m, k)), p, W) * b[static_cast<std::size_t>(k)];
    PAdic rhs = (m == 1 ? one : PAdic::zero(p)) - w * s;
    b.push_back(rhs * dinv);
  }
  return b;
}

namespace {

PAdic appell(const std::vector<PAdic>& b, int n, const Rational& x, long p, long W) {
  PAdic s = PAdic::zero(p);
  PAdic xp = PAdic::from_rational(Rational(1), p, W);
  PAdic xv = x.is_zero() ? PAdic::zero(p) : PAdic::from_rational(x, p, W);
  for (int k = n; k >= 0; --k) {
    s += PAdic::from_rational(Rational(binomial(n, k)), p, W) * b[static_cast<std::size_t>(k)] * xp;
    xp *= xv;
  }
  return s;
}

long working(const PAdic& q, const PAdic& L) { return std::max(q.precision(), L.precision()); }

}  // namespace

PAdic padic_hq_bernoulli_poly(int n, long h, const PAdic& q, const PAdic& L, const Rational& x) {
  auto b = padic_hq_bernoulli_numbers(n, h, q, L);
  return appell(b, n, x, q.prime(), working(q, L));
}

PAdic padic_hq_bernoulli_char(int n, long h, const PAdic& q, const PAdic& L, int i, const Rational& x) {
  const long p = q.prime();
  const long f = p;
  const long W = working(q, L);
  PAdic Ff = PAdic::from_rational(Rational(f), p, W);
  auto bf = padic_hq_bernoulli_numbers(n, h, q.pow(f), Ff * L);
  PAdic qh = q.pow(h);
  PAdic s = PAdic::zero(p);
  for (long j = 1; j <= f; ++j) {
    if (j % p == 0) continue;
    PAdic chi = teichmuller_power(j, i, p, W);
    s += chi * qh.pow(j) * appell(bf, n, (Rational(j) + x) / Rational(f), p, W);
  }
  return PAdic::from_rational(Rational(f).pow(n - 1), p, W) * s;
}

PAdic evaluate_padic(const LogPolynomial& f, const PAdic& q, const PAdic& L) {
  const long p = q.prime();
  const long W = working(q, L);
  auto eval = [&](const QPoly& poly) {
    PAdic acc = PAdic::zero(p);
    for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
      if (!it->is_rational()) throw OutOfDomain("p-adic evaluation needs rational coefficients (zeta = 1)");
      const Rational& c = it->rational();
      acc = acc * q + (c.is_zero() ? PAdic::zero(p) : PAdic::from_rational(c, p, W));
    }
    return acc;
  };
  PAdic s = PAdic::zero(p);
  for (const auto& [d, c] : f.coeffs()) s += eval(c.numerator()) / eval(c.denominator()) * L.pow(d);
  return s;
}

PAdicResidual witt_residual(int n, long h, const PAdic& q, long level, long prec) {
  const long p = q.prime();
  require_odd_prime(p);
  const long W = prec + 2 * n + 12;
  PAdic qw = q.with_precision(W);
  if (qw.is_zero() || qw.valuation() != 0 || (qw - PAdic::from_rational(Rational(1), p, W)).valuation() < 1)
    throw OutOfDomain("q must be 1 mod p");
  std::vector<Rational> poly(static_cast<std::size_t>(n + 1), Rational(0));
  poly[static_cast<std::size_t>(n)] = Rational(1);
  PAdic lhs = volkenborn({poly, qw, h}, level, prec);
  PAdic rhs = padic_hq_bernoulli_numbers(n, h, qw, padic_log(qw))[static_cast<std::size_t>(n)].with_precision(prec);
  return {lhs, rhs, lhs - rhs, 0};
}

namespace {

void check_dedekind_params(long a, long b, long p) {
  require_odd_prime(p);
  if (b < 1) throw DegenerateParams("b must be positive");
  if (b % p != 0) throw BadModulus("p must divide b");
  if (gcd_long(a, b) != 1) throw NotCoprime("gcd(a, b) must be 1");
}

PAdic finish(const PAdic& v, long prec) {
  if (v.precision() < prec) throw PrecisionExhausted("p-adic precision lost below the requested level");
  return v.with_precision(prec);
}

}  // namespace

PAdic padic_dedekind(int m, long a, long b, long h, const PAdic& q, long prec) {
  const long p = q.prime();
  check_dedekind_params(a, b, p);
  const long W = prec + 2 * m + 12;
  PAdic qw = q.with_precision(W);
  auto bn = padic_hq_bernoulli_numbers(m, h, qw, padic_log(qw));
  PAdic s = PAdic::zero(p);
  for (long j = 1; j < b; ++j)
    s += PAdic::from_rational(Rational(j, b), p, W) * appell(bn, m, Rational(j * a, b).frac(), p, W);
  return finish(s, prec);
}

PAdic interpolant_T(const PAdic& s, long j, long b, long h, const PAdic& q, long K, long prec,
                    std::optional<int> chi_power) {
  const long p = q.prime();
  require_odd_prime(p);
  if (b % p != 0) throw BadModulus("p must divide b");
  if (mod_floor(j, p) == 0) throw NotCoprime("interpolant needs gcd(j, p) = 1");
  if (K < 1) throw DegenerateParams("series cutoff K must be >= 1");
  const long W = prec + 2 * K + 16;
  PAdic qw = q.with_precision(W);
  PAdic L = padic_log(qw);
  std::vector<PAdic> bk;
  if (chi_power) {
    for (long k = 0; k <= K; ++k) bk.push_back(padic_hq_bernoulli_char(static_cast<int>(k), h, qw, L, *chi_power, Rational(0)));
  } else {
    bk = padic_hq_bernoulli_numbers(static_cast<int>(K), h, qw, L);
  }
  PAdic winv = teichmuller_power(j, -1, p, W);
  PAdic jj = PAdic::from_rational(Rational(j), p, W);
  PAdic bracket = jj * winv;
  PAdic sw = s.with_precision(W);
  PAdic power = padic_exp(sw * padic_log(bracket));
  PAdic ratio = PAdic::from_rational(Rational(b, j), p, W);
  PAdic one = PAdic::from_rational(Rational(1), p, W);
  PAdic binom = one, rk = one;
  PAdic sum = PAdic::zero(p);
  for (long k = 0; k <= K; ++k) {
    if (k > 0) {
      binom = binom * (sw - PAdic::from_rational(Rational(k - 1), p, W).with_precision(W)) *
              PAdic::from_rational(Rational(1, k), p, W);
      rk *= ratio;
    }
    sum += binom * rk * bk[static_cast<std::size_t>(k)];
  }
  PAdic binv = PAdic::from_rational(Rational(1, b), p, W);
  return (winv * power * binv * sum).with_precision(prec);
}

PAdicResidual th13_residual(int m, long a, long b, long h, const PAdic& q, long N, long K) {
  const long p = q.prime();
  check_dedekind_params(a, b, p);
  if (m < 0 || (m + 1) % (p - 1) != 0) throw CongruenceViolation("m + 1 must be divisible by p - 1");
  const long W = N + 2 * std::max<long>(m, K) + 16;
  PAdic qw = q.with_precision(W);
  PAdic L = padic_log(qw);
  auto bn = padic_hq_bernoulli_numbers(m, h, qw, L);
  PAdic s = PAdic::from_rational(Rational(m), p, W);
  PAdic bm1 = PAdic::from_rational(Rational(b).pow(m - 1), p, W);
  PAdicResidual r;
  PAdic lhs = PAdic::zero(p);
  for (long j = 1; j < b; ++j) {
    long r_aj = mod_floor(a * j, b);
    PAdic t;
    if (r_aj % p == 0) {
      t = bm1 * appell(bn, m, Rational(r_aj, b), p, W);
      ++r.exact_terms;
    } else {
      t = interpolant_T(s, r_aj, b, h, qw, K, W - 4);
    }
    lhs += PAdic::from_rational(Rational(j), p, W) * t;
  }
  PAdic rhs = PAdic::from_rational(Rational(b).pow(m), p, W) * padic_dedekind(m, a, b, h, qw, N + 4);
  r.lhs = lhs.with_precision(N);
  r.rhs = rhs.with_precision(N);
  r.residual = (lhs - rhs).with_precision(N);
  return r;
}

PAdicResidual th19_residual(int m, long a, long b, long h, const PAdic& q, long N, long K, int i) {
  const long p = q.prime();
  check_dedekind_params(a, b, p);
  if (m < 0 || (m + 1) % (p - 1) != 0) throw CongruenceViolation("m + 1 must be divisible by p - 1");
  const long f = p;
  const long W = N + 2 * std::max<long>(m, K) + 16;
  PAdic qw = q.with_precision(W);
  PAdic L = padic_log(qw);
  PAdic s = PAdic::from_rational(Rational(m), p, W);
  PAdic lhs = PAdic::zero(p), sum = PAdic::zero(p);
  for (long j = 1; j < f * b; ++j) {
    if (j % p == 0) continue;
    PAdic chi = teichmuller_power(j, i, p, W);
    PAdic jj = PAdic::from_rational(Rational(j), p, W);
    long r_aj = mod_floor(a * j, b);
    lhs += jj * chi * interpolant_T(s, r_aj, b, h, qw, K, W - 4, i);
    sum += chi * PAdic::from_rational(Rational(j, f * b), p, W) *
           padic_hq_bernoulli_char(m, h, qw, L, i, Rational(a * j, b).frac());
  }
  PAdic rhs = PAdic::from_rational(Rational(f) * Rational(b).pow(m), p, W) * sum;
  PAdicResidual r;
  r.lhs = lhs.with_precision(N);
  r.rhs = rhs.with_precision(N);
  r.residual = (lhs - rhs).with_precision(N);
  return r;
}

}  // namespace reciplab
