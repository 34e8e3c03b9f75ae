#include "reciplab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace reciplab {
namespace {

struct CycloTables {
  long m = 1;
  long phi = 1;
  std::vector<long> poly;                  // Phi_m
  std::vector<std::vector<long>> pow_mod;  // x^k mod Phi_m, k = 0..m-1
};

std::vector<long> int_poly_divexact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  std::size_t dn = den.size() - 1;
  std::vector<long> quo(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long f = num[i];
    if (f == 0) continue;
    quo[i - dn] = f;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= f * den[j];
  }
  return quo;
}

std::vector<long> compute_phi_poly(long m) {
  std::vector<long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) num = int_poly_divexact(num, cyclotomic_polynomial(d));
  return num;
}

std::shared_ptr<const CycloTables> build_tables(long m);

std::shared_ptr<const CycloTables> tables(long m) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const CycloTables>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto t = build_tables(m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(t)).first->second;
}

std::shared_ptr<const CycloTables> build_tables(long m) {
  auto t = std::make_shared<CycloTables>();
  t->m = m;
  t->poly = m == 1 ? std::vector<long>{-1, 1} : compute_phi_poly(m);
  t->phi = static_cast<long>(t->poly.size()) - 1;
  auto phi = static_cast<std::size_t>(t->phi);
  t->pow_mod.assign(static_cast<std::size_t>(m), std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (long k = 0; k < m; ++k) {
    t->pow_mod[static_cast<std::size_t>(k)] = cur;
    // multiply by x, reduce the overflow coefficient with Phi_m (monic)
    long top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * t->poly[i];
  }
  return t;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long m) {
  if (m < 1) throw DegenerateParams("cyclotomic polynomial needs m >= 1");
  return tables(m)->poly;
}

long euler_phi(long m) {
  long r = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

Cyclotomic Cyclotomic::normalize(long m, const std::vector<Rational>& raw) {
  if (m < 1) throw DegenerateParams("conductor must be >= 1");
  auto t = tables(m);
  auto phi = static_cast<std::size_t>(t->phi);
  std::vector<Rational> out(phi, Rational(0));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].is_zero()) continue;
    const auto& row = t->pow_mod[i % static_cast<std::size_t>(m)];
    for (std::size_t j = 0; j < phi; ++j)
      if (row[j] != 0) out[j] += raw[i] * Rational(row[j]);
  }
  Cyclotomic r(m, std::move(out));
  r.collapse();
  return r;
}

Cyclotomic Cyclotomic::root_of_unity(long m, long k) {
  if (m < 1) throw DegenerateParams("root of unity order must be >= 1");
  k = mod_floor(k, m);
  std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, Rational(0));
  raw[static_cast<std::size_t>(k)] = Rational(1);
  return normalize(m, raw);
}

void Cyclotomic::collapse() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return;
  Rational v = c_[0];
  conductor_ = 1;
  c_.assign(1, v);
}

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const { return conductor_ == 1 && c_[0].is_one(); }

const Rational& Cyclotomic::rational() const {
  if (conductor_ != 1) throw DegenerateParams("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::embed(long target) const {
  if (target % conductor_ != 0) throw DegenerateParams("embedding target must be a multiple of the conductor");
  if (target == conductor_) return *this;
  long step = target / conductor_;
  auto t = tables(target);
  auto phi = static_cast<std::size_t>(t->phi);
  std::vector<Rational> out(phi, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& row = t->pow_mod[static_cast<std::size_t>(static_cast<long>(i) * step % target)];
    for (std::size_t j = 0; j < phi; ++j)
      if (row[j] != 0) out[j] += c_[i] * Rational(row[j]);
  }
  // No collapse: the caller asked for this conductor explicitly.
  return Cyclotomic(target, std::move(out));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  long m = lcm_long(conductor_, o.conductor_);
  if (m != conductor_) *this = embed(m);
  const Cyclotomic& b = o.conductor_ == m ? o : o.embed(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  collapse();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.conductor_ == 1) {
    if (o.c_[0].is_zero()) return *this = Cyclotomic();
    for (auto& v : c_) v *= o.c_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = c_[0];
    *this = o;
    if (s.is_zero()) return *this = Cyclotomic();
    for (auto& v : c_) v *= s;
    return *this;
  }
  long m = lcm_long(conductor_, o.conductor_);
  Cyclotomic a = conductor_ == m ? *this : embed(m);
  Cyclotomic b = o.conductor_ == m ? o : o.embed(m);
  std::vector<Rational> raw(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return *this = normalize(m, raw);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ZeroDivisor("inverse of zero in cyclotomic field");
  if (conductor_ == 1) return Cyclotomic(c_[0].inverse());
  std::vector<Rational> phi;
  for (long v : cyclotomic_polynomial(conductor_)) phi.emplace_back(v);
  Polynomial<Rational> modulus(std::move(phi));
  Polynomial<Rational> z(c_);
  auto eg = poly_xgcd(z, modulus);
  if (eg.g.degree() != 0) throw ZeroDivisor("element shares a factor with Phi_m");
  return normalize(conductor_, eg.s.coeffs());
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::galois(long j) const {
  if (conductor_ == 1) return *this;
  if (gcd_long(j, conductor_) != 1) throw DegenerateParams("galois exponent must be coprime to the conductor");
  std::vector<Rational> raw(static_cast<std::size_t>(conductor_), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    raw[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * j, conductor_))] += c_[i];
  return normalize(conductor_, raw);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.c_ == b.c_;
  return (a - b).is_zero();
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return c_[0].to_string();
  std::string out;
  std::string z = "z" + std::to_string(conductor_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].to_string();
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string var = z + (i > 1 ? "^" + std::to_string(i) : "");
      if (cs == "1") term = var;
      else if (cs == "-1") term = "-" + var;
      else term = cs + "*" + var;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace reciplab
