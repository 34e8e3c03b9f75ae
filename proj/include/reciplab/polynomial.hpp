#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "reciplab/errors.hpp"

namespace reciplab {

// Dense univariate polynomial over a field F, coefficients stored lowest
// degree first with no trailing zeros (the zero polynomial is empty).
//
// F must provide +, -, *, /, unary -, is_zero() and construction from int.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Polynomial(const F& constant) : c_{constant} { trim(); }

  static Polynomial monomial(const F& coeff, std::size_t degree) {
    std::vector<F> c(degree + 1, F(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(F(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& leading() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  template <class S>
  S evaluate(const S& point) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + S(*it);
    return acc;
  }

  // p(x) -> p(x^e)
  Polynomial substitute_power(std::size_t e) const {
    if (c_.empty() || e == 1) return *this;
    std::vector<F> r((c_.size() - 1) * e + 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<int>(i));
    return Polynomial(std::move(r));
  }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    F inv = F(1) / c_.back();
    return *this * inv;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const F& s) {
    if (s.is_zero()) return {};
    for (auto& v : a.c_) v = v * s;
    return a;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw ZeroDivisor("polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial{}, *this};
    std::vector<F> rem = c_;
    std::vector<F> quo(c_.size() - d.c_.size() + 1, F(0));
    F lead_inv = F(1) / d.leading();
    for (long i = static_cast<long>(rem.size()) - 1; i >= d.degree(); --i) {
      if (rem[i].is_zero()) continue;
      F factor = rem[i] * lead_inv;
      std::size_t shift = static_cast<std::size_t>(i - d.degree());
      quo[shift] = factor;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] = rem[shift + j] - factor * d.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
    return true;
  }

  // Rendering in the variable `var`, coefficients via their to_string().
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string cs = c_[i].to_string();
      bool compound = cs.find_first_of("+ ") != std::string::npos;
      if (i == 0) {
        out += cs;
        continue;
      }
      if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

// Monic greatest common divisor.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// Extended gcd: returns {g, s, t} with s*a + t*b = g, g monic.
template <class F>
struct ExtendedGcd {
  Polynomial<F> g, s, t;
};

template <class F>
ExtendedGcd<F> poly_xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F> r0 = a, r1 = b;
  Polynomial<F> s0(F(1)), s1, t0, t1(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace reciplab
