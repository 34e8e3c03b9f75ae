#pragma once

#include <cstddef>
#include <vector>

#include "reciplab/errors.hpp"
#include "reciplab/rational.hpp"

namespace reciplab {

// Truncated exponential generating function sum_{n<=N} c_n t^n / n!.
// The truncation order is always chosen by the caller.
template <class T>
class EgfSeries {
 public:
  explicit EgfSeries(std::size_t order) : c_(order + 1, T(0)) {}
  explicit EgfSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw OrderMismatch("EGF series needs at least one coefficient");
  }

  static EgfSeries identity(std::size_t order) {
    EgfSeries s(order);
    s.c_[0] = T(1);
    return s;
  }
  // e^{x t}
  static EgfSeries exponential(const T& x, std::size_t order) {
    EgfSeries s(order);
    T p(1);
    for (std::size_t n = 0; n <= order; ++n) {
      s.c_[n] = p;
      p = p * x;
    }
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t n) const { return c_[n]; }
  T& operator[](std::size_t n) { return c_[n]; }
  const std::vector<T>& coeffs() const { return c_; }

  // Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}.
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) throw OrderMismatch("EGF product of series with different truncation orders");
    EgfSeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
      T acc(0);
      for (std::size_t k = 0; k <= n; ++k) {
        if (a.c_[k].is_zero() || b.c_[n - k].is_zero()) continue;
        acc = acc + T(Rational(binomial(static_cast<long>(n), static_cast<long>(k)))) * a.c_[k] * b.c_[n - k];
      }
      r.c_[n] = acc;
    }
    return r;
  }

  friend bool operator==(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  std::vector<T> c_;
};

}  // namespace reciplab
