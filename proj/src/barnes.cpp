#include "reciplab/barnes.hpp"

#include "reciplab/classical.hpp"

namespace reciplab {

EgfSeries<Scalar> barnes_fe_series(const std::vector<long>& a, const Scalar& u, const Scalar& x, int order) {
  if (a.empty()) throw DegenerateParams("Barnes numbers need r >= 1");
  if (order < 0) throw DegenerateParams("order must be >= 0");
  auto ord = static_cast<std::size_t>(order);
  auto acc = EgfSeries<Scalar>::exponential(x, ord);
  for (long aj : a) {
    if (aj < 1) throw DegenerateParams("Barnes parameters a_j must be positive");
    Scalar ua = u.pow(aj);
    if (ua.is_one()) throw PoleAtOne("u^{a_j} = 1 in Barnes Frobenius-Euler number");
    auto h = fe_numbers(order, ua);
    EgfSeries<Scalar> f(ord);
    Rational ap(1);
    for (std::size_t m = 0; m <= ord; ++m) {
      f[m] = h[m] * Scalar(ap);
      ap *= Rational(aj);
    }
    acc = acc * f;
  }
  return acc;
}

Scalar barnes_fe(const std::vector<long>& a, const Scalar& u, const Scalar& x, int n) {
  return barnes_fe_series(a, u, x, n)[static_cast<std::size_t>(n)];
}

}  // namespace reciplab
