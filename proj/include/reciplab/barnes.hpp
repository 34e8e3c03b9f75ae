#pragma once

#include <vector>

#include "reciplab/cyclotomic.hpp"
#include "reciplab/egf.hpp"

namespace reciplab {

// n! [t^n] prod_j (1 - u^{a_j}) / (e^{a_j t} - u^{a_j}) * e^{x t}.
Scalar barnes_fe(const std::vector<long>& a, const Scalar& u, const Scalar& x, int n);

// The same product as a series, truncated at `order`.
EgfSeries<Scalar> barnes_fe_series(const std::vector<long>& a, const Scalar& u, const Scalar& x, int order);

}  // namespace reciplab
