#pragma once

#include <string>

#include <json.hpp>

#include "reciplab/cyclotomic.hpp"
#include "reciplab/hq_bernoulli.hpp"
#include "reciplab/padic.hpp"

namespace reciplab {

using Json = nlohmann::ordered_json;

// "num/den", den omitted when 1
Json to_json(const Rational& r);
// {"conductor": m, "coeffs": [Rational strings]}
Json to_json(const Cyclotomic& c);
// {"p", "valuation", "unit" (decimal string), "precision"}; exact zero has precision null
Json to_json(const PAdic& x);
// {"<L degree>": "<rational function of q>"}
Json to_json(const LogPolynomial& f);

Rational rational_from_json(const Json& j);
Cyclotomic cyclotomic_from_json(const Json& j);
PAdic padic_from_json(const Json& j);

// Plain text form for single computations: a rational stays "num/den", a
// cyclotomic value prints in powers of z<m>.
std::string to_text(const Cyclotomic& c);

// Scalar input: a rational "a/b", or "zeta<m>" / "zeta<m>^<k>" with an
// optional leading '-'.
Cyclotomic parse_scalar(const std::string& text);

}  // namespace reciplab
