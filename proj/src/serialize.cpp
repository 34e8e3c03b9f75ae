#include "reciplab/serialize.hpp"

#include <cctype>

namespace reciplab {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.to_string());
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Json to_json(const PAdic& x) {
  Json prec = x.precision() >= PAdic::kExact ? Json(nullptr) : Json(x.precision());
  return Json{{"p", x.prime()}, {"valuation", x.is_zero() ? Json(nullptr) : Json(x.valuation())},
              {"unit", x.unit().get_str()}, {"precision", prec}};
}

Json to_json(const LogPolynomial& f) {
  Json out = Json::object();
  for (const auto& [d, c] : f.coeffs()) out[std::to_string(d)] = c.to_string();
  return out;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string");
  return Rational::parse(j.get<std::string>());
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string()) return Cyclotomic(rational_from_json(j));
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs")) throw ParseError("cyclotomic needs conductor and coeffs");
  std::vector<Rational> raw;
  for (const auto& c : j.at("coeffs")) raw.push_back(rational_from_json(c));
  return Cyclotomic::normalize(j.at("conductor").get<long>(), raw);
}

PAdic padic_from_json(const Json& j) {
  long p = j.at("p").get<long>();
  long prec = j.at("precision").is_null() ? PAdic::kExact : j.at("precision").get<long>();
  BigInt unit(j.at("unit").get<std::string>());
  if (unit == 0) return PAdic::zero(p, prec);
  return PAdic::from_parts(p, j.at("valuation").get<long>(), unit, prec);
}

std::string to_text(const Cyclotomic& c) { return c.to_string(); }

Cyclotomic parse_scalar(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  bool neg = false;
  std::string body = s;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body = body.substr(1);
  }
  if (body.rfind("zeta", 0) == 0) {
    auto caret = body.find('^');
    try {
      long m = std::stol(body.substr(4, caret == std::string::npos ? std::string::npos : caret - 4));
      long k = caret == std::string::npos ? 1 : std::stol(body.substr(caret + 1));
      if (m < 1) throw ParseError("root of unity order must be positive");
      Cyclotomic z = Cyclotomic::root_of_unity(m, k);
      return neg ? -z : z;
    } catch (const std::logic_error&) {
      throw ParseError("not a scalar: '" + text + "'");
    }
  }
  return Cyclotomic(Rational::parse(s));
}

}  // namespace reciplab
