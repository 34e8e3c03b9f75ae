#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "reciplab/barnes.hpp"
#include "reciplab/characters.hpp"
#include "reciplab/dedekind.hpp"
#include "reciplab/hardy.hpp"
#include "reciplab/hq_bernoulli.hpp"
#include "reciplab/lerch.hpp"
#include "reciplab/padic.hpp"

namespace reciplab::cli {

namespace {

using Point = std::vector<std::pair<std::string, std::string>>;
using Evaluator = std::function<std::vector<Report>(const Point&)>;

struct TheoremDef {
  std::vector<std::pair<std::string, std::string>> keys;  // key, default values
  std::vector<std::string> optional;                     // keys without a default
  Evaluator eval;
};

const std::string& get(const Point& pt, const std::string& key) {
  for (const auto& [k, v] : pt)
    if (k == key) return v;
  throw ConfigError("missing parameter '" + key + "'");
}

bool has(const Point& pt, const std::string& key) {
  for (const auto& kv : pt)
    if (kv.first == key) return true;
  return false;
}

long as_long(const Point& pt, const std::string& key) {
  const auto& s = get(pt, key);
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("parameter '" + key + "' must be an integer, got '" + s + "'");
  }
}

int as_int(const Point& pt, const std::string& key) { return static_cast<int>(as_long(pt, key)); }

Rational as_rational(const Point& pt, const std::string& key) {
  try {
    return Rational::parse(get(pt, key));
  } catch (const ParseError&) {
    throw ConfigError("parameter '" + key + "' must be rational, got '" + get(pt, key) + "'");
  }
}

Scalar as_scalar(const Point& pt, const std::string& key) {
  try {
    return parse_scalar(get(pt, key));
  } catch (const Error&) {
    throw ConfigError("parameter '" + key + "' must be a scalar, got '" + get(pt, key) + "'");
  }
}

std::vector<long> as_vector(const Point& pt, const std::string& key) {
  std::vector<long> out;
  const auto& s = get(pt, key);
  std::size_t start = 0;
  while (start <= s.size()) {
    auto colon = s.find(':', start);
    std::string item = s.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
    try {
      out.push_back(std::stol(item));
    } catch (const std::logic_error&) {
      throw ConfigError("parameter '" + key + "' must be integers separated by ':', got '" + s + "'");
    }
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  return out;
}

Json params_json(const Point& pt) {
  Json j = Json::object();
  for (const auto& [k, v] : pt) j[k] = v;
  return j;
}

Report exact_report(const std::string& id, const Json& params, const Scalar& lhs, const Scalar& rhs) {
  Scalar res = lhs - rhs;
  return {id, params, to_json(lhs), to_json(rhs), to_json(res), res.is_zero() ? "pass" : "fail", nullptr, 0};
}

Report rational_report(const std::string& id, const Json& params, const Rational& lhs, const Rational& rhs) {
  return exact_report(id, params, Scalar(lhs), Scalar(rhs));
}

Report pole_report(const std::string& id, const Json& params) {
  return {id, params, nullptr, nullptr, nullptr, "skipped-pole", nullptr, 0};
}

Report padic_report(const std::string& id, const Json& params, const PAdicResidual& r, long bound) {
  long v = r.residual.valuation();
  Json extra = {{"valuation", v}, {"bound", bound}};
  if (r.exact_terms > 0) extra["exact_terms"] = r.exact_terms;
  return {id, params, to_json(r.lhs), to_json(r.rhs), to_json(r.residual), v >= bound ? "pass" : "fail", extra, 0};
}

PAdic padic_q(const Point& pt, long p, long rel) {
  Rational q = has(pt, "q") ? as_rational(pt, "q") : Rational(1 + p);
  if (q.is_zero()) throw ConfigError("q must be 1 mod p");
  return PAdic::from_rational(q, p, rel);
}

long padic_prime(const Point& pt) {
  long p = has(pt, "p") ? as_long(pt, "p") : 5;
  if (p < 3 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 25) == 0) throw ConfigError("p must be an odd prime");
  return p;
}

std::vector<Report> eval_th11(const Point& pt) {
  long h = as_long(pt, "h"), k = as_long(pt, "k");
  if (h < 1 || k < 1 || gcd_long(h, k) != 1) return {};
  try {
    auto r = th11_residual(as_int(pt, "n"), h, k, as_scalar(pt, "u"));
    return {exact_report("th11", params_json(pt), r.lhs, r.rhs)};
  } catch (const PoleAtOne&) {
    return {pole_report("th11", params_json(pt))};
  }
}

std::vector<Report> eval_th4(const Point& pt) {
  long h = as_long(pt, "h"), k = as_long(pt, "k");
  if (h < 1 || k < 1 || gcd_long(h, k) != 1) return {};
  int n = as_int(pt, "n");
  Scalar u = as_scalar(pt, "u");
  std::vector<long> moduli;
  if (has(pt, "f")) {
    long f = as_long(pt, "f");
    if (f >= 1 && (h * k) % f == 0) moduli.push_back(f);
  } else {
    for (long f = 1; f <= std::min<long>(h * k, 12); ++f)
      if ((h * k) % f == 0) moduli.push_back(f);
  }
  std::vector<Report> out;
  for (long f : moduli) {
    auto chars = enumerate_characters(f);
    for (const auto& chi : chars) {
      if (has(pt, "chi") && chi.index() != as_long(pt, "chi")) continue;
      Json params = params_json(pt);
      params["f"] = std::to_string(f);
      params["chi"] = std::to_string(chi.index());
      try {
        auto r = th4_residual(n, h, k, u, chi);
        out.push_back(exact_report("th4", params, r.lhs, r.rhs));
      } catch (const PoleAtOne&) {
        out.push_back(pole_report("th4", params));
      }
    }
  }
  return out;
}

std::vector<Report> eval_twisted(const Point& pt) {
  long h = as_long(pt, "h"), k = as_long(pt, "k");
  if (h < 1 || k < 1 || gcd_long(h, k) != 1 || h * k <= 2) return {};
  int n = as_int(pt, "n");
  std::vector<long> ds;
  if (has(pt, "d")) {
    long d = as_long(pt, "d");
    if (d > 1 && (h * k - 1) % d == 0) ds.push_back(d);
  } else {
    for (long d = 2; d <= h * k - 1; ++d)
      if ((h * k - 1) % d == 0) ds.push_back(d);
  }
  std::vector<Report> out;
  for (long d : ds)
    for (const auto& e : twisted_residuals(n, h, k, d)) {
      Json params = params_json(pt);
      params["d"] = std::to_string(d);
      params["law"] = e.law;
      params["j"] = std::to_string(e.zeta_exponent);
      if (e.law == "th4") {
        params["f"] = std::to_string(e.chi_modulus);
        params["chi"] = std::to_string(e.chi_index);
      }
      if (e.skipped || !e.result) out.push_back(pole_report("twisted", params));
      else out.push_back(exact_report("twisted", params, e.result->lhs, e.result->rhs));
    }
  return out;
}

std::vector<Report> eval_th20(const Point& pt) {
  int n = as_int(pt, "n");
  Rational x = as_rational(pt, "x");
  Scalar u = as_scalar(pt, "u");
  auto a = as_vector(pt, "a");
  for (long aj : a)
    if (aj < 1) throw ConfigError("entries of a must be positive");
  try {
    Scalar factor(1);
    for (long aj : a) factor *= Scalar(1) - u.pow(-aj);
    Scalar lhs = factor * multiple_l_neg(n, x, u, a);
    Scalar rhs = barnes_fe(a, u, Scalar(x), n);
    return {exact_report("th20", params_json(pt), lhs, rhs)};
  } catch (const PoleAtOne&) {
    return {pole_report("th20", params_json(pt))};
  } catch (const ZeroDivisor&) {
    return {pole_report("th20", params_json(pt))};
  }
}

std::vector<Report> eval_distribution(const Point& pt) {
  auto r = distribution_residual(as_int(pt, "n"), as_long(pt, "h"), as_scalar(pt, "zeta"), as_rational(pt, "x"),
                                 as_long(pt, "m"));
  Report rep{"distribution", params_json(pt), nullptr, nullptr, to_json(r), r.is_zero() ? "pass" : "fail", nullptr, 0};
  return {rep};
}

std::vector<Report> eval_witt(const Point& pt) {
  long p = padic_prime(pt);
  int n = as_int(pt, "n");
  long level = as_long(pt, "level");
  if (level < 1) throw ConfigError("level must be positive");
  auto r = witt_residual(n, as_long(pt, "h"), padic_q(pt, p, level + 2 * n + 40), level, level + 8);
  long bound = level - padic_valuation(BigInt(n + 1), p) - 1;
  return {padic_report("witt", params_json(pt), r, bound)};
}

std::vector<Report> eval_th13(const Point& pt, bool character) {
  long p = padic_prime(pt);
  long a = as_long(pt, "a"), b = as_long(pt, "b");
  if (b < 1 || gcd_long(a, b) != 1 || b % p != 0) return {};
  int m = as_int(pt, "m");
  long N = as_long(pt, "N"), K = as_long(pt, "K");
  PAdic q = padic_q(pt, p, N + 2 * std::max<long>(m, K) + 40);
  long h = as_long(pt, "h");
  long bound = std::min(N, K) - 2;
  if (character) return {padic_report("th19", params_json(pt), th19_residual(m, a, b, h, q, N, K, as_int(pt, "i")), bound)};
  return {padic_report("th13", params_json(pt), th13_residual(m, a, b, h, q, N, K), bound)};
}

std::vector<Report> eval_apostol(const Point& pt) {
  int n = as_int(pt, "n");
  long h = as_long(pt, "h"), k = as_long(pt, "k");
  if (n < 1 || n % 2 == 0 || h < 1 || k < 1 || gcd_long(h, k) != 1) return {};
  auto r = apostol_reciprocity(n, h, k);
  return {rational_report("apostol", params_json(pt), r.lhs, r.rhs)};
}

std::vector<Report> eval_remark2(const Point& pt) {
  int n = as_int(pt, "n");
  long h = as_long(pt, "h"), k = as_long(pt, "k");
  if (h < 1 || k < 1 || h % 2 != 0 || k % 2 == 0 || gcd_long(h, k) != 1) return {};
  Report r = rational_report("remark2", params_json(pt), hb_sum(0, n, h, k), apostol_sum(n + 1, h, k));
  Rational second_l = hb_sum(1, n, h, k), second_r = apostol_sum(n + 1, h, 2 * k);
  r.extra = {{"second_lhs", second_l.to_string()}, {"second_rhs", second_r.to_string()},
             {"second_agrees", second_l == second_r}};
  return {r};
}

std::vector<Report> eval_m5(const Point& pt) {
  int n = as_int(pt, "n");
  long h = as_long(pt, "h"), k = as_long(pt, "k");
  if (h < 1 || k < 1 || k % 2 == 0 || gcd_long(h, k) != 1) return {};
  auto c = m5_check(n, h, k);
  return {rational_report("m5", params_json(pt), c.fe_pipeline, c.bernoulli_pipeline)};
}

const std::map<std::string, TheoremDef>& registry() {
  static const std::map<std::string, TheoremDef> defs = {
      {"th11", {{{"n", "0..2"}, {"h", "1..4"}, {"k", "1..4"}, {"u", "2"}}, {}, eval_th11}},
      {"th4", {{{"n", "0..2"}, {"h", "1..4"}, {"k", "1..4"}, {"u", "2"}}, {"f", "chi"}, eval_th4}},
      {"twisted", {{{"n", "1"}, {"h", "1..4"}, {"k", "1..4"}}, {"d"}, eval_twisted}},
      {"th20", {{{"n", "0..3"}, {"x", "0, 1/2"}, {"u", "2"}, {"a", "1, 1:2, 2:3"}}, {}, eval_th20}},
      {"distribution", {{{"n", "0..3"}, {"h", "1..2"}, {"zeta", "1, -1"}, {"x", "0, 1/2"}, {"m", "1..3"}}, {}, eval_distribution}},
      {"witt", {{{"p", "5"}, {"h", "1"}, {"n", "0..4"}, {"level", "1..3"}}, {"q"}, eval_witt}},
      {"th13",
       {{{"p", "5"}, {"m", "3"}, {"a", "1..4"}, {"b", "5"}, {"h", "1"}, {"N", "4"}, {"K", "4"}},
        {"q"},
        [](const Point& pt) { return eval_th13(pt, false); }}},
      {"th19",
       {{{"p", "5"}, {"m", "3"}, {"a", "1..4"}, {"b", "5"}, {"h", "1"}, {"N", "4"}, {"K", "4"}, {"i", "1..2"}},
        {"q"},
        [](const Point& pt) { return eval_th13(pt, true); }}},
      {"apostol", {{{"n", "1, 3, 5"}, {"h", "1..6"}, {"k", "1..6"}}, {}, eval_apostol}},
      {"remark2", {{{"n", "0..2"}, {"h", "2, 4"}, {"k", "1, 3, 5"}}, {}, eval_remark2}},
      {"m5", {{{"n", "0..2"}, {"h", "1..5"}, {"k", "1, 3, 5"}}, {}, eval_m5}},
  };
  return defs;
}

const TheoremDef& lookup(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw ConfigError("unknown theorem id '" + id + "'");
  return it->second;
}

bool integer_text(const std::string& s) {
  if (s.empty()) return false;
  for (std::size_t i = s[0] == '-' ? 1 : 0; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return s != "-";
}

// Integers ascending, other values in their given order, duplicates dropped.
std::vector<std::string> ordered(std::vector<std::string> v) {
  bool all_int = std::all_of(v.begin(), v.end(), integer_text);
  if (all_int) std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return BigInt(a) < BigInt(b); });
  std::vector<std::string> out;
  for (auto& s : v)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  return out;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"th11", "th4", "twisted", "th20", "distribution", "witt",
                                            "th13", "th19", "apostol", "remark2", "m5"};
  return ids;
}

Grid default_grid(const std::string& theorem) {
  const auto& def = lookup(theorem);
  Grid g;
  for (const auto& [k, v] : def.keys) apply_assignment(g, k + "=" + v);
  return g;
}

std::vector<Report> run_sweep(const std::string& theorem, const Grid& grid, unsigned jobs) {
  const auto& def = lookup(theorem);
  for (const auto& [k, v] : grid.entries) {
    bool known = std::any_of(def.keys.begin(), def.keys.end(), [&](const auto& e) { return e.first == k; }) ||
                 std::find(def.optional.begin(), def.optional.end(), k) != def.optional.end();
    if (!known) throw ConfigError("theorem '" + theorem + "' has no parameter '" + k + "'");
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  Grid defaults = default_grid(theorem);
  for (const auto& [k, v] : def.keys) axes.emplace_back(k, ordered(grid.has(k) ? grid.at(k) : defaults.at(k)));
  for (const auto& k : def.optional)
    if (grid.has(k)) axes.emplace_back(k, ordered(grid.at(k)));

  std::vector<Point> points;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    Point pt;
    for (std::size_t i = 0; i < axes.size(); ++i) pt.emplace_back(axes[i].first, axes[i].second[idx[i]]);
    points.push_back(std::move(pt));
    bool done = true;
    for (std::size_t i = axes.size(); i-- > 0;) {
      if (++idx[i] < axes[i].second.size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }

  std::vector<std::vector<Report>> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next++;
      if (i >= points.size()) return;
      try {
        auto t0 = std::chrono::steady_clock::now();
        results[i] = def.eval(points[i]);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        for (auto& r : results[i]) r.millis = ms / static_cast<double>(std::max<std::size_t>(1, results[i].size()));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<Report> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        std::string where;
        for (const auto& [k, v] : points[i]) where += " " + k + "=" + v;
        throw ConfigError("invalid grid point" + where + ": " + e.what());
      }
    }
    for (auto& r : results[i]) out.push_back(std::move(r));
  }
  return out;
}

Json report_json(const Report& r, bool timing) {
  Json j = {{"theorem", r.theorem}, {"params", r.params}, {"lhs", r.lhs}, {"rhs", r.rhs},
            {"residual", r.residual}, {"status", r.status}};
  if (!r.extra.is_null()) j["details"] = r.extra;
  if (timing) j["millis"] = r.millis;
  return j;
}

namespace {

std::string params_text(const Json& params, const std::string& sep) {
  std::string out;
  for (const auto& [k, v] : params.items()) {
    if (!out.empty()) out += sep;
    out += k + "=" + v.get<std::string>();
  }
  return out;
}

std::string residual_text(const Report& r) {
  if (r.residual.is_null()) return "";
  if (r.residual.is_object() && r.residual.contains("conductor")) return cyclotomic_from_json(r.residual).to_string();
  if (r.residual.is_object() && r.residual.contains("p")) return padic_from_json(r.residual).to_string();
  return r.residual.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv_header() { return "theorem,params,status,residual"; }

std::string report_csv(const Report& r) {
  return r.theorem + "," + csv_quote(params_text(r.params, ";")) + "," + r.status + "," + csv_quote(residual_text(r));
}

std::string report_text(const Report& r) {
  std::string line = r.theorem + " " + params_text(r.params, " ") + " : " + r.status;
  if (r.status == "fail") line += " residual=" + residual_text(r);
  if (!r.extra.is_null() && r.extra.contains("valuation"))
    line += " v=" + std::to_string(r.extra["valuation"].get<long>()) + " bound=" + std::to_string(r.extra["bound"].get<long>());
  if (!r.extra.is_null() && r.extra.contains("second_agrees") && !r.extra["second_agrees"].get<bool>())
    line += " second identity differs: " + r.extra["second_lhs"].get<std::string>() + " vs " +
            r.extra["second_rhs"].get<std::string>();
  return line;
}

}  // namespace reciplab::cli
