#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

#include "grid.hpp"
#include "reciplab/barnes.hpp"
#include "reciplab/characters.hpp"
#include "reciplab/classical.hpp"
#include "reciplab/dedekind.hpp"
#include "reciplab/hardy.hpp"
#include "reciplab/hq_bernoulli.hpp"
#include "reciplab/lerch.hpp"
#include "reciplab/padic.hpp"
#include "reciplab/serialize.hpp"
#include "sweep.hpp"

using namespace reciplab;

namespace {

struct Output {
  bool json = false;
  bool csv = false;
};

Output out_mode;

void emit(const Json& j, const std::string& text) {
  if (out_mode.json) std::cout << j.dump() << "\n";
  else std::cout << text << "\n";
}

void emit(const Scalar& v) { emit(to_json(v), to_text(v)); }
void emit(const Rational& v) { emit(to_json(v), v.to_string()); }
void emit(const PAdic& v) { emit(to_json(v), v.to_string()); }
void emit(const LogPolynomial& v) { emit(to_json(v), v.to_string()); }

Scalar scalar(const std::string& s) {
  try {
    return parse_scalar(s);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

Rational rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

std::vector<long> longs(const std::string& s) {
  std::vector<long> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = s.find(',', start);
    try {
      out.push_back(std::stol(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    } catch (const std::logic_error&) {
      throw ConfigError("expected comma separated integers, got '" + s + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

DirichletCharacter character(long f, long index) {
  try {
    return character_at(f, index);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

unsigned resolve_jobs(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("RECIPLAB_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
    throw ConfigError(std::string("RECIPLAB_JOBS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PAdic padic_q(const std::string& q, long p, long rel) {
  Rational r = q.empty() ? Rational(1 + p) : rational(q);
  if (r.is_zero()) throw ConfigError("q must be 1 mod p");
  return PAdic::from_rational(r, p, rel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius-Euler, Dedekind-type sums and reciprocity checks"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_flag("--json", out_mode.json, "JSON output");
  app.add_flag("--csv", out_mode.csv, "CSV output for sweeps");

  int n = 0, m = 0, i = 0, jobs = 0;
  long h = 1, k = 1, f = 1, chi = 0, a = 1, b = 1, p = 5, N = 4, K = 4, level = 1, prec = 10;
  std::string u = "2", x = "0", root = "-1", zeta = "1", avec = "1", q, poly = "0,1", variant = "S", grid_file;
  std::string s_re = "0", s_im = "0", tol = "1e-10";
  bool weighted = false, timing = false;
  std::vector<std::string> sets;

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n, or B_n(x) with --x");
  bern->add_option("--n", n)->required();
  auto* bern_x = bern->add_option("--x", x);

  auto* fen = app.add_subcommand("fe-number", "Frobenius-Euler number H_n(u)");
  fen->add_option("--n", n)->required();
  fen->add_option("--u", u)->required();
  auto* fep = app.add_subcommand("fe-poly", "Frobenius-Euler polynomial H_n(x, u)");
  fep->add_option("--n", n)->required();
  fep->add_option("--x", x)->required();
  fep->add_option("--u", u)->required();
  auto* fef = app.add_subcommand("fe-function", "Frobenius-Euler function, u^[x] H_n({x}, u)");
  fef->add_option("--n", n)->required();
  fef->add_option("--x", x)->required();
  fef->add_option("--u", u)->required();
  auto* cfe = app.add_subcommand("char-fe", "Character Frobenius-Euler number H_{n,chi}(u)");
  cfe->add_option("--n", n)->required();
  cfe->add_option("--f", f, "character modulus")->required();
  cfe->add_option("--chi", chi, "character index mod f");
  cfe->add_option("--u", u)->required();

  auto* bfe = app.add_subcommand("barnes-fe", "Barnes multiple Frobenius-Euler polynomial");
  bfe->add_option("--n", n)->required();
  bfe->add_option("--a", avec, "comma separated a_j")->required();
  bfe->add_option("--u", u)->required();
  bfe->add_option("--x", x);

  auto* ln = app.add_subcommand("l-neg", "l(-n, x, u) at a negative integer");
  ln->add_option("--n", n)->required();
  ln->add_option("--x", x)->required();
  ln->add_option("--u", u)->required();
  auto* lm = app.add_subcommand("l-multi", "Multiple l-function at -n");
  lm->add_option("--n", n)->required();
  lm->add_option("--x", x)->required();
  lm->add_option("--u", u)->required();
  lm->add_option("--a", avec, "comma separated a_j")->required();
  auto* lnum = app.add_subcommand("l-numeric", "Floating point series value of l(s, x, u) with error bound");
  lnum->add_option("--s-re", s_re);
  lnum->add_option("--s-im", s_im);
  lnum->add_option("--x", x)->required();
  lnum->add_option("--u", u)->required();
  lnum->add_option("--tol", tol);

  auto* ded = app.add_subcommand("dedekind", "Dedekind-type sums");
  ded->require_subcommand(1);
  auto* dcl = ded->add_subcommand("classical", "s(h, k)");
  dcl->add_option("--h", h)->required();
  dcl->add_option("--k", k)->required();
  auto* dfe = ded->add_subcommand("fe", "S_n(h, k) with root u");
  dfe->add_option("--n", n)->required();
  dfe->add_option("--h", h)->required();
  dfe->add_option("--k", k)->required();
  dfe->add_option("--root", root)->required();
  auto* dch = ded->add_subcommand("fe-char", "character Dedekind-type sum");
  dch->add_option("--n", n)->required();
  dch->add_option("--h", h)->required();
  dch->add_option("--k", k)->required();
  dch->add_option("--u", u)->required();
  dch->add_option("--f", f)->required();
  dch->add_option("--chi", chi);

  auto* hardy = app.add_subcommand("hardy", "Hardy sums S, s1..s5");
  hardy->add_option("--variant", variant)->required();
  hardy->add_option("--h", h)->required();
  hardy->add_option("--k", k)->required();

  auto* hq = app.add_subcommand("hq-bernoulli", "Twisted (h,q)-Bernoulli value as a polynomial in L = log q");
  hq->add_option("--n", n)->required();
  hq->add_option("--h", h)->required();
  hq->add_option("--zeta", zeta, "root of unity, e.g. 1, -1, zeta3");
  hq->add_option("--x", x);
  auto* hq_f = hq->add_option("--f", f, "character modulus");
  hq->add_option("--chi", chi);

  auto* pad = app.add_subcommand("padic", "p-adic computations");
  pad->require_subcommand(1);
  auto* pt = pad->add_subcommand("teichmuller", "omega(a) mod p^N");
  pt->add_option("--a", a)->required();
  pt->add_option("--p", p)->required();
  pt->add_option("--N", N)->required();
  auto* pv = pad->add_subcommand("volkenborn", "level-N Volkenborn sum of q^{hx} poly(x)");
  pv->add_option("--p", p)->required();
  pv->add_option("--level", level)->required();
  pv->add_option("--poly", poly, "coefficients, lowest degree first");
  pv->add_option("--q", q);
  pv->add_option("--h", h);
  pv->add_option("--prec", prec);
  pv->add_flag("--weighted", weighted);
  auto* pw = pad->add_subcommand("witt", "Witt formula residual");
  pw->add_option("--n", n)->required();
  pw->add_option("--h", h);
  pw->add_option("--p", p)->required();
  pw->add_option("--q", q);
  pw->add_option("--level", level)->required();
  auto* pd = pad->add_subcommand("dedekind", "p-adic (h,q)-Dedekind sum");
  pd->add_option("--m", m)->required();
  pd->add_option("--a", a)->required();
  pd->add_option("--b", b)->required();
  pd->add_option("--h", h);
  pd->add_option("--p", p)->required();
  pd->add_option("--q", q);
  pd->add_option("--N", N);
  auto* p13 = pad->add_subcommand("th13", "interpolation residual");
  auto* p19 = pad->add_subcommand("th19", "character interpolation residual");
  for (auto* s : {p13, p19}) {
    s->add_option("--m", m)->required();
    s->add_option("--a", a)->required();
    s->add_option("--b", b)->required();
    s->add_option("--h", h);
    s->add_option("--p", p)->required();
    s->add_option("--q", q);
    s->add_option("--N", N);
    s->add_option("--K", K);
  }
  p19->add_option("--i", i, "chi = omega^i");

  std::string theorem;
  auto* ver = app.add_subcommand("verify", "Theorem verification sweep");
  ver->add_option("theorem", theorem, "theorem id")->required();
  ver->add_option("--grid", grid_file, "flat grid file: key = values");
  ver->add_option("--set", sets, "override one key, key=values");
  ver->add_option("--jobs", jobs, "worker threads (default RECIPLAB_JOBS or all cores)");
  ver->add_flag("--timing", timing, "include per-point timing in JSON reports");
  ver->add_flag("--json", out_mode.json, "one JSON object per line");
  ver->add_flag("--csv", out_mode.csv, "CSV rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bern) {
      if (*bern_x) emit(bernoulli_poly(n, rational(x)));
      else emit(bernoulli_number(n));
    } else if (*fen) {
      emit(fe_number(n, scalar(u)));
    } else if (*fep) {
      emit(fe_poly(n, scalar(x), scalar(u)));
    } else if (*fef) {
      emit(fe_function(n, rational(x), scalar(u)));
    } else if (*cfe) {
      emit(char_fe_number(n, character(f, chi), scalar(u)));
    } else if (*bfe) {
      emit(barnes_fe(longs(avec), scalar(u), scalar(x), n));
    } else if (*ln) {
      emit(l_neg(n, rational(x), scalar(u)));
    } else if (*lm) {
      emit(multiple_l_neg(n, rational(x), scalar(u), longs(avec)));
    } else if (*lnum) {
      double re = std::stod(s_re), im = std::stod(s_im);
      auto r = l_numeric({re, im}, std::stod(x), std::stod(u), std::stod(tol));
      Json j = {{"re", r.value.real()}, {"im", r.value.imag()}, {"bound", r.bound}, {"terms", r.terms}};
      char buf[160];
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi +- %.3g", r.value.real(), r.value.imag(), r.bound);
      emit(j, buf);
    } else if (*ded) {
      if (*dcl) emit(classical_dedekind(h, k));
      else if (*dfe) emit(fe_dedekind_sum(n, h, k, scalar(root)));
      else emit(fe_dedekind_sum_char(n, h, k, scalar(u), character(f, chi)));
    } else if (*hardy) {
      emit(hardy_sum(parse_hardy_variant(variant), h, k));
    } else if (*hq) {
      Scalar z = scalar(zeta);
      if (*hq_f) emit(hq_bernoulli_char(n, h, z, character(f, chi), rational(x)));
      else emit(hq_bernoulli_poly(n, h, z, rational(x)));
    } else if (*pad) {
      if (*pt) {
        emit(teichmuller(a, p, N));
      } else if (*pv) {
        std::vector<Rational> coeffs;
        std::size_t start = 0;
        for (;;) {
          auto comma = poly.find(',', start);
          coeffs.push_back(rational(poly.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        emit(volkenborn({coeffs, padic_q(q, p, prec + level + 20), h}, level, prec, weighted));
      } else if (*pw) {
        auto r = witt_residual(n, h, padic_q(q, p, level + 2 * n + 40), level, level + 8);
        emit(r.residual);
      } else if (*pd) {
        emit(padic_dedekind(m, a, b, h, padic_q(q, p, N + 2 * m + 40), N));
      } else {
        PAdic qq = padic_q(q, p, N + 2 * std::max<long>(m, K) + 40);
        auto r = *p13 ? th13_residual(m, a, b, h, qq, N, K) : th19_residual(m, a, b, h, qq, N, K, i);
        emit(r.residual);
      }
    } else if (*ver) {
      cli::Grid grid = grid_file.empty() ? cli::Grid{} : cli::parse_grid_file(grid_file);
      for (const auto& s : sets) cli::apply_assignment(grid, s);
      auto reports = cli::run_sweep(theorem, grid, resolve_jobs(jobs));
      long pass = 0, fail = 0, skipped = 0;
      if (out_mode.csv) std::cout << cli::report_csv_header() << "\n";
      for (const auto& r : reports) {
        if (r.status == "pass") ++pass;
        else if (r.status == "fail") ++fail;
        else ++skipped;
        if (out_mode.csv) std::cout << cli::report_csv(r) << "\n";
        else if (out_mode.json) std::cout << cli::report_json(r, timing).dump() << "\n";
        else std::cout << cli::report_text(r) << "\n";
      }
      if (!out_mode.json && !out_mode.csv)
        std::cout << theorem << ": " << reports.size() << " points, " << pass << " pass, " << fail << " fail, " << skipped
                  << " skipped-pole\n";
      return fail > 0 ? 1 : 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
