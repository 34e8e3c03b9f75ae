#include "reciplab/characters.hpp"

#include <utility>

namespace reciplab {
namespace {

long powmod(long b, long e, long m) {
  long r = 1 % m;
  b = mod_floor(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % m);
    b = static_cast<long>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long multiplicative_order(long a, long m) {
  long x = mod_floor(a, m);
  long k = 1;
  while (x != 1 % m) {
    x = x * mod_floor(a, m) % m;
    ++k;
  }
  return k;
}

long primitive_root_prime_power(long p, long pk) {
  long phi = euler_phi(pk);
  for (long g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    if (multiplicative_order(g, pk) == phi) return g;
  }
  return 1;  // pk == 2
}

// x = r mod m, x = 1 mod (f / m)
long crt_lift(long r, long m, long f) {
  long other = f / m;
  for (long x = r; x < f; x += m)
    if (mod_floor(x, other) == 1 % other) return x;
  return r;
}

struct GeneratorSpec {
  long g;
  long ord;
};

std::vector<GeneratorSpec> generators_for(long f) {
  std::vector<GeneratorSpec> out;
  for (auto [p, k] : factorize(f)) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    if (p == 2) {
      if (k == 2) out.push_back({crt_lift(pk - 1, pk, f), 2});
      if (k >= 3) {
        out.push_back({crt_lift(pk - 1, pk, f), 2});
        out.push_back({crt_lift(5, pk, f), pk / 4});
      }
      continue;
    }
    out.push_back({crt_lift(primitive_root_prime_power(p, pk), pk, f), euler_phi(pk)});
  }
  return out;
}

}  // namespace

long carmichael_lambda(long f) {
  long lam = 1;
  for (auto [p, k] : factorize(f)) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    long l = (p == 2 && k >= 3) ? pk / 4 : euler_phi(pk);
    lam = lcm_long(lam, l);
  }
  return lam;
}

std::vector<Cyclotomic> DirichletCharacter::generator_images() const {
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out.push_back(Cyclotomic::root_of_unity(orders_[i], exponents_[i]));
  return out;
}

std::vector<DirichletCharacter> enumerate_characters(long f) {
  if (f < 1) throw DegenerateParams("character modulus must be >= 1");
  auto gens = generators_for(f);
  const std::size_t r = gens.size();

  // Discrete-log table: exponent vector of every unit.
  std::vector<std::vector<long>> dlog(static_cast<std::size_t>(f));
  std::vector<bool> seen(static_cast<std::size_t>(f), false);
  {
    std::vector<long> k(r, 0);
    while (true) {
      long a = 1 % f;
      for (std::size_t i = 0; i < r; ++i) a = a * powmod(gens[i].g, k[i], f) % f;
      dlog[static_cast<std::size_t>(a)] = k;
      seen[static_cast<std::size_t>(a)] = true;
      std::size_t i = 0;
      while (i < r && ++k[i] == gens[i].ord) k[i++] = 0;
      if (i == r) break;
    }
  }

  std::vector<DirichletCharacter> out;
  std::vector<long> e(r, 0);
  long index = 0;
  while (true) {
    DirichletCharacter chi;
    chi.modulus_ = f;
    chi.index_ = index++;
    chi.exponents_ = e;
    long order = 1;
    for (std::size_t i = 0; i < r; ++i) {
      chi.generators_.push_back(gens[i].g);
      chi.orders_.push_back(gens[i].ord);
      order = lcm_long(order, gens[i].ord / gcd_long(e[i] == 0 ? gens[i].ord : e[i], gens[i].ord));
    }
    chi.order_ = order;
    chi.values_.assign(static_cast<std::size_t>(f), Cyclotomic(0));
    if (f == 1) chi.values_[0] = Cyclotomic(1);
    for (long a = 0; a < f && f > 1; ++a) {
      if (!seen[static_cast<std::size_t>(a)]) continue;
      // chi(g_i) = zeta_{o_i}^{e_i / g_i} with g_i = gcd(e_i, ord_i), o_i = ord_i / g_i | order
      long ex = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (e[i] == 0) continue;
        long g = gcd_long(e[i], gens[i].ord);
        long o = gens[i].ord / g;
        long k = dlog[static_cast<std::size_t>(a)][i];
        ex = mod_floor(ex + (e[i] / g) * k % o * (order / o), order);
      }
      chi.values_[static_cast<std::size_t>(a)] = Cyclotomic::root_of_unity(order, ex);
    }
    out.push_back(std::move(chi));
    std::size_t i = 0;
    while (i < r && ++e[i] == gens[i].ord) e[i++] = 0;
    if (i == r) break;
  }
  return out;
}

DirichletCharacter trivial_character() { return enumerate_characters(1).front(); }

DirichletCharacter character_at(long f, long index) {
  auto all = enumerate_characters(f);
  if (index < 0 || index >= static_cast<long>(all.size()))
    throw DegenerateParams("character index out of range for modulus " + std::to_string(f));
  return all[static_cast<std::size_t>(index)];
}

long conductor_of(const DirichletCharacter& chi) {
  const long f = chi.modulus();
  for (long d = 1; d < f; ++d) {
    if (f % d != 0) continue;
    bool induced = true;
    for (long a = 1; a < f && induced; a += d)
      if (gcd_long(a, f) == 1 && !chi(a).is_one()) induced = false;
    if (induced) return d;
  }
  return f;
}

}  // namespace reciplab
