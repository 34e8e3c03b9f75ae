#pragma once

#include <random>
#include <vector>

#include "reciplab/cyclotomic.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240917);
  return r;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline reciplab::Rational rational(long bound = 9) {
  long den = integer(1, bound);
  return reciplab::Rational(integer(-bound, bound), den);
}

inline reciplab::Cyclotomic cyclotomic(long m, long bound = 5) {
  std::vector<reciplab::Rational> raw;
  for (long i = 0; i < reciplab::euler_phi(m); ++i) raw.push_back(rational(bound));
  return reciplab::Cyclotomic::normalize(m, raw);
}

inline reciplab::Cyclotomic nonzero_cyclotomic(long m, long bound = 5) {
  for (;;) {
    auto z = cyclotomic(m, bound);
    if (!z.is_zero()) return z;
  }
}

}  // namespace gen
