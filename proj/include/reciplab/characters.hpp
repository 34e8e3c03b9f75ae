#pragma once

#include <vector>

#include "reciplab/cyclotomic.hpp"

namespace reciplab {

// A Dirichlet character modulo f, specified by its images on a fixed set of
// generators of (Z/fZ)^x. Values are stored at the character's own order
// (a divisor of the group exponent), so real characters are rational.
class DirichletCharacter {
 public:
  long modulus() const { return modulus_; }
  // Position in enumerate_characters(modulus()).
  long index() const { return index_; }
  const std::vector<long>& generators() const { return generators_; }
  const std::vector<long>& generator_orders() const { return orders_; }
  // chi(g_i) = zeta_{ord_i}^{exponents()[i]}
  const std::vector<long>& generator_exponents() const { return exponents_; }
  std::vector<Cyclotomic> generator_images() const;
  // Multiplicative order of the character.
  long order() const { return order_; }
  bool is_principal() const { return order_ == 1; }

  // chi(a); zero when gcd(a, f) > 1, periodic in a with period f.
  const Cyclotomic& operator()(long a) const { return values_[static_cast<std::size_t>(mod_floor(a, modulus_))]; }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
  }

 private:
  friend std::vector<DirichletCharacter> enumerate_characters(long f);
  long modulus_ = 1;
  long index_ = 0;
  std::vector<long> generators_;
  std::vector<long> orders_;
  std::vector<long> exponents_;
  long order_ = 1;
  std::vector<Cyclotomic> values_{Cyclotomic(1)};
};

// All phi(f) characters mod f in canonical order: mixed-radix enumeration of
// generator exponents, index 0 being the principal character. Generators come
// from the CRT split of (Z/fZ)^x: a primitive root for each odd prime power,
// -1 for 4, and -1, 5 for 2^k with k >= 3.
std::vector<DirichletCharacter> enumerate_characters(long f);

// The principal character of modulus 1 (identically 1 on all integers).
DirichletCharacter trivial_character();

// Character (f, index) of the canonical enumeration; throws DegenerateParams
// when the index is out of range.
DirichletCharacter character_at(long f, long index);

// Smallest modulus d | f from which chi is induced.
long conductor_of(const DirichletCharacter& chi);

inline bool is_primitive(const DirichletCharacter& chi) { return conductor_of(chi) == chi.modulus(); }

// Group exponent lambda(f) of (Z/fZ)^x (Carmichael function).
long carmichael_lambda(long f);

}  // namespace reciplab
