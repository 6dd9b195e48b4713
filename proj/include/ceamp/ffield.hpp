#pragma once

#include <string>

namespace ceamp {

// Element of the prime field F_p. Elements carry their modulus; mixing
// moduli is an error, not a coercion.
struct FieldElement {
  int value = 0;
  int modulus = 2;
  bool operator==(const FieldElement&) const = default;
};

bool is_prime(int x);
int smallest_prime_geq(int x);

// Builds an element, reducing value mod p. p must be prime.
FieldElement f_make(int value, int modulus);

// Multiplicative inverse. a must be nonzero.
FieldElement f_inv(FieldElement a);

// The unique r with q - p = r - q over F_p, i.e. r = 2q - p.
FieldElement progression_third(FieldElement pv, FieldElement q);

// The center q with q - p = r - q, i.e. q = (p + r) * 2^{-1}.
// For p = 2 the center exists only when pv = r (constant progression).
FieldElement progression_center(FieldElement pv, FieldElement r);

}  // namespace ceamp
