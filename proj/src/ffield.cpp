#include "ceamp/ffield.hpp"

#include "ceamp/check.hpp"

namespace ceamp {

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

int smallest_prime_geq(int x) {
  require(x >= 1, "smallest_prime_geq: argument must be >= 1");
  int p = x < 2 ? 2 : x;
  while (!is_prime(p)) ++p;
  return p;
}

FieldElement f_make(int value, int modulus) {
  require(is_prime(modulus), "field modulus " + std::to_string(modulus) + " is not prime");
  int v = value % modulus;
  if (v < 0) v += modulus;
  return FieldElement{v, modulus};
}

static void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  require(a.modulus == b.modulus, "field modulus mismatch: " + std::to_string(a.modulus) +
                                      " vs " + std::to_string(b.modulus));
}

FieldElement f_inv(FieldElement a) {
  require(a.value != 0, "0 has no multiplicative inverse");
  for (int b = 1; b < a.modulus; ++b)
    if (a.value * b % a.modulus == 1) return FieldElement{b, a.modulus};
  throw std::runtime_error("no inverse found; modulus not prime?");
}

FieldElement progression_third(FieldElement pv, FieldElement q) {
  require_same_modulus(pv, q);
  return f_make(2 * q.value - pv.value, pv.modulus);
}

FieldElement progression_center(FieldElement pv, FieldElement r) {
  require_same_modulus(pv, r);
  if (pv.modulus == 2) {
    require(pv.value == r.value, "no progression center over F_2 with distinct endpoints");
    return pv;
  }
  FieldElement inv2 = f_inv(f_make(2, pv.modulus));
  return f_make((pv.value + r.value) * inv2.value, pv.modulus);
}

}  // namespace ceamp
