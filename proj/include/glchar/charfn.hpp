#pragma once
// Additive and multiplicative characters of the tower fields, valued in
// cyclotomic integers: psi0(x) = zeta_p^(AbsTr(c x)) on the base field and
// theta(g^j) = zeta_(q^level - 1)^(k j) on a chosen extension level.

#include "glchar/cyclo.hpp"
#include "glchar/gf.hpp"

#include <cstdint>

namespace glchar {

struct AdditiveChar {
  const FieldTower* T = nullptr;
  FieldElement c;  // nonzero scale at level 1
};

AdditiveChar make_psi0(const FieldTower& T, const FieldElement& c);
AdditiveChar make_psi0_default(const FieldTower& T);  // c = 1
int psi0_exponent(const AdditiveChar& psi, const FieldElement& x);  // AbsTr(c x) in [0, p)
CycloInt psi0_eval(const AdditiveChar& psi, const FieldElement& x);  // x at level 1

struct MultChar {
  const FieldTower* T = nullptr;
  int level = 1;   // character of F_{q^level}^x
  int64_t k = 0;   // exponent: theta(g^j) = zeta^(k j)
};

MultChar make_theta(const FieldTower& T, int level, int64_t k);
CycloInt theta_eval(const MultChar& th, const FieldElement& x);  // x != 0, any level dividing th.level
// regular: the exponent orbit under multiplication by q mod (q^level - 1) has size exactly level
bool is_regular(const MultChar& th);
int64_t smallest_regular_k(const FieldTower& T, int level);
int64_t count_regular_exhaustive(const FieldTower& T, int level);
int64_t count_regular_moebius(const FieldTower& T, int level);
// sum of theta over the Frobenius orbit of z (z nonzero, z.level | th.level)
CycloInt galois_orbit_sum(const MultChar& th, const FieldElement& z);

}  // namespace glchar
