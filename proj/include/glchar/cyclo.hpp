#pragma once
// Exact arithmetic in rings of cyclotomic integers Z[zeta_L]. Values are kept
// in the power basis 1, zeta, ..., zeta^(phi(L)-1), reduced modulo the L-th
// cyclotomic polynomial; mixed conductors are lifted to the lcm.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glchar {

using BigInt = boost::multiprecision::cpp_int;

struct CycloInt {
  int64_t conductor = 1;
  std::vector<BigInt> coeffs;  // size phi(conductor)
};

CycloInt cyclo_zero(int64_t L = 1);
CycloInt cyclo_int(const BigInt& n, int64_t L = 1);
CycloInt root_of_unity(int64_t L, int64_t k);  // zeta_L^k

CycloInt cyclo_lift(const CycloInt& a, int64_t L);  // requires a.conductor | L
CycloInt cyclo_add(const CycloInt& a, const CycloInt& b);
CycloInt cyclo_sub(const CycloInt& a, const CycloInt& b);
CycloInt cyclo_mul(const CycloInt& a, const CycloInt& b);
CycloInt cyclo_neg(const CycloInt& a);
CycloInt cyclo_scale(const CycloInt& a, const BigInt& n);
CycloInt cyclo_conj(const CycloInt& a);  // complex conjugation, zeta -> zeta^(-1)

bool cyclo_is_zero(const CycloInt& a);
bool cyclo_eq(const CycloInt& a, const CycloInt& b);
std::optional<BigInt> cyclo_as_integer(const CycloInt& a);
// Divide every coordinate by n; a non-exact division is an internal error.
CycloInt cyclo_divide_exact(const CycloInt& a, const BigInt& n);

std::string cyclo_to_string(const CycloInt& a);

// number-theoretic helpers
int64_t euler_phi(int64_t n);
int moebius(int64_t n);
std::vector<int64_t> divisors_of(int64_t n);
int64_t lcm64(int64_t a, int64_t b);
// monic, degree phi(L), constant coefficient first
const std::vector<BigInt>& cyclotomic_poly(int64_t L);

}  // namespace glchar
