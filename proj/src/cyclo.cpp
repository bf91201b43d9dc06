#include "glchar/cyclo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace glchar {
namespace {

// exact division of polynomials over Z, constant coefficient first, monic divisor
std::vector<BigInt> zpoly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) throw std::logic_error("polynomial division underflow");
  std::vector<BigInt> quo(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    BigInt c = num[i];
    quo[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const BigInt& c : num)
    if (c != 0) throw std::logic_error("polynomial division not exact");
  return quo;
}

// reduce a dense polynomial (degree < dense.size()) modulo the monic cyclotomic polynomial of L
std::vector<BigInt> reduce_mod_cyclotomic(std::vector<BigInt> dense, int64_t L) {
  const std::vector<BigInt>& phi = cyclotomic_poly(L);
  size_t deg = phi.size() - 1;
  for (size_t i = dense.size(); i-- > deg;) {
    BigInt c = dense[i];
    if (c == 0) continue;
    dense[i] = 0;
    for (size_t j = 0; j < deg; ++j) dense[i - deg + j] -= c * phi[j];
  }
  dense.resize(deg);
  return dense;
}

}  // namespace

int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r -= r / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

int moebius(int64_t n) {
  int cnt = 0;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      ++cnt;
    }
  }
  if (n > 1) ++cnt;
  return cnt % 2 == 0 ? 1 : -1;
}

std::vector<int64_t> divisors_of(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

const std::vector<BigInt>& cyclotomic_poly(int64_t L) {
  static std::map<int64_t, std::vector<BigInt>> cache;
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  std::vector<BigInt> poly;
  if (L == 1) {
    poly = {-1, 1};  // x - 1
  } else {
    // (x^L - 1) / prod_{d | L, d < L} Phi_d
    std::vector<BigInt> num(L + 1);
    num[0] = -1;
    num[L] = 1;
    for (int64_t d : divisors_of(L)) {
      if (d == L) continue;
      num = zpoly_divide_exact(std::move(num), cyclotomic_poly(d));
    }
    poly = std::move(num);
  }
  if (static_cast<int64_t>(poly.size()) != euler_phi(L) + 1)
    throw std::logic_error("cyclotomic polynomial degree mismatch");
  return cache.emplace(L, std::move(poly)).first->second;
}

CycloInt cyclo_zero(int64_t L) {
  CycloInt z;
  z.conductor = L;
  z.coeffs.assign(euler_phi(L), BigInt(0));
  return z;
}

CycloInt cyclo_int(const BigInt& n, int64_t L) {
  CycloInt z = cyclo_zero(L);
  z.coeffs[0] = n;
  return z;
}

CycloInt root_of_unity(int64_t L, int64_t k) {
  if (L < 1) throw std::invalid_argument("conductor must be positive");
  k %= L;
  if (k < 0) k += L;
  std::vector<BigInt> dense(L, BigInt(0));
  dense[k] = 1;
  CycloInt z;
  z.conductor = L;
  z.coeffs = reduce_mod_cyclotomic(std::move(dense), L);
  return z;
}

CycloInt cyclo_lift(const CycloInt& a, int64_t L) {
  if (L == a.conductor) return a;
  if (L % a.conductor != 0) throw std::invalid_argument("lift target must be a conductor multiple");
  int64_t s = L / a.conductor;
  std::vector<BigInt> dense(L, BigInt(0));
  for (size_t j = 0; j < a.coeffs.size(); ++j)
    if (a.coeffs[j] != 0) dense[static_cast<size_t>(s) * j] += a.coeffs[j];
  CycloInt z;
  z.conductor = L;
  z.coeffs = reduce_mod_cyclotomic(std::move(dense), L);
  return z;
}

CycloInt cyclo_add(const CycloInt& a, const CycloInt& b) {
  int64_t L = lcm64(a.conductor, b.conductor);
  CycloInt x = cyclo_lift(a, L), y = cyclo_lift(b, L);
  for (size_t i = 0; i < x.coeffs.size(); ++i) x.coeffs[i] += y.coeffs[i];
  return x;
}

CycloInt cyclo_sub(const CycloInt& a, const CycloInt& b) { return cyclo_add(a, cyclo_neg(b)); }

CycloInt cyclo_neg(const CycloInt& a) {
  CycloInt z = a;
  for (auto& c : z.coeffs) c = -c;
  return z;
}

CycloInt cyclo_scale(const CycloInt& a, const BigInt& n) {
  CycloInt z = a;
  for (auto& c : z.coeffs) c *= n;
  return z;
}

CycloInt cyclo_mul(const CycloInt& a, const CycloInt& b) {
  int64_t L = lcm64(a.conductor, b.conductor);
  CycloInt x = cyclo_lift(a, L), y = cyclo_lift(b, L);
  std::vector<BigInt> dense(2 * x.coeffs.size(), BigInt(0));
  for (size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (size_t j = 0; j < y.coeffs.size(); ++j)
      if (y.coeffs[j] != 0) dense[i + j] += x.coeffs[i] * y.coeffs[j];
  }
  CycloInt z;
  z.conductor = L;
  z.coeffs = reduce_mod_cyclotomic(std::move(dense), L);
  return z;
}

CycloInt cyclo_conj(const CycloInt& a) {
  int64_t L = a.conductor;
  std::vector<BigInt> dense(L, BigInt(0));
  for (size_t j = 0; j < a.coeffs.size(); ++j)
    if (a.coeffs[j] != 0) dense[(L - static_cast<int64_t>(j)) % L] += a.coeffs[j];
  CycloInt z;
  z.conductor = L;
  z.coeffs = reduce_mod_cyclotomic(std::move(dense), L);
  return z;
}

bool cyclo_is_zero(const CycloInt& a) {
  for (const auto& c : a.coeffs)
    if (c != 0) return false;
  return true;
}

bool cyclo_eq(const CycloInt& a, const CycloInt& b) {
  int64_t L = lcm64(a.conductor, b.conductor);
  return cyclo_lift(a, L).coeffs == cyclo_lift(b, L).coeffs;
}

std::optional<BigInt> cyclo_as_integer(const CycloInt& a) {
  for (size_t i = 1; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0) return std::nullopt;
  return a.coeffs.empty() ? BigInt(0) : a.coeffs[0];
}

CycloInt cyclo_divide_exact(const CycloInt& a, const BigInt& n) {
  if (n == 0) throw std::invalid_argument("division by zero");
  CycloInt z = a;
  for (auto& c : z.coeffs) {
    if (c % n != 0) throw std::logic_error("cyclotomic division not exact");
    c /= n;
  }
  return z;
}

std::string cyclo_to_string(const CycloInt& a) {
  auto i = cyclo_as_integer(a);
  if (i) return i->str();
  std::string s = "zeta" + std::to_string(a.conductor) + "[";
  for (size_t j = 0; j < a.coeffs.size(); ++j) {
    if (j) s += ",";
    s += a.coeffs[j].str();
  }
  s += "]";
  return s;
}

}  // namespace glchar
