// Construction of the field tower: defining polynomials, generator selection,
// discrete log / Zech / trace tables, and the dlog-level arithmetic.

#include "glchar/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace glchar {
namespace {

// Dense polynomials over F_p, coefficient of x^i at index i, no trailing zeros.

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<int>((c[i + j] + static_cast<int64_t>(a[i]) * b[j]) % p);
  }
  trim(c);
  return c;
}

// Remainder of a modulo monic b.
Poly pmod(Poly a, const Poly& b, int p) {
  trim(a);
  int db = pdeg(b);
  while (pdeg(a) >= db) {
    int shift = pdeg(a) - db;
    int c = a.back();
    for (int i = 0; i <= db; ++i) {
      int64_t v = a[shift + i] - static_cast<int64_t>(c) * b[i];
      a[shift + i] = static_cast<int>(((v % p) + p) % p);
    }
    trim(a);
  }
  return a;
}

Poly padd(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

Poly psub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

Poly ppowmod(Poly base, int64_t e, const Poly& mod, int p) {
  Poly r = {1};
  base = pmod(std::move(base), mod, p);
  while (e > 0) {
    if (e & 1) r = pmod(pmul(r, base, p), mod, p);
    base = pmod(pmul(base, base, p), mod, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    int lead = b.back();
    if (lead != 1) {
      int inv = 1;
      for (int t = 1; t < p; ++t)
        if (t * lead % p == 1) { inv = t; break; }
      for (auto& c : b) c = static_cast<int>(static_cast<int64_t>(c) * inv % p);
    }
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Monic P of degree n over F_p, irreducible iff x^(p^n) == x mod P and
// gcd(x^(p^(n/l)) - x, P) = 1 for every prime l | n.
bool is_irreducible(const Poly& P, int p) {
  int n = pdeg(P);
  if (n <= 0) return false;
  Poly x = pmod(Poly{0, 1}, P, p);  // reduce so degree-1 moduli compare correctly
  Poly xq = ppowmod(x, ipow(p, n), P, p);
  if (psub(xq, x, p) != Poly{}) return false;
  for (int64_t l : prime_factors(n)) {
    Poly xe = ppowmod(x, ipow(p, static_cast<int>(n / l)), P, p);
    Poly g = pgcd(P, psub(xe, x, p), p);
    if (pdeg(g) != 0) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree n over F_p, comparing
// coefficient tuples from the constant term up.
Poly smallest_irreducible(int n, int p) {
  Poly P(n + 1, 0);
  P[n] = 1;
  int64_t total = ipow(p, n);
  for (int64_t code = 0; code < total; ++code) {
    int64_t c = code;
    for (int i = 0; i < n; ++i) {
      P[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (is_irreducible(P, p)) return P;
  }
  throw std::logic_error("no irreducible polynomial found");
}

uint32_t pack(const Poly& a, int p) {
  uint32_t v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * static_cast<uint32_t>(p) + static_cast<uint32_t>(a[i]);
  return v;
}

Poly unpack(uint32_t v, int p) {
  Poly a;
  while (v > 0) {
    a.push_back(static_cast<int>(v % static_cast<uint32_t>(p)));
    v /= static_cast<uint32_t>(p);
  }
  return a;
}

}  // namespace

const FieldTower::Level& FieldTower::at(int level) const {
  for (size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] == level) return levels_[i];
  throw std::invalid_argument("level " + std::to_string(level) + " does not divide tower degree");
}

FieldTower::Level& FieldTower::at(int level) {
  return const_cast<Level&>(static_cast<const FieldTower*>(this)->at(level));
}

FieldTower FieldTower::build(int p, int f, int m) {
  if (p < 2 || f < 1 || m < 1) throw std::invalid_argument("bad field parameters");
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p must be prime");
  FieldTower T;
  T.p_ = p;
  T.f_ = f;
  T.m_ = m;
  T.q_ = ipow(p, f);
  {
    // cap: full dlog tables are built for every level
    int64_t s = 1;
    for (int i = 0; i < m; ++i) {
      s *= T.q_;
      if (s > (1 << 24)) throw std::invalid_argument("q^m exceeds the 2^24 table cap");
    }
  }
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) T.divisors_.push_back(d);
  T.levels_.resize(T.divisors_.size());

  // Build a level given its generator (as a packed polynomial representative).
  auto fill_tables = [&](Level& L, const Poly& g) {
    L.pow_packed.assign(L.units, 0);
    L.dlog.assign(L.size, -1);
    Poly cur = {1};
    for (int64_t k = 0; k < L.units; ++k) {
      uint32_t pk = pack(cur, p);
      L.pow_packed[k] = pk;
      if (L.dlog[pk] != -1) throw std::logic_error("generator order too small");
      L.dlog[pk] = static_cast<int32_t>(k);
      cur = pmod(pmul(cur, g, p), L.defpoly, p);
    }
    if (cur != Poly{1}) throw std::logic_error("generator order mismatch");
    L.zech.assign(L.units, -1);
    for (int64_t k = 0; k < L.units; ++k) {
      Poly s = padd(unpack(L.pow_packed[k], p), Poly{1}, p);
      L.zech[k] = s.empty() ? -1 : L.dlog[pack(s, p)];
    }
    L.dlog_minus_one = p == 2 ? 0 : L.dlog[pack(Poly{p - 1}, p)];
    // Absolute trace of each basis monomial, then extend linearly.
    int n = pdeg(L.defpoly);
    std::vector<int> mono_trace(n, 0);
    for (int j = 0; j < n; ++j) {
      Poly xj(j + 1, 0);
      xj[j] = 1;
      Poly acc = xj, sum = xj;
      for (int i = 1; i < n; ++i) {
        acc = ppowmod(acc, p, L.defpoly, p);
        sum = padd(sum, acc, p);
      }
      if (pdeg(sum) > 0) throw std::logic_error("trace not scalar");
      mono_trace[j] = sum.empty() ? 0 : sum[0];
    }
    L.trace.assign(L.units, 0);
    for (int64_t k = 0; k < L.units; ++k) {
      Poly e = unpack(L.pow_packed[k], p);
      int t = 0;
      for (size_t j = 0; j < e.size(); ++j) t = (t + e[j] * mono_trace[j]) % p;
      L.trace[k] = t;
    }
  };

  // Top level first: its generator is the first primitive element in packed order.
  {
    Level& L = T.levels_.back();
    L.d = m;
    L.size = ipow(T.q_, m);
    L.units = L.size - 1;
    L.defpoly = smallest_irreducible(f * m, p);
    auto factors = prime_factors(L.units);
    Poly g;
    for (uint32_t v = 1; v < static_cast<uint32_t>(L.size); ++v) {
      Poly cand = unpack(v, p);
      bool primitive = true;
      for (int64_t l : factors) {
        if (ppowmod(cand, L.units / l, L.defpoly, p) == Poly{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) { g = cand; break; }
    }
    if (g.empty()) throw std::logic_error("no primitive element found");
    fill_tables(L, g);
  }

  // Lower levels: generator is the first packed-order root of the minimal
  // polynomial over F_p of g_m^((q^m-1)/(q^d-1)). Sharing that minimal
  // polynomial with the reference power of g_m makes the dlog power maps
  // between levels additive.
  for (size_t li = 0; li + 1 < T.divisors_.size(); ++li) {
    int d = T.divisors_[li];
    Level& L = T.levels_[li];
    L.d = d;
    L.size = ipow(T.q_, d);
    L.units = L.size - 1;
    L.defpoly = smallest_irreducible(f * d, p);

    const Level& top = T.levels_.back();
    int64_t expo = top.units / L.units;
    int n = f * d;
    // conjugates h^(p^i) of h = g_m^expo, as dlogs at the top level
    std::vector<int64_t> conj(n);
    int64_t pk = 1;
    for (int i = 0; i < n; ++i) {
      conj[i] = static_cast<int64_t>((static_cast<__int128>(expo) * pk) % top.units);
      pk = pk * p % top.units;
    }
    // expand prod (x - h^(p^i)) with top-level dlog arithmetic
    FieldTower::Level const* TL = &top;
    auto tl_mul = [&](int32_t a, int32_t b) -> int32_t {
      if (a < 0 || b < 0) return -1;
      return static_cast<int32_t>((a + b) % TL->units);
    };
    auto tl_add = [&](int32_t a, int32_t b) -> int32_t {
      if (a < 0) return b;
      if (b < 0) return a;
      int64_t diff = (b - a % TL->units + TL->units) % TL->units;
      int32_t z = TL->zech[diff];
      if (z < 0) return -1;
      return static_cast<int32_t>((a + z) % TL->units);
    };
    auto tl_neg = [&](int32_t a) -> int32_t {
      if (a < 0) return -1;
      return p == 2 ? a : static_cast<int32_t>((a + TL->dlog_minus_one) % TL->units);
    };
    std::vector<int32_t> mp = {0};  // coefficients as top-level dlogs, constant first
    for (int i = 0; i < n; ++i) {
      std::vector<int32_t> nx(mp.size() + 1, -1);
      int32_t mr = tl_neg(static_cast<int32_t>(conj[i]));
      for (size_t j = 0; j < mp.size(); ++j) {
        nx[j + 1] = tl_add(nx[j + 1], mp[j]);
        nx[j] = tl_add(nx[j], tl_mul(mp[j], mr));
      }
      mp = std::move(nx);
    }
    // coefficients must lie in the prime field
    Poly minpoly(n + 1, 0);
    for (size_t j = 0; j <= static_cast<size_t>(n); ++j) {
      if (mp[j] < 0) { minpoly[j] = 0; continue; }
      uint32_t pkd = top.pow_packed[mp[j]];
      if (pkd >= static_cast<uint32_t>(p)) throw std::logic_error("minimal polynomial not over F_p");
      minpoly[j] = static_cast<int>(pkd);
    }
    // first packed-order root in the level-d field (the constant term of the
    // minimal polynomial is nonzero, so zero is never a root)
    Poly g;
    bool found = false;
    for (uint32_t v = 1; v < static_cast<uint32_t>(L.size) && !found; ++v) {
      Poly cand = unpack(v, p);
      Poly acc = {};  // Horner: acc = acc*cand + coeff
      for (int j = n; j >= 0; --j) {
        acc = pmod(pmul(acc, cand, p), L.defpoly, p);
        acc = padd(acc, Poly{minpoly[j]}, p);
        trim(acc);
      }
      if (acc.empty()) {
        g = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no root of compatibility polynomial found");
    fill_tables(L, g);
  }
  return T;
}

int64_t FieldTower::level_size(int d) const { return at(d).size; }
int64_t FieldTower::unit_order(int d) const { return at(d).units; }

FieldElement FieldTower::zero(int level) const {
  (void)at(level);
  return {level, -1};
}

FieldElement FieldTower::one(int level) const {
  (void)at(level);
  return {level, 0};
}

FieldElement FieldTower::gen(int level) const {
  const Level& L = at(level);
  return {level, L.units == 1 ? 0 : 1};
}

FieldElement FieldTower::from_dlog(int level, int64_t k) const {
  const Level& L = at(level);
  k %= L.units;
  if (k < 0) k += L.units;
  return {level, static_cast<int32_t>(k)};
}

FieldElement FieldTower::from_int(int level, int64_t c) const {
  const Level& L = at(level);
  int r = static_cast<int>(((c % p_) + p_) % p_);
  if (r == 0) return zero(level);
  return {level, L.dlog[r]};
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
  if (a.level != b.level) throw std::invalid_argument("add: level mismatch");
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  const Level& L = at(a.level);
  int64_t diff = (b.value - a.value % L.units + L.units) % L.units;
  int32_t z = L.zech[diff];
  if (z < 0) return zero(a.level);
  return {a.level, static_cast<int32_t>((a.value + z) % L.units)};
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
  if (a.level != b.level) throw std::invalid_argument("mul: level mismatch");
  if (is_zero(a) || is_zero(b)) return zero(a.level);
  const Level& L = at(a.level);
  return {a.level, static_cast<int32_t>((static_cast<int64_t>(a.value) + b.value) % L.units)};
}

FieldElement FieldTower::neg(const FieldElement& a) const {
  if (is_zero(a) || p_ == 2) return a;
  const Level& L = at(a.level);
  return {a.level, static_cast<int32_t>((a.value + L.dlog_minus_one) % L.units)};
}

FieldElement FieldTower::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::invalid_argument("inv of zero");
  const Level& L = at(a.level);
  return {a.level, static_cast<int32_t>((L.units - a.value) % L.units)};
}

FieldElement FieldTower::pow(const FieldElement& a, int64_t e) const {
  const Level& L = at(a.level);
  if (is_zero(a)) {
    if (e > 0) return a;
    if (e == 0) return one(a.level);
    throw std::invalid_argument("negative power of zero");
  }
  int64_t er = e % L.units;
  if (er < 0) er += L.units;
  return {a.level, static_cast<int32_t>(static_cast<int64_t>(a.value) * er % L.units)};
}

FieldElement FieldTower::frobenius(const FieldElement& x, int times) const {
  if (is_zero(x)) return x;
  const Level& L = at(x.level);
  int64_t factor = 1;
  for (int i = 0; i < times; ++i) factor = factor * (q_ % L.units) % L.units;
  return {x.level, static_cast<int32_t>(static_cast<int64_t>(x.value) * factor % L.units)};
}

FieldElement FieldTower::embed(const FieldElement& x, int to_level) const {
  if (to_level % x.level != 0) throw std::invalid_argument("embed: source level must divide target");
  if (x.level == to_level) return x;
  if (is_zero(x)) return zero(to_level);
  const Level& src = at(x.level);
  const Level& dst = at(to_level);
  int64_t factor = dst.units / src.units;
  return {to_level, static_cast<int32_t>(static_cast<int64_t>(x.value) % src.units * factor % dst.units)};
}

int FieldTower::trace_abs(const FieldElement& x) const {
  if (is_zero(x)) return 0;
  return at(x.level).trace[x.value];
}

FieldElement FieldTower::enum_elem(int d, int64_t index) const {
  if (index == 0) return zero(d);
  return from_dlog(d, index - 1);
}

uint32_t FieldTower::packed(const FieldElement& x) const {
  if (is_zero(x)) return 0;
  return at(x.level).pow_packed[x.value];
}

const std::vector<int>& FieldTower::defining_poly(int d) const { return at(d).defpoly; }

}  // namespace glchar
