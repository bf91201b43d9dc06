// Field tower tests: axioms, embeddings, Frobenius, trace, enumeration.

#include "doctest.h"

#include "glchar/gf.hpp"

#include <cstdint>
#include <map>
#include <vector>

using glchar::FieldElement;
using glchar::FieldTower;

namespace {

// Exhaustive field-axiom check at one level (sizes kept small by callers).
void check_axioms(const FieldTower& T, int d) {
  int64_t s = T.enum_size(d);
  FieldElement z = T.zero(d), e = T.one(d);
  for (int64_t i = 0; i < s; ++i) {
    FieldElement a = T.enum_elem(d, i);
    CHECK(T.add(a, z) == a);
    CHECK(T.mul(a, e) == a);
    CHECK(T.is_zero(T.add(a, T.neg(a))));
    CHECK(T.is_zero(T.sub(a, a)));
    if (!T.is_zero(a)) {
      CHECK(T.mul(a, T.inv(a)) == e);
      CHECK(T.pow(a, T.unit_order(d)) == e);
    }
    for (int64_t j = 0; j < s; ++j) {
      FieldElement b = T.enum_elem(d, j);
      CHECK(T.add(a, b) == T.add(b, a));
      CHECK(T.mul(a, b) == T.mul(b, a));
      for (int64_t k = 0; k < s; k += 3) {
        FieldElement c = T.enum_elem(d, k);
        CHECK(T.add(T.add(a, b), c) == T.add(a, T.add(b, c)));
        CHECK(T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c)));
        CHECK(T.mul(a, T.add(b, c)) == T.add(T.mul(a, b), T.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively in small towers") {
  check_axioms(FieldTower::build(2, 1, 2), 2);
  check_axioms(FieldTower::build(2, 1, 3), 3);
  check_axioms(FieldTower::build(3, 1, 2), 2);
  check_axioms(FieldTower::build(5, 1, 1), 1);
  check_axioms(FieldTower::build(2, 2, 2), 2);  // q = 4, top field F_16
}

TEST_CASE("characteristic and prime subfield behave correctly") {
  FieldTower T = FieldTower::build(3, 1, 2);
  FieldElement e = T.one(2);
  FieldElement s = T.add(T.add(e, e), e);
  CHECK(T.is_zero(s));
  CHECK(T.from_int(2, 3) == T.zero(2));
  CHECK(T.from_int(2, 4) == T.one(2));
  CHECK(T.from_int(2, -1) == T.neg(T.one(2)));
}

TEST_CASE("embeddings are injective ring homomorphisms") {
  // All proper level pairs of the degree-6 tower over F_2.
  FieldTower T = FieldTower::build(2, 1, 6);
  for (int d : T.levels()) {
    for (int e : T.levels()) {
      if (e <= d || e % d != 0) continue;
      int64_t s = T.enum_size(d);
      std::map<int32_t, int64_t> seen;
      for (int64_t i = 0; i < s; ++i) {
        FieldElement a = T.enum_elem(d, i);
        FieldElement ae = T.embed(a, e);
        CHECK(ae.level == e);
        CHECK(!seen.count(ae.value));
        seen[ae.value] = i;
        for (int64_t j = 0; j < s; ++j) {
          FieldElement b = T.enum_elem(d, j);
          CHECK(T.embed(T.add(a, b), e) == T.add(ae, T.embed(b, e)));
          CHECK(T.embed(T.mul(a, b), e) == T.mul(ae, T.embed(b, e)));
        }
      }
      CHECK(T.embed(T.one(d), e) == T.one(e));
      // the compatible embedding is the dlog power map
      int64_t stretch = T.unit_order(e) / T.unit_order(d);
      FieldElement g = T.gen(d);
      CHECK(T.embed(g, e) == T.from_dlog(e, stretch));
    }
  }
}

TEST_CASE("embeddings compose transitively through intermediate levels") {
  FieldTower T = FieldTower::build(2, 1, 6);
  for (int64_t i = 0; i < T.enum_size(1); ++i) {
    FieldElement a = T.enum_elem(1, i);
    CHECK(T.embed(T.embed(a, 2), 6) == T.embed(a, 6));
    CHECK(T.embed(T.embed(a, 3), 6) == T.embed(a, 6));
  }
  for (int64_t i = 0; i < T.enum_size(2); ++i) {
    FieldElement a = T.enum_elem(2, i);
    CHECK(T.embed(a, 2) == a);
  }
}

TEST_CASE("frobenius is a field automorphism fixing exactly the base field") {
  FieldTower T = FieldTower::build(3, 1, 2);
  int64_t s = T.enum_size(2);
  for (int64_t i = 0; i < s; ++i) {
    FieldElement a = T.enum_elem(2, i);
    FieldElement fa = T.frobenius(a);
    CHECK(fa == T.pow(a, T.q()));
    CHECK(T.frobenius(a, 2) == a);  // order divides the level
    for (int64_t j = 0; j < s; ++j) {
      FieldElement b = T.enum_elem(2, j);
      CHECK(T.frobenius(T.add(a, b)) == T.add(fa, T.frobenius(b)));
      CHECK(T.frobenius(T.mul(a, b)) == T.mul(fa, T.frobenius(b)));
    }
  }
  // fixed points of Frobenius = embedded prime field (q = p here)
  int fixed = 0;
  for (int64_t i = 0; i < s; ++i) {
    FieldElement a = T.enum_elem(2, i);
    if (T.frobenius(a) == a) ++fixed;
  }
  CHECK(fixed == 3);
}

TEST_CASE("absolute trace is additive, F_p-linear, and balanced") {
  for (auto [p, f, m] : {std::tuple<int, int, int>{2, 1, 4}, {3, 1, 2}, {2, 2, 2}}) {
    FieldTower T = FieldTower::build(p, f, m);
    int d = m;
    int64_t s = T.enum_size(d);
    std::vector<int64_t> count(p, 0);
    for (int64_t i = 0; i < s; ++i) {
      FieldElement a = T.enum_elem(d, i);
      ++count[T.trace_abs(a)];
      CHECK(T.trace_abs(T.frobenius(a)) == T.trace_abs(a));
      for (int64_t j = 0; j < s; j += 5) {
        FieldElement b = T.enum_elem(d, j);
        CHECK(T.trace_abs(T.add(a, b)) == (T.trace_abs(a) + T.trace_abs(b)) % p);
      }
    }
    // each trace value is attained equally often
    for (int c = 0; c < p; ++c) CHECK(count[c] == s / p);
  }
}

TEST_CASE("trace on a subfield element matches the subfield trace times degree ratio") {
  // For x in F_{q^d} embedded into F_{q^e}: Tr_abs over the big field equals
  // (e/d) * Tr_abs over the small field, since the trace stacks through levels.
  FieldTower T = FieldTower::build(2, 1, 6);
  for (int d : {1, 2, 3}) {
    for (int e : {6}) {
      if (e % d != 0) continue;
      for (int64_t i = 0; i < T.enum_size(d); ++i) {
        FieldElement a = T.enum_elem(d, i);
        int expect = (e / d) * T.trace_abs(a) % T.p();
        CHECK(T.trace_abs(T.embed(a, e)) == expect);
      }
    }
  }
}

TEST_CASE("generators have full multiplicative order") {
  FieldTower T = FieldTower::build(2, 1, 6);
  for (int d : T.levels()) {
    FieldElement g = T.gen(d);
    int64_t n = T.unit_order(d);
    CHECK(T.pow(g, n) == T.one(d));
    for (int64_t l : {2LL, 3LL, 7LL}) {
      if (n % l == 0) CHECK(!(T.pow(g, n / l) == T.one(d)));
    }
  }
}

TEST_CASE("enumeration is a bijection and from_dlog wraps") {
  FieldTower T = FieldTower::build(3, 1, 2);
  std::map<int32_t, int64_t> seen;
  for (int64_t i = 0; i < T.enum_size(2); ++i) {
    FieldElement a = T.enum_elem(2, i);
    int32_t key = T.is_zero(a) ? -1 : a.value;
    CHECK(!seen.count(key));
    seen[key] = i;
  }
  CHECK((int64_t)seen.size() == T.enum_size(2));
  CHECK(T.from_dlog(2, 8) == T.one(2));
  CHECK(T.from_dlog(2, 9) == T.gen(2));
  CHECK(T.from_dlog(2, -1) == T.from_dlog(2, 7));
}

TEST_CASE("defining polynomials are monic and vanish on the residue class of x") {
  FieldTower T = FieldTower::build(2, 1, 6);
  for (int d : T.levels()) {
    const std::vector<int>& dp = T.defining_poly(d);
    CHECK((int)dp.size() == T.f() * d + 1);
    CHECK(dp.back() == 1);
    // the modulus of the representation must split in its own level; count roots
    auto eval_at = [&](const FieldElement& x) {
      FieldElement acc = T.zero(d);
      for (int j = T.f() * d; j >= 0; --j)
        acc = T.add(T.mul(acc, x), T.from_int(d, dp[j]));
      return acc;
    };
    int roots = 0;
    for (int64_t i = 0; i < T.enum_size(d); ++i)
      if (T.is_zero(eval_at(T.enum_elem(d, i)))) ++roots;
    CHECK(roots == T.f() * d);  // separable irreducible: full set of conjugate roots
    // in particular the class of x itself (packed value p) is one of them
    for (int64_t i = 0; i < T.enum_size(d); ++i) {
      FieldElement e = T.enum_elem(d, i);
      if (T.packed(e) == static_cast<uint32_t>(T.p()))
        CHECK(T.is_zero(eval_at(e)));
    }
  }
}

TEST_CASE("invalid tower parameters are rejected") {
  CHECK_THROWS(FieldTower::build(4, 1, 2));   // p not prime
  CHECK_THROWS(FieldTower::build(2, 1, 0));   // m < 1
  CHECK_THROWS(FieldTower::build(2, 1, 25));  // table cap
  FieldTower T = FieldTower::build(2, 1, 2);
  CHECK_THROWS(T.inv(T.zero(2)));
  CHECK_THROWS(T.zero(3));  // 3 does not divide 2
}
