// Matrix/polynomial layer tests: characteristic polynomial against an
// independent oracle, rank behavior, irreducible-power detection, and root
// lookup in extension fields.

#include "doctest.h"

#include "glchar/matfq.hpp"

#include <random>
#include <vector>

using namespace glchar;

namespace {

MatF random_mat(const FieldTower& T, int level, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> pick(0, T.enum_size(level) - 1);
  MatF x = mat_zero(T, level, n, n);
  for (auto& e : x.a) e = T.enum_elem(level, pick(rng));
  return x;
}

MatF random_invertible(const FieldTower& T, int level, int n, std::mt19937_64& rng) {
  for (;;) {
    MatF x = random_mat(T, level, n, rng);
    if (mat_invertible(T, x)) return x;
  }
}

// companion matrix of a monic polynomial
MatF companion(const FieldTower& T, const PolyF& f) {
  int n = f.degree();
  MatF c = mat_zero(T, f.level, n, n);
  for (int i = 1; i < n; ++i) c.at(i, i - 1) = T.one(f.level);
  for (int i = 0; i < n; ++i) c.at(i, n - 1) = T.neg(f.c[i]);
  return c;
}

}  // namespace

TEST_CASE("characteristic polynomial matches the Laplace-expansion oracle") {
  std::mt19937_64 rng(0xC0FFEE);
  for (auto [p, m] : {std::pair<int, int>{2, 6}, {3, 4}}) {
    FieldTower T = FieldTower::build(p, 1, m);
    for (int n : {1, 2, 3, 4}) {
      for (int trial = 0; trial < 40; ++trial) {
        MatF g = random_mat(T, 1, n, rng);
        CHECK(charpoly(T, g) == charpoly_reference(T, g));
      }
    }
    // a couple of 6x6 spot checks against the slow oracle
    for (int trial = 0; trial < 3; ++trial) {
      MatF g = random_mat(T, 1, std::min(m, 6), rng);
      CHECK(charpoly(T, g) == charpoly_reference(T, g));
    }
  }
}

TEST_CASE("characteristic polynomial basics") {
  FieldTower T = FieldTower::build(2, 1, 6);
  PolyF cp = charpoly(T, mat_identity(T, 1, 3));
  // (x - 1)^3 over F_2 = x^3 + x^2 + x + 1
  CHECK(cp.degree() == 3);
  CHECK(poly_is_monic(T, cp));
  CHECK(poly_eval(T, cp, T.one(1)) == T.zero(1));
  // charpoly is a conjugation invariant
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    MatF g = random_mat(T, 1, 4, rng);
    MatF s = random_invertible(T, 1, 4, rng);
    MatF conj = mat_mul(T, mat_mul(T, s, g), mat_inverse(T, s));
    CHECK(charpoly(T, conj) == charpoly(T, g));
  }
  // constant term is det(-g): for the companion of f, charpoly = f
  PolyF f = poly_zero(1);
  f.level = 1;
  f.c = {T.one(1), T.zero(1), T.gen(1), T.one(1)};  // x^3 + g*x^2 + 1 (level-1 entries)
  f = poly_trim(f, T);
  CHECK(charpoly(T, companion(T, f)) == f);
}

TEST_CASE("companion matrices reproduce their polynomial for many random monics") {
  std::mt19937_64 rng(23);
  FieldTower T = FieldTower::build(3, 1, 4);
  std::uniform_int_distribution<int64_t> pick(0, T.enum_size(1) - 1);
  for (int deg : {2, 3, 4, 5}) {
    for (int trial = 0; trial < 30; ++trial) {
      PolyF f;
      f.level = 1;
      f.c.resize(deg + 1);
      for (int i = 0; i < deg; ++i) f.c[i] = T.enum_elem(1, pick(rng));
      f.c[deg] = T.one(1);
      CHECK(charpoly(T, companion(T, f)) == f);
    }
  }
}

TEST_CASE("rank, kernel, inverse") {
  FieldTower T = FieldTower::build(2, 1, 6);
  std::mt19937_64 rng(5);
  CHECK(mat_rank(T, mat_identity(T, 1, 4)) == 4);
  CHECK(mat_rank(T, mat_zero(T, 1, 4, 4)) == 0);
  for (int trial = 0; trial < 100; ++trial) {
    MatF x = random_mat(T, 1, 4, rng);
    int r = mat_rank(T, x);
    CHECK(r == mat_rank(T, mat_transpose(x)));
    CHECK(ker_dim(T, x) == 4 - r);
    CHECK(mat_invertible(T, x) == (r == 4));
    if (r == 4) {
      MatF xi = mat_inverse(T, x);
      CHECK(mat_mul(T, x, xi) == mat_identity(T, 1, 4));
      CHECK(mat_mul(T, xi, x) == mat_identity(T, 1, 4));
    }
    // rank is subadditive and invariant under invertible scaling
    MatF y = random_mat(T, 1, 4, rng);
    CHECK(mat_rank(T, mat_mul(T, x, y)) <= std::min(mat_rank(T, x), mat_rank(T, y)));
    MatF s = random_invertible(T, 1, 4, rng);
    MatF sx = mat_mul(T, s, x);
    CHECK(mat_rank(T, sx) == r);
  }
  // rank-one outer product
  MatF u = mat_zero(T, 1, 3, 1), v = mat_zero(T, 1, 1, 3);
  u.at(0, 0) = T.one(1);
  u.at(2, 0) = T.gen(1);
  v.at(0, 0) = T.one(1);
  v.at(0, 2) = T.one(1);
  CHECK(mat_rank(T, mat_mul(T, u, v)) == 1);
}

TEST_CASE("polynomial arithmetic agrees with evaluation") {
  FieldTower T = FieldTower::build(2, 1, 6);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int64_t> pick(0, T.enum_size(1) - 1);
  auto rand_poly = [&](int maxdeg) {
    PolyF f;
    f.level = 1;
    std::uniform_int_distribution<int> d(0, maxdeg);
    f.c.resize(d(rng) + 1);
    for (auto& c : f.c) c = T.enum_elem(1, pick(rng));
    return poly_trim(f, T);
  };
  for (int trial = 0; trial < 200; ++trial) {
    PolyF f = rand_poly(5), g = rand_poly(5);
    for (int64_t i = 0; i < T.enum_size(6); i += 13) {
      FieldElement x = T.enum_elem(6, i);
      FieldElement lhs = poly_eval(T, poly_mul(T, f, g), x);
      CHECK(lhs == T.mul(poly_eval(T, f, x), poly_eval(T, g, x)));
      CHECK(poly_eval(T, poly_add(T, f, g), x) ==
            T.add(poly_eval(T, f, x), poly_eval(T, g, x)));
    }
    if (g.degree() >= 0 && !(g == poly_zero(1))) {
      auto [qt, rm] = poly_divmod(T, f, g);
      CHECK(poly_add(T, poly_mul(T, qt, g), rm) == f);
      CHECK(rm.degree() < g.degree());
    }
  }
}

TEST_CASE("gcd is monic and divides both arguments") {
  FieldTower T = FieldTower::build(3, 1, 2);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int64_t> pick(0, T.enum_size(1) - 1);
  auto rand_poly = [&](int deg) {
    PolyF f;
    f.level = 1;
    f.c.resize(deg + 1);
    for (auto& c : f.c) c = T.enum_elem(1, pick(rng));
    return poly_trim(f, T);
  };
  for (int trial = 0; trial < 100; ++trial) {
    PolyF a = rand_poly(4), b = rand_poly(3);
    if (a.c.empty() && b.c.empty()) continue;
    PolyF g = poly_gcd(T, a, b);
    CHECK(poly_is_monic(T, g));
    if (!a.c.empty()) CHECK(poly_divmod(T, a, g).second.c.empty());
    if (!b.c.empty()) CHECK(poly_divmod(T, b, g).second.c.empty());
  }
}

TEST_CASE("power-of-irreducible detection") {
  FieldTower T = FieldTower::build(2, 1, 6);
  // x^2 + x + 1 is irreducible over F_2; its square and cube are pure powers
  PolyF h;
  h.level = 1;
  h.c = {T.one(1), T.one(1), T.one(1)};
  for (int e = 1; e <= 3; ++e) {
    PolyF f = poly_one(T, 1);
    for (int i = 0; i < e; ++i) f = poly_mul(T, f, h);
    auto r = power_of_irreducible(T, f);
    REQUIRE(r.has_value());
    CHECK(r->h == h);
    CHECK(r->e == e);
  }
  // (x)(x+1) = x^2 + x is not a power of one irreducible
  PolyF split;
  split.level = 1;
  split.c = {T.zero(1), T.one(1), T.one(1)};
  CHECK(!power_of_irreducible(T, split).has_value());
  // charpoly of identity = (x-1)^n is a pure power
  auto rid = power_of_irreducible(T, charpoly(T, mat_identity(T, 1, 6)));
  REQUIRE(rid.has_value());
  CHECK(rid->h.degree() == 1);
  CHECK(rid->e == 6);
}

TEST_CASE("every invertible 3x3 over F_2 classifies consistently") {
  // brute check: power_of_irreducible(charpoly) succeeds iff the charpoly has a
  // single irreducible factor; cross-validate via gcd with x^(2^d) - x
  FieldTower T = FieldTower::build(2, 1, 6);
  int pure = 0, mixed = 0;
  for (int bits = 0; bits < 512; ++bits) {
    MatF g = mat_zero(T, 1, 3, 3);
    for (int k = 0; k < 9; ++k)
      g.a[k] = (bits >> k) & 1 ? T.one(1) : T.zero(1);
    if (!mat_invertible(T, g)) continue;
    PolyF cp = charpoly(T, g);
    auto r = power_of_irreducible(T, cp);
    if (r) {
      ++pure;
      PolyF pw = poly_one(T, 1);
      for (int i = 0; i < r->e; ++i) pw = poly_mul(T, pw, r->h);
      CHECK(pw == cp);
    } else {
      ++mixed;
    }
  }
  CHECK(pure + mixed == 168);  // |GL(3, F_2)|
  CHECK(pure > 0);
  CHECK(mixed > 0);
}

TEST_CASE("roots in extension levels") {
  FieldTower T = FieldTower::build(2, 1, 6);
  // the defining polynomial of level d has the generator construction root
  for (int d : {1, 2, 3, 6}) {
    PolyF h;
    h.level = 1;
    for (int c : T.defining_poly(d)) h.c.push_back(T.from_int(1, c));
    h = poly_trim(h, T);
    FieldElement z = root_in_extension(T, h);
    CHECK(z.level == d);
    CHECK(T.is_zero(poly_eval(T, h, z)));
  }
  // degree not dividing m is rejected: x^4 + x + 1 over the degree-6 tower
  PolyF h4;
  h4.level = 1;
  h4.c = {T.one(1), T.one(1), T.zero(1), T.zero(1), T.one(1)};
  CHECK_THROWS(root_in_extension(T, h4));
}

TEST_CASE("kernel dimension over an extension matches the embedded computation") {
  FieldTower T = FieldTower::build(2, 1, 6);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    MatF g = random_mat(T, 1, 4, rng);
    for (int d : {1, 2, 3}) {
      std::uniform_int_distribution<int64_t> pick(0, T.enum_size(d) - 1);
      FieldElement z = T.enum_elem(d, pick(rng));
      MatF ge = mat_embed(T, g, d);
      MatF diff = mat_sub(T, ge, mat_scalar(T, 4, z));
      CHECK(ker_dim_over_extension(T, g, z) == ker_dim(T, diff));
    }
  }
}

TEST_CASE("block assembly and trace") {
  FieldTower T = FieldTower::build(2, 1, 2);
  MatF a = mat_identity(T, 1, 2);
  MatF b = mat_zero(T, 1, 2, 2);
  b.at(0, 1) = T.one(1);
  MatF m = mat_block2x2(T, a, b, mat_zero(T, 1, 2, 2), a);
  CHECK(m.rows == 4);
  CHECK(m.at(0, 3) == T.one(1));
  CHECK(m.at(2, 2) == T.one(1));
  CHECK(mat_trace(T, m) == T.zero(1));  // 4 ones in characteristic 2
  MatF c = mat_identity(T, 1, 3);
  CHECK(mat_trace(T, c) == T.one(1));
}

TEST_CASE("matrix literals parse and format as inverses") {
  FieldTower T = FieldTower::build(2, 1, 6);
  MatF x = parse_mat(T, 1, 3, 3, "1,0,0;0,1,0;0,0,1");
  CHECK(x == mat_identity(T, 1, 3));
  std::string s = format_mat(T, x);
  CHECK(parse_mat(T, 1, 3, 3, s) == x);
  std::mt19937_64 rng(31);
  FieldTower T3 = FieldTower::build(3, 1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    MatF g = random_mat(T3, 1, 3, rng);
    CHECK(parse_mat(T3, 1, 3, 3, format_mat(T3, g)) == g);
  }
  CHECK_THROWS(parse_mat(T, 1, 2, 2, "1,0;0"));    // wrong shape
  CHECK_THROWS(parse_mat(T, 1, 2, 2, "1,0;0,x"));  // bad entry
}
