// Rank-stratum counting tests: closed forms against exhaustive enumeration,
// column-sum identities, and invariance under the choice of rank-one A.

#include "doctest.h"

#include "glchar/strata.hpp"

using namespace glchar;

namespace {

MatF elementary(const FieldTower& T, int n, int i, int j) {
  MatF a = mat_zero(T, 1, n, n);
  a.at(i, j) = T.one(1);
  return a;
}

}  // namespace

TEST_CASE("gaussian binomials and rank counts") {
  CHECK(gaussian_binomial(3, 0, 2) == 1);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(3, 3, 2) == 1);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  // symmetry [n r] = [n, n-r]
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r)
      CHECK(gaussian_binomial(n, r, 2) == gaussian_binomial(n, n - r, 2));
  // rank counts add up to all matrices
  for (int64_t q : {2LL, 3LL, 4LL}) {
    BigInt total = 0, all = 1;
    for (int r = 0; r <= 3; ++r) total += rank_count(3, 3, r, q);
    for (int i = 0; i < 9; ++i) all *= q;
    CHECK(total == all);
    // invertible count is the GL order
    BigInt gl = 1;
    for (int i = 0; i < 3; ++i) {
      BigInt qi = 1;
      for (int j = 0; j < i; ++j) qi *= q;
      BigInt q3 = q * q * q;
      gl *= (q3 - qi);
    }
    CHECK(rank_count(3, 3, 3, q) == gl);
  }
  CHECK(rank_count(2, 3, 1, 2) == 21);  // (2^2-1)/(2-1) * (2^3-1) = 3 * 7
}

TEST_CASE("closed stratum counts match brute force for rank-one A") {
  for (int64_t q : {2LL, 3LL, 4LL}) {
    int p = q == 4 ? 2 : static_cast<int>(q);
    int f = q == 4 ? 2 : 1;
    FieldTower T = FieldTower::build(p, f, 1);
    MatF A = elementary(T, 3, 0, 0);
    for (int r = 0; r <= 3; ++r) {
      BigInt zero_cnt = strata_count_brute(T, A, r, T.zero(1));
      CHECK(zero_cnt == strata_count_closed_n3(q, r, true));
      // every nonzero alpha gives the same count
      BigInt ref = strata_count_closed_n3(q, r, false);
      for (int64_t k = 0; k < T.unit_order(1); ++k)
        CHECK(strata_count_brute(T, A, r, T.from_dlog(1, k)) == ref);
    }
  }
}

TEST_CASE("stratum counts at q = 2 take their frozen values") {
  CHECK(strata_count_closed_n3(2, 0, true) == 1);
  CHECK(strata_count_closed_n3(2, 0, false) == 0);
  CHECK(strata_count_closed_n3(2, 1, true) == 33);
  CHECK(strata_count_closed_n3(2, 1, false) == 16);
  CHECK(strata_count_closed_n3(2, 2, true) == 150);
  CHECK(strata_count_closed_n3(2, 2, false) == 144);
  CHECK(strata_count_closed_n3(2, 3, true) == 72);
  CHECK(strata_count_closed_n3(2, 3, false) == 96);
}

TEST_CASE("summing a stratum over alpha recovers the rank count") {
  for (int64_t q : {2LL, 3LL, 5LL}) {
    for (int r = 0; r <= 3; ++r) {
      BigInt total = strata_count_closed_n3(q, r, true) +
                     BigInt(q - 1) * strata_count_closed_n3(q, r, false);
      CHECK(total == rank_count(3, 3, r, q));
    }
  }
}

TEST_CASE("any rank-one A gives the same strata as the elementary one") {
  // X -> u X v with invertible u, v permutes each rank stratum and transports
  // the trace form; all rank-one A are equivalent in this sense
  FieldTower T = FieldTower::build(3, 1, 1);
  MatF A13 = elementary(T, 3, 0, 2);
  MatF A11 = elementary(T, 3, 0, 0);
  // a denser rank-one example: rows proportional
  MatF dense = mat_zero(T, 1, 3, 3);
  for (int j = 0; j < 3; ++j) dense.at(0, j) = T.from_int(1, j + 1);
  for (int j = 0; j < 3; ++j) dense.at(2, j) = T.from_int(1, 2 * (j + 1));
  REQUIRE(mat_rank(T, dense) == 1);
  for (int r = 0; r <= 3; ++r) {
    for (int64_t i = 0; i < T.enum_size(1); ++i) {
      FieldElement alpha = T.enum_elem(1, i);
      BigInt a = strata_count_brute(T, A13, r, alpha);
      CHECK(a == strata_count_brute(T, A11, r, alpha));
      CHECK(a == strata_count_brute(T, dense, r, alpha));
      CHECK(a == strata_count_closed_n3(3, r, T.is_zero(alpha)));
    }
  }
}

TEST_CASE("brute counter also handles n = 2 and higher-rank A") {
  FieldTower T = FieldTower::build(2, 1, 1);
  MatF I2 = mat_identity(T, 1, 2);
  // n = 2 over F_2: 16 matrices, ranks 1/9/6 for r = 0/1/2
  BigInt by_rank[3] = {0, 0, 0};
  for (int r = 0; r <= 2; ++r) {
    for (int64_t i = 0; i < 2; ++i)
      by_rank[r] += strata_count_brute(T, I2, r, T.enum_elem(1, i));
    CHECK(by_rank[r] == rank_count(2, 2, r, 2));
  }
  // trace splits GL(2, F_2): four trace-0 elements (I and transvections),
  // two trace-1 elements (order 3)
  CHECK(strata_count_brute(T, I2, 2, T.zero(1)) == 4);
  CHECK(strata_count_brute(T, I2, 2, T.one(1)) == 2);
}
