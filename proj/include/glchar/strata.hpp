#pragma once
// Counts of rank strata cut by a linear trace condition: the number of n x n
// matrices X over F_q with rank(X) = r and tr(A X) = alpha. Exhaustive counts
// for any A; closed forms in q for n = 3 and rank-one A, where the count
// depends on alpha only through whether alpha is zero.

#include "glchar/cyclo.hpp"
#include "glchar/matfq.hpp"

namespace glchar {

// exhaustive count over all q^(n^2) matrices; errors when that exceeds 2^27
BigInt strata_count_brute(const FieldTower& T, const MatF& A, int r, const FieldElement& alpha);

// closed form for n = 3, A of rank one
BigInt strata_count_closed_n3(int64_t q, int r, bool alpha_zero);

// Gaussian binomial coefficient [n choose r]_q
BigInt gaussian_binomial(int n, int r, int64_t q);

// number of rows x cols matrices over F_q of rank r
BigInt rank_count(int rows, int cols, int r, int64_t q);

}  // namespace glchar
