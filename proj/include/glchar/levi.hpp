#pragma once
// The two mirabolic-type subgroups of GL(n, F_q): M1 (last row e_n^T) and its
// mirror M2 = w0 M1^T w0^{-1} (first column e_1), the upper unitriangular
// subgroup U with its generic character mu, and the character of Ind_U^M(mu)
// computed three ways: coset sums over a transversal, an explicit monomial
// model, and (n = 3) a closed-form classification into ten unipotent types.

#include "glchar/charfn.hpp"
#include "glchar/cyclo.hpp"
#include "glchar/matfq.hpp"

#include <random>
#include <vector>

namespace glchar {

MatF w0_matrix(const FieldTower& T, int n);                // antidiagonal ones
MatF mirror_transpose(const FieldTower& T, const MatF& m);  // w0 m^T w0^{-1}

bool in_M1(const FieldTower& T, const MatF& m);  // invertible, last row e_n^T
bool in_M2(const FieldTower& T, const MatF& m);  // invertible, first column e_1
bool in_unitriangular(const FieldTower& T, const MatF& m);

std::vector<MatF> enumerate_M1(const FieldTower& T, int n);
std::vector<MatF> enumerate_M2(const FieldTower& T, int n);
std::vector<MatF> enumerate_unitriangular(const FieldTower& T, int n);
std::vector<MatF> enumerate_GL(const FieldTower& T, int n);

// uniform random elements (rejection sampling where needed)
MatF random_mat(const FieldTower& T, int level, int rows, int cols, std::mt19937_64& rng);
MatF random_gl(const FieldTower& T, int n, std::mt19937_64& rng);
MatF random_m1(const FieldTower& T, int n, std::mt19937_64& rng);
MatF random_m2(const FieldTower& T, int n, std::mt19937_64& rng);

// mu(u) = psi0(u_{1,2} + u_{2,3} + ... + u_{n-1,n}) for unitriangular u
int mu_exponent(const AdditiveChar& psi, const MatF& u);
CycloInt mu_eval(const AdditiveChar& psi, const MatF& u);

// unique representative of the coset g U: reduce columns left to right by
// earlier reduced columns, keeping each column's bottom-most nonzero entry
MatF coset_canonical_rep(const FieldTower& T, const MatF& g);

// canonical representatives of the g U cosets met in the listed elements
std::vector<MatF> coset_transversal(const FieldTower& T, const std::vector<MatF>& group);

// trace of Ind_U^M(mu) at m: sum of mu(t^-1 m t) over transversal members
// with t^-1 m t unitriangular
CycloInt induced_char_cosets(const FieldTower& T, const AdditiveChar& psi,
                             const std::vector<MatF>& transversal, const MatF& m);

// the monomial matrix of m on the canonical-representative basis:
// entry (j, i) = mu(u) where m t_i = t_j u; exactly one entry per column
std::vector<std::vector<CycloInt>> induced_rep_matrix(const FieldTower& T, const AdditiveChar& psi,
                                                      const std::vector<MatF>& transversal,
                                                      const MatF& m);
CycloInt induced_char_model(const FieldTower& T, const AdditiveChar& psi,
                            const std::vector<MatF>& transversal, const MatF& m);

// the ten unipotent types for n = 3; 0 means no type (non-unipotent)
int classify_type_m1(const FieldTower& T, const MatF& m);
int classify_type_m2(const FieldTower& T, const MatF& m);
// common character value on a type class (type 0 gives 0)
BigInt type_value(int64_t q, int type);

// closed-form transversals for n = 3: diagonal part plus a second family
std::vector<MatF> transversal_closed_m1(const FieldTower& T);
std::vector<MatF> transversal_closed_m2(const FieldTower& T);

}  // namespace glchar
