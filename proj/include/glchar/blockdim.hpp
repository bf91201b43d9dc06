#pragma once
// Kernel dimensions of 2x2 block upper-triangular matrices through the rank
// identity
//   rank [[P, X], [0, Q]] = rank P + rank Q + dim(X Ker Q) - dim(X Ker Q ∩ Im P),
// specialised to h - 1 for h = [[m1, X], [0, m2]] with unipotent blocks, and
// checked against direct elimination on the assembled matrix.

#include "glchar/matfq.hpp"

namespace glchar {

// columns form a basis of the kernel / column space of x (any shape)
MatF kernel_basis(const FieldTower& T, const MatF& x);
MatF image_basis(const FieldTower& T, const MatF& x);

// dim of span(columns of u) ∩ span(columns of v); u and v share a row count
int span_intersection_dim(const FieldTower& T, const MatF& u, const MatF& v);

// rank of [[P, X], [0, Q]] by the identity above (any square blocks, one level)
int rank_block_formula(const FieldTower& T, const MatF& P, const MatF& X, const MatF& Q);

bool is_unipotent(const FieldTower& T, const MatF& m);

// dim Ker(h - 1), h = [[m1, X], [0, m2]], m1 and m2 unipotent; computed as
// dim Ker(m1-1) + dim Ker(m2-1) - dim(X W') + dim(X W' ∩ Im(m1-1)), W' = Ker(m2-1)
int ker_dim_formula(const FieldTower& T, const MatF& m1, const MatF& m2, const MatF& X);

// the same quantity from the assembled 2n x 2n matrix (any blocks)
int ker_dim_direct(const FieldTower& T, const MatF& m1, const MatF& m2, const MatF& X);

}  // namespace glchar
