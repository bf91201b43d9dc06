#include "glchar/blockdim.hpp"

#include <stdexcept>

namespace glchar {

namespace {

// row echelon form in place; returns pivot columns
std::vector<int> row_echelon(const FieldTower& T, MatF& x) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < x.cols && row < x.rows; ++col) {
    int sel = -1;
    for (int i = row; i < x.rows; ++i)
      if (!T.is_zero(x.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < x.cols; ++j) std::swap(x.at(row, j), x.at(sel, j));
    FieldElement inv = T.inv(x.at(row, col));
    for (int j = col; j < x.cols; ++j) x.at(row, j) = T.mul(inv, x.at(row, j));
    for (int i = 0; i < x.rows; ++i) {
      if (i == row || T.is_zero(x.at(i, col))) continue;
      FieldElement f = x.at(i, col);
      for (int j = col; j < x.cols; ++j) x.at(i, j) = T.sub(x.at(i, j), T.mul(f, x.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

MatF kernel_basis(const FieldTower& T, const MatF& x) {
  MatF r = x;
  std::vector<int> pivots = row_echelon(T, r);
  std::vector<int> pivot_of_col(static_cast<size_t>(x.cols), -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
  int k = x.cols - static_cast<int>(pivots.size());
  MatF basis = mat_zero(T, x.level, x.cols, k);
  int out = 0;
  for (int col = 0; col < x.cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    basis.at(col, out) = T.one(x.level);
    for (size_t i = 0; i < pivots.size(); ++i)
      basis.at(pivots[i], out) = T.neg(r.at(static_cast<int>(i), col));
    ++out;
  }
  return basis;
}

MatF image_basis(const FieldTower& T, const MatF& x) {
  MatF r = x;
  std::vector<int> pivots = row_echelon(T, r);
  MatF basis = mat_zero(T, x.level, x.rows, static_cast<int>(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < x.rows; ++i) basis.at(i, static_cast<int>(j)) = x.at(i, pivots[j]);
  return basis;
}

int span_intersection_dim(const FieldTower& T, const MatF& u, const MatF& v) {
  if (u.rows != v.rows || u.level != v.level) throw std::invalid_argument("spans live in different spaces");
  MatF joint = mat_zero(T, u.level, u.rows, u.cols + v.cols);
  for (int i = 0; i < u.rows; ++i) {
    for (int j = 0; j < u.cols; ++j) joint.at(i, j) = u.at(i, j);
    for (int j = 0; j < v.cols; ++j) joint.at(i, u.cols + j) = v.at(i, j);
  }
  return mat_rank(T, u) + mat_rank(T, v) - mat_rank(T, joint);
}

int rank_block_formula(const FieldTower& T, const MatF& P, const MatF& X, const MatF& Q) {
  MatF K = kernel_basis(T, Q);
  MatF XK = mat_mul(T, X, K);
  MatF imgP = image_basis(T, P);
  return mat_rank(T, P) + mat_rank(T, Q) + mat_rank(T, XK) - span_intersection_dim(T, XK, imgP);
}

bool is_unipotent(const FieldTower& T, const MatF& m) {
  if (m.rows != m.cols) return false;
  MatF nil = mat_sub(T, m, mat_identity(T, m.level, m.rows));
  MatF pw = nil;
  for (int i = 1; i < m.rows; ++i) pw = mat_mul(T, pw, nil);
  return pw == mat_zero(T, m.level, m.rows, m.cols);
}

int ker_dim_formula(const FieldTower& T, const MatF& m1, const MatF& m2, const MatF& X) {
  if (!is_unipotent(T, m1) || !is_unipotent(T, m2))
    throw std::invalid_argument("kernel decomposition needs unipotent diagonal blocks");
  MatF I = mat_identity(T, m1.level, m1.rows);
  MatF P = mat_sub(T, m1, I);
  MatF Q = mat_sub(T, m2, I);
  MatF W = kernel_basis(T, Q);
  MatF XW = mat_mul(T, X, W);
  return ker_dim(T, P) + ker_dim(T, Q) - mat_rank(T, XW) +
         span_intersection_dim(T, XW, image_basis(T, P));
}

int ker_dim_direct(const FieldTower& T, const MatF& m1, const MatF& m2, const MatF& X) {
  MatF h = mat_block2x2(T, m1, X, mat_zero(T, m1.level, m2.rows, m1.cols), m2);
  return ker_dim(T, mat_sub(T, h, mat_identity(T, h.level, h.rows)));
}

}  // namespace glchar
