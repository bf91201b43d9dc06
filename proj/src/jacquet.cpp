#include "glchar/jacquet.hpp"

#include "glchar/blockdim.hpp"

#include <stdexcept>

namespace glchar {

namespace {

void check_pair(const TwistedJacquet& J, const MatF& m1, const MatF& m2) {
  if (m1.level != 1 || m2.level != 1 || m1.rows != J.n || m1.cols != J.n || m2.rows != J.n ||
      m2.cols != J.n)
    throw std::invalid_argument("blocks must be n x n over the base field");
  if (!mat_invertible(*J.T, m1) || !mat_invertible(*J.T, m2))
    throw std::invalid_argument("blocks must be invertible");
}

// trace of A X without forming the product
FieldElement weight_trace(const FieldTower& T, const MatF& A, const MatF& X) {
  FieldElement s = T.zero(1);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) s = T.add(s, T.mul(A.at(i, j), X.at(j, i)));
  return s;
}

// shared per-pair state for the eigenspace dimension of [[m1, Y], [0, m2]] - z
struct KernelContext {
  const FieldTower* T;
  int d = 1;        // level of z
  MatF h;           // assembled 2n x 2n matrix at level d (Y block rewritten per X)
  int n = 0;
  bool formula = false;
  // formula route pieces, all at level d
  MatF kerQ, imgP;
  int rankP = 0, rankQ = 0;

  KernelContext(const TwistedJacquet& J, const MatF& m1, const MatF& m2, const FieldElement& z)
      : T(J.T), d(z.level), n(J.n), formula(J.use_kernel_formula) {
    MatF m1d = mat_embed(*T, m1, d);
    MatF m2d = mat_embed(*T, m2, d);
    MatF zI = mat_scalar(*T, n, z);
    MatF P = mat_sub(*T, m1d, zI);
    MatF Q = mat_sub(*T, m2d, zI);
    if (formula) {
      kerQ = kernel_basis(*T, Q);
      imgP = image_basis(*T, P);
      rankP = mat_rank(*T, P);
      rankQ = mat_rank(*T, Q);
      h = mat_zero(*T, d, 0, 0);
    } else {
      h = mat_block2x2(*T, P, mat_zero(*T, d, n, n), mat_zero(*T, d, n, n), Q);
    }
  }

  // dim Ker(h - z) for the given off-diagonal block Y (level 1)
  int eigdim(const MatF& Y) {
    MatF Yd = mat_embed(*T, Y, d);
    if (formula) {
      MatF YK = mat_mul(*T, Yd, kerQ);
      int rank = rankP + rankQ + mat_rank(*T, YK) - span_intersection_dim(*T, YK, imgP);
      return 2 * n - rank;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h.at(i, n + j) = Yd.at(i, j);
    return ker_dim(*T, h);
  }
};

}  // namespace

TwistedJacquet make_twisted(const FieldTower& T, const CuspidalCharacter& cusp, const MatF& A,
                            const AdditiveChar& psi0, bool use_kernel_formula) {
  if (T.m() % 2 != 0) throw std::invalid_argument("the tower degree must be even");
  int n = T.m() / 2;
  if (A.level != 1 || A.rows != n || A.cols != n)
    throw std::invalid_argument("A must be n x n over the base field");
  if (mat_rank(T, A) != 1) throw std::invalid_argument("A must have rank one");
  if (&cusp.tower() != &T || psi0.T != &T)
    throw std::invalid_argument("components belong to different field towers");
  return {&T, n, &cusp, A, psi0, use_kernel_formula};
}

CycloInt twisted_char(const TwistedJacquet& J, const MatF& m1, const MatF& m2, SumForm form) {
  check_pair(J, m1, m2);
  const FieldTower& T = *J.T;
  int n = J.n;
  int p = T.p();
  int64_t q = T.q();

  PolyF cp = poly_mul(T, charpoly(T, m1), charpoly(T, m2));
  const CharpolyInfo& info = J.cusp->charpoly_info(cp);
  if (info.cuspidal_zero) return cyclo_zero();

  // weight matrix W with exponent AbsTr(c tr(W X)) per X
  MatF W = (form == SumForm::shifted) ? mat_mul(T, J.A, mat_inverse(T, m1)) : J.A;
  // assembled upper-right block: X itself (shifted) or m1 X (plain)
  bool premultiply = (form == SumForm::plain);

  KernelContext ctx(J, m1, m2, info.z);

  // counts by eigenspace dimension t and additive exponent e
  std::vector<std::vector<int64_t>> cnt(static_cast<size_t>(2 * n + 1),
                                        std::vector<int64_t>(static_cast<size_t>(p), 0));
  int cells = n * n;
  int64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= q;
  std::vector<int64_t> digit(static_cast<size_t>(cells), 0);
  MatF X = mat_zero(T, 1, n, n);
  for (int64_t idx = 0; idx < total; ++idx) {
    int e = psi0_exponent(J.psi0, weight_trace(T, W, X));
    MatF Y = premultiply ? mat_mul(T, m1, X) : X;
    int t = ctx.eigdim(Y);
    ++cnt[static_cast<size_t>(t)][static_cast<size_t>(e)];
    for (int pos = 0; pos < cells; ++pos) {
      digit[pos] = (digit[pos] + 1) % q;
      X.a[pos] = T.enum_elem(1, digit[pos]);
      if (digit[pos] != 0) break;
    }
  }

  BigInt qd = 1;
  for (int i = 0; i < info.d; ++i) qd *= q;
  CycloInt acc = cyclo_zero(p);
  BigInt factor = 1;  // prod_{i=1}^{t-1} (1 - q^(d i)), built incrementally
  BigInt qdi = 1;
  for (int t = 0; t <= 2 * n; ++t) {
    if (t >= 2) {
      qdi *= qd;
      factor *= BigInt(1) - qdi;
    }
    CycloInt inner = cyclo_zero(p);
    bool any = false;
    for (int e = 0; e < p; ++e) {
      int64_t c = cnt[static_cast<size_t>(t)][static_cast<size_t>(e)];
      if (c == 0) continue;
      any = true;
      inner = cyclo_add(inner, cyclo_scale(root_of_unity(p, (p - e) % p), BigInt(c)));
    }
    if (any) acc = cyclo_add(acc, cyclo_scale(inner, t >= 2 ? factor : BigInt(1)));
  }

  CycloInt value = cyclo_mul(info.orbit_sum, acc);
  if (T.m() % 2 == 0) value = cyclo_neg(value);
  BigInt norm = 1;
  for (int i = 0; i < cells; ++i) norm *= q;
  return cyclo_divide_exact(value, norm);
}

CycloInt twisted_char_central(const TwistedJacquet& J, const FieldElement& a, const MatF& m1,
                              const MatF& m2) {
  if (a.level != 1 || J.T->is_zero(a)) throw std::invalid_argument("central scale must be a nonzero base-field element");
  return cyclo_mul(theta_eval(J.cusp->theta(), a), twisted_char(J, m1, m2));
}

BigInt twisted_dim(const TwistedJacquet& J) {
  MatF I = mat_identity(*J.T, 1, J.n);
  auto v = cyclo_as_integer(twisted_char(J, I, I));
  if (!v) throw std::logic_error("value at the identity pair is not an integer");
  return *v;
}

CycloInt fiber_partial_sum(const TwistedJacquet& J, const MatF& m1, const MatF& m2,
                           const FieldElement& beta, std::optional<int> t_filter) {
  check_pair(J, m1, m2);
  if (beta.level != 1) throw std::invalid_argument("beta must be a base-field element");
  const FieldTower& T = *J.T;
  int n = J.n;
  int64_t q = T.q();

  PolyF cp = poly_mul(T, charpoly(T, m1), charpoly(T, m2));
  const CharpolyInfo& info = J.cusp->charpoly_info(cp);

  MatF W = mat_mul(T, J.A, mat_inverse(T, m1));
  std::optional<KernelContext> ctx;
  if (!info.cuspidal_zero) ctx.emplace(J, m1, m2, info.z);

  CycloInt acc = cyclo_zero();
  int cells = n * n;
  int64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= q;
  std::vector<int64_t> digit(static_cast<size_t>(cells), 0);
  MatF X = mat_zero(T, 1, n, n);
  for (int64_t idx = 0; idx < total; ++idx) {
    FieldElement w1 = weight_trace(T, W, X);
    FieldElement w2 = weight_trace(T, J.A, X);
    if (w1 == beta && w2 == beta && !info.cuspidal_zero) {
      int t = ctx->eigdim(X);
      if (!t_filter || t == *t_filter) {
        CycloInt term = J.cusp->value_from_info(info, t);
        int e = psi0_exponent(J.psi0, w1);
        term = cyclo_mul(term, root_of_unity(T.p(), (T.p() - e) % T.p()));
        acc = cyclo_add(acc, term);
      }
    }
    for (int pos = 0; pos < cells; ++pos) {
      digit[pos] = (digit[pos] + 1) % q;
      X.a[pos] = T.enum_elem(1, digit[pos]);
      if (digit[pos] != 0) break;
    }
  }
  return acc;
}

bool m_psi_membership(const FieldTower& T, const MatF& A, const MatF& g1, const MatF& g2) {
  if (!mat_invertible(T, g1) || !mat_invertible(T, g2)) return false;
  return mat_mul(T, A, g1) == mat_mul(T, g2, A);
}

std::pair<MatF, MatF> tau_flip(const FieldTower& T, const MatF& m1, const MatF& m2) {
  return {mirror_transpose(T, m2), mirror_transpose(T, m1)};
}

MatF w_conjugate(const FieldTower& T, const MatF& m) {
  if (m.rows != 3 || m.cols != 3) throw std::invalid_argument("the swap move is for 3 x 3 blocks");
  MatF w = mat_identity(T, 1, 3);
  w.at(1, 1) = T.zero(1);
  w.at(2, 2) = T.zero(1);
  w.at(1, 2) = T.one(1);
  w.at(2, 1) = T.one(1);
  return mat_mul(T, w, mat_mul(T, m, w));
}

}  // namespace glchar
