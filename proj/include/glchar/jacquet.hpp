#pragma once
// The twisted character on pairs (m1, m2) of invertible n x n blocks: the
// normalised sum over all n x n matrices X of the cuspidal GL(2n) character
// at [[m1, X], [0, m2]] against the conjugate additive weight attached to a
// rank-one matrix A. Includes fiber partial sums over the trace conditions,
// the stabiliser membership test, and the symmetry moves used to reduce one
// type pair to another.

#include "glchar/cuspchar.hpp"
#include "glchar/levi.hpp"

#include <optional>
#include <utility>

namespace glchar {

struct TwistedJacquet {
  const FieldTower* T = nullptr;
  int n = 0;  // block size; the tower degree is 2n
  const CuspidalCharacter* cusp = nullptr;
  MatF A;  // n x n of rank one
  AdditiveChar psi0;
  bool use_kernel_formula = false;  // block rank identity instead of full elimination
};

TwistedJacquet make_twisted(const FieldTower& T, const CuspidalCharacter& cusp, const MatF& A,
                            const AdditiveChar& psi0, bool use_kernel_formula = false);

// where the matrix variable sits in the assembled block matrix:
// shifted : [[m1, X],    [0, m2]] weighted by conj psi0(tr(A m1^-1 X))
// plain   : [[m1, m1 X], [0, m2]] weighted by conj psi0(tr(A X))
enum class SumForm { shifted, plain };

// the normalised value at the pair (m1, m2): exact division by q^(n^2)
CycloInt twisted_char(const TwistedJacquet& J, const MatF& m1, const MatF& m2,
                      SumForm form = SumForm::shifted);

// theta(a) * twisted_char(m1, m2); agrees with the value at (a m1, a m2)
CycloInt twisted_char_central(const TwistedJacquet& J, const FieldElement& a, const MatF& m1,
                              const MatF& m2);

// the value at the identity pair as a plain integer
BigInt twisted_dim(const TwistedJacquet& J);

// unnormalised sum over S(beta) = {X : tr(A m1^-1 X) = tr(A X) = beta},
// optionally restricted to a fixed t = dim Ker(h - z) over the extension
CycloInt fiber_partial_sum(const TwistedJacquet& J, const MatF& m1, const MatF& m2,
                           const FieldElement& beta, std::optional<int> t_filter = std::nullopt);

// stabiliser membership: A g1 = g2 A with g1, g2 invertible
bool m_psi_membership(const FieldTower& T, const MatF& A, const MatF& g1, const MatF& g2);

// the flip (m1, m2) -> (w0 m2^T w0^-1, w0 m1^T w0^-1), which preserves the value
std::pair<MatF, MatF> tau_flip(const FieldTower& T, const MatF& m1, const MatF& m2);

// conjugation by the swap of the last two coordinates (n = 3)
MatF w_conjugate(const FieldTower& T, const MatF& m);

}  // namespace glchar
