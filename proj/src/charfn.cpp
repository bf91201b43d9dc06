#include "glchar/charfn.hpp"

#include <stdexcept>

namespace glchar {

AdditiveChar make_psi0(const FieldTower& T, const FieldElement& c) {
  if (c.level != 1 || T.is_zero(c)) throw std::invalid_argument("psi0 scale must be a nonzero level-1 element");
  return {&T, c};
}

AdditiveChar make_psi0_default(const FieldTower& T) { return {&T, T.one(1)}; }

int psi0_exponent(const AdditiveChar& psi, const FieldElement& x) {
  if (x.level != 1) throw std::invalid_argument("psi0 takes level-1 arguments");
  return psi.T->trace_abs(psi.T->mul(psi.c, x));
}

CycloInt psi0_eval(const AdditiveChar& psi, const FieldElement& x) {
  return root_of_unity(psi.T->p(), psi0_exponent(psi, x));
}

MultChar make_theta(const FieldTower& T, int level, int64_t k) {
  int64_t units = T.unit_order(level);
  k %= units;
  if (k < 0) k += units;
  return {&T, level, k};
}

CycloInt theta_eval(const MultChar& th, const FieldElement& x) {
  if (th.T->is_zero(x)) throw std::invalid_argument("theta is undefined at zero");
  FieldElement e = th.T->embed(x, th.level);
  int64_t units = th.T->unit_order(th.level);
  return root_of_unity(units, th.k % units * e.value % units);
}

bool is_regular(const MultChar& th) {
  int64_t units = th.T->unit_order(th.level);
  int64_t q = th.T->q() % units;
  int64_t cur = th.k % units;
  for (int t = 1; t < th.level; ++t) {
    cur = cur * q % units;
    if (cur == th.k % units) return false;
  }
  return true;
}

int64_t smallest_regular_k(const FieldTower& T, int level) {
  int64_t units = T.unit_order(level);
  for (int64_t k = 1; k < units; ++k) {
    if (is_regular(MultChar{&T, level, k})) return k;
  }
  throw std::logic_error("no regular character exponent found");
}

int64_t count_regular_exhaustive(const FieldTower& T, int level) {
  int64_t units = T.unit_order(level);
  int64_t n = 0;
  for (int64_t k = 0; k < units; ++k)
    if (is_regular(MultChar{&T, level, k})) ++n;
  return n;
}

int64_t count_regular_moebius(const FieldTower& T, int level) {
  int64_t total = 0;
  for (int64_t d = 1; d <= level; ++d) {
    if (level % d != 0) continue;
    int64_t qd = 1;
    for (int64_t i = 0; i < d; ++i) qd *= T.q();
    total += moebius(level / d) * (qd - 1);
  }
  return total;
}

CycloInt galois_orbit_sum(const MultChar& th, const FieldElement& z) {
  if (th.T->is_zero(z)) throw std::invalid_argument("orbit sum needs a nonzero element");
  CycloInt acc = cyclo_zero(th.T->unit_order(th.level));
  FieldElement cur = z;
  for (int a = 0; a < z.level; ++a) {
    acc = cyclo_add(acc, theta_eval(th, cur));
    cur = th.T->frobenius(cur);
  }
  return acc;
}

}  // namespace glchar
