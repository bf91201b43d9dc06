#pragma once
// Irreducible cuspidal characters of GL(m, F_q) attached to a regular
// multiplicative character theta of F_{q^m}^x. The value at g is zero unless
// charpoly(g) = h^e with h irreducible of degree d; in that case, with z a
// root of h and t = dim over F_{q^d} of Ker(g - z),
//   value = (-1)^(m-1) * [sum of theta over the Frobenius orbit of z]
//                      * prod_{i=1}^{t-1} (1 - q^(d i)).

#include "glchar/charfn.hpp"
#include "glchar/matfq.hpp"

#include <map>
#include <utility>
#include <vector>

namespace glchar {

struct CharpolyInfo {
  bool cuspidal_zero = true;  // true when the charpoly is not a prime power
  int d = 0;                  // degree of the irreducible factor h
  FieldElement z;             // fixed root of h in F_{q^d}
  CycloInt orbit_sum;         // sum of theta over the Frobenius orbit of z
};

class CuspidalCharacter {
public:
  // theta must be a regular character whose level equals the tower degree m
  CuspidalCharacter(const FieldTower& T, const MultChar& theta);

  const FieldTower& tower() const { return *T_; }
  const MultChar& theta() const { return theta_; }
  int m() const { return m_; }

  // character value at an invertible m x m matrix over F_q (level 1)
  CycloInt value(const MatF& g) const;

  // dissect a characteristic polynomial once; shared across all matrices
  // with the same block-triangular charpoly
  const CharpolyInfo& charpoly_info(const PolyF& cp) const;

  // value from pre-dissected charpoly data and eigenspace dimension t
  CycloInt value_from_info(const CharpolyInfo& info, int t) const;

  // closed form at a unipotent element u of GL(m) with rank(u - 1) = r
  static BigInt unipotent_value(int m, int64_t q, int r);

private:
  const FieldTower* T_;
  MultChar theta_;
  int m_;
  mutable std::map<std::vector<int32_t>, CharpolyInfo> info_cache_;
  mutable std::map<std::pair<std::vector<int32_t>, int>, CycloInt> value_cache_;
};

}  // namespace glchar
