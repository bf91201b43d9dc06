#include "glchar/cuspchar.hpp"

#include <stdexcept>

namespace glchar {

namespace {

std::vector<int32_t> poly_key(const PolyF& f) {
  std::vector<int32_t> key;
  key.reserve(f.c.size());
  for (const auto& c : f.c) key.push_back(c.value);
  return key;
}

}  // namespace

CuspidalCharacter::CuspidalCharacter(const FieldTower& T, const MultChar& theta)
    : T_(&T), theta_(theta), m_(theta.level) {
  if (theta.T != &T) throw std::invalid_argument("theta belongs to a different field tower");
  if (theta.level != T.m()) throw std::invalid_argument("theta level must equal the tower degree");
  if (!is_regular(theta)) throw std::invalid_argument("cuspidal character requires a regular theta");
}

const CharpolyInfo& CuspidalCharacter::charpoly_info(const PolyF& cp) const {
  if (cp.level != 1 || cp.degree() != m_) throw std::invalid_argument("charpoly must be degree m over the base field");
  auto key = poly_key(cp);
  auto it = info_cache_.find(key);
  if (it != info_cache_.end()) return it->second;

  CharpolyInfo info;
  auto ip = power_of_irreducible(*T_, cp);
  if (ip) {
    info.cuspidal_zero = false;
    info.d = ip->h.degree();
    info.z = root_in_extension(*T_, ip->h);
    info.orbit_sum = galois_orbit_sum(theta_, info.z);
  }
  return info_cache_.emplace(std::move(key), std::move(info)).first->second;
}

CycloInt CuspidalCharacter::value_from_info(const CharpolyInfo& info, int t) const {
  if (info.cuspidal_zero) return cyclo_zero();
  BigInt factor = 1;
  BigInt qd = 1;
  for (int i = 0; i < info.d; ++i) qd *= T_->q();
  BigInt qdi = 1;
  for (int i = 1; i < t; ++i) {
    qdi *= qd;
    factor *= BigInt(1) - qdi;
  }
  if (m_ % 2 == 0) factor = -factor;
  return cyclo_scale(info.orbit_sum, factor);
}

CycloInt CuspidalCharacter::value(const MatF& g) const {
  if (g.level != 1 || g.rows != m_ || g.cols != m_)
    throw std::invalid_argument("cuspidal character takes m x m matrices over the base field");
  if (!mat_invertible(*T_, g)) throw std::invalid_argument("cuspidal character is defined on invertible matrices");
  PolyF cp = charpoly(*T_, g);
  const CharpolyInfo& info = charpoly_info(cp);
  if (info.cuspidal_zero) return cyclo_zero();
  auto key = std::make_pair(poly_key(cp), 0);
  key.second = ker_dim_over_extension(*T_, g, info.z);
  auto it = value_cache_.find(key);
  if (it != value_cache_.end()) return it->second;
  CycloInt v = value_from_info(info, key.second);
  return value_cache_.emplace(std::move(key), std::move(v)).first->second;
}

BigInt CuspidalCharacter::unipotent_value(int m, int64_t q, int r) {
  if (r < 0 || r >= m) throw std::invalid_argument("rank of u - 1 must lie in [0, m)");
  BigInt v = 1;
  BigInt qi = 1;
  for (int i = 1; i <= m - r - 1; ++i) {
    qi *= q;
    v *= BigInt(1) - qi;
  }
  if (m % 2 == 0) v = -v;
  return v;
}

}  // namespace glchar
