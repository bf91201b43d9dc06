#include "glchar/levi.hpp"

#include "glchar/blockdim.hpp"

#include <map>
#include <stdexcept>

namespace glchar {

namespace {

std::vector<int32_t> mat_key(const MatF& m) {
  std::vector<int32_t> key;
  key.reserve(m.a.size());
  for (const auto& e : m.a) key.push_back(e.value);
  return key;
}

}  // namespace

MatF w0_matrix(const FieldTower& T, int n) {
  MatF w = mat_zero(T, 1, n, n);
  for (int i = 0; i < n; ++i) w.at(i, n - 1 - i) = T.one(1);
  return w;
}

MatF mirror_transpose(const FieldTower& T, const MatF& m) {
  MatF w = w0_matrix(T, m.rows);
  return mat_mul(T, w, mat_mul(T, mat_transpose(m), w));
}

bool in_M1(const FieldTower& T, const MatF& m) {
  if (m.rows != m.cols || !mat_invertible(T, m)) return false;
  int n = m.rows;
  for (int j = 0; j + 1 < n; ++j)
    if (!T.is_zero(m.at(n - 1, j))) return false;
  return m.at(n - 1, n - 1) == T.one(m.level);
}

bool in_M2(const FieldTower& T, const MatF& m) {
  if (m.rows != m.cols || !mat_invertible(T, m)) return false;
  int n = m.rows;
  for (int i = 1; i < n; ++i)
    if (!T.is_zero(m.at(i, 0))) return false;
  return m.at(0, 0) == T.one(m.level);
}

bool in_unitriangular(const FieldTower& T, const MatF& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i) {
    if (!(m.at(i, i) == T.one(m.level))) return false;
    for (int j = 0; j < i; ++j)
      if (!T.is_zero(m.at(i, j))) return false;
  }
  return true;
}

std::vector<MatF> enumerate_M1(const FieldTower& T, int n) {
  int64_t q = T.q();
  int b = n - 1;
  std::vector<MatF> out;
  int64_t cells = static_cast<int64_t>(b) * b;
  int64_t totalB = 1;
  for (int64_t i = 0; i < cells; ++i) totalB *= q;
  int64_t totalV = 1;
  for (int i = 0; i < b; ++i) totalV *= q;
  std::vector<int64_t> digit(static_cast<size_t>(cells), 0);
  MatF B = mat_zero(T, 1, b, b);
  for (int64_t ib = 0; ib < totalB; ++ib) {
    if (b == 0 || mat_invertible(T, B)) {
      std::vector<int64_t> vd(static_cast<size_t>(b), 0);
      for (int64_t iv = 0; iv < totalV; ++iv) {
        MatF m = mat_identity(T, 1, n);
        for (int i = 0; i < b; ++i) {
          for (int j = 0; j < b; ++j) m.at(i, j) = B.at(i, j);
          m.at(i, n - 1) = T.enum_elem(1, vd[static_cast<size_t>(i)]);
        }
        out.push_back(std::move(m));
        for (int pos = 0; pos < b; ++pos) {
          vd[pos] = (vd[pos] + 1) % q;
          if (vd[pos] != 0) break;
        }
      }
    }
    for (int64_t pos = 0; pos < cells; ++pos) {
      digit[pos] = (digit[pos] + 1) % q;
      B.a[pos] = T.enum_elem(1, digit[pos]);
      if (digit[pos] != 0) break;
    }
  }
  return out;
}

std::vector<MatF> enumerate_M2(const FieldTower& T, int n) {
  std::vector<MatF> out;
  for (const MatF& m : enumerate_M1(T, n)) out.push_back(mirror_transpose(T, m));
  return out;
}

std::vector<MatF> enumerate_unitriangular(const FieldTower& T, int n) {
  int64_t q = T.q();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  int64_t total = 1;
  for (size_t i = 0; i < slots.size(); ++i) total *= q;
  std::vector<int64_t> digit(slots.size(), 0);
  std::vector<MatF> out;
  for (int64_t idx = 0; idx < total; ++idx) {
    MatF u = mat_identity(T, 1, n);
    for (size_t s = 0; s < slots.size(); ++s)
      u.at(slots[s].first, slots[s].second) = T.enum_elem(1, digit[s]);
    out.push_back(std::move(u));
    for (size_t pos = 0; pos < slots.size(); ++pos) {
      digit[pos] = (digit[pos] + 1) % q;
      if (digit[pos] != 0) break;
    }
  }
  return out;
}

std::vector<MatF> enumerate_GL(const FieldTower& T, int n) {
  int64_t q = T.q();
  int64_t cells = static_cast<int64_t>(n) * n;
  int64_t total = 1;
  for (int64_t i = 0; i < cells; ++i) {
    total *= q;
    if (total > (int64_t{1} << 27)) throw std::invalid_argument("enumeration too large");
  }
  std::vector<int64_t> digit(static_cast<size_t>(cells), 0);
  MatF m = mat_zero(T, 1, n, n);
  std::vector<MatF> out;
  for (int64_t idx = 0; idx < total; ++idx) {
    if (mat_invertible(T, m)) out.push_back(m);
    for (int64_t pos = 0; pos < cells; ++pos) {
      digit[pos] = (digit[pos] + 1) % q;
      m.a[pos] = T.enum_elem(1, digit[pos]);
      if (digit[pos] != 0) break;
    }
  }
  return out;
}

MatF random_mat(const FieldTower& T, int level, int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> pick(0, T.level_size(level) - 1);
  MatF m = mat_zero(T, level, rows, cols);
  for (auto& e : m.a) e = T.enum_elem(level, pick(rng));
  return m;
}

MatF random_gl(const FieldTower& T, int n, std::mt19937_64& rng) {
  for (;;) {
    MatF m = random_mat(T, 1, n, n, rng);
    if (mat_invertible(T, m)) return m;
  }
}

MatF random_m1(const FieldTower& T, int n, std::mt19937_64& rng) {
  MatF m = mat_identity(T, 1, n);
  if (n > 1) {
    MatF B = random_gl(T, n - 1, rng);
    std::uniform_int_distribution<int64_t> pick(0, T.q() - 1);
    for (int i = 0; i < n - 1; ++i) {
      for (int j = 0; j < n - 1; ++j) m.at(i, j) = B.at(i, j);
      m.at(i, n - 1) = T.enum_elem(1, pick(rng));
    }
  }
  return m;
}

MatF random_m2(const FieldTower& T, int n, std::mt19937_64& rng) {
  return mirror_transpose(T, random_m1(T, n, rng));
}

int mu_exponent(const AdditiveChar& psi, const MatF& u) {
  const FieldTower& T = *psi.T;
  if (!in_unitriangular(T, u)) throw std::invalid_argument("mu is defined on unitriangular matrices");
  FieldElement s = T.zero(1);
  for (int i = 0; i + 1 < u.rows; ++i) s = T.add(s, u.at(i, i + 1));
  return psi0_exponent(psi, s);
}

CycloInt mu_eval(const AdditiveChar& psi, const MatF& u) {
  return root_of_unity(psi.T->p(), mu_exponent(psi, u));
}

MatF coset_canonical_rep(const FieldTower& T, const MatF& g) {
  if (g.rows != g.cols) throw std::invalid_argument("coset representatives need square matrices");
  MatF r = g;
  int n = g.rows;
  std::vector<int> pivot(static_cast<size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (pivot[i] < 0) continue;
      FieldElement top = r.at(pivot[i], j);
      if (T.is_zero(top)) continue;
      FieldElement f = T.mul(top, T.inv(r.at(pivot[i], i)));
      for (int k = 0; k < n; ++k) r.at(k, j) = T.sub(r.at(k, j), T.mul(f, r.at(k, i)));
    }
    for (int k = n - 1; k >= 0; --k)
      if (!T.is_zero(r.at(k, j))) {
        pivot[j] = k;
        break;
      }
  }
  return r;
}

std::vector<MatF> coset_transversal(const FieldTower& T, const std::vector<MatF>& group) {
  std::map<std::vector<int32_t>, bool> seen;
  std::vector<MatF> out;
  for (const MatF& g : group) {
    MatF rep = coset_canonical_rep(T, g);
    auto key = mat_key(rep);
    if (seen.emplace(std::move(key), true).second) out.push_back(std::move(rep));
  }
  return out;
}

CycloInt induced_char_cosets(const FieldTower& T, const AdditiveChar& psi,
                             const std::vector<MatF>& transversal, const MatF& m) {
  CycloInt acc = cyclo_zero(T.p());
  for (const MatF& t : transversal) {
    MatF x = mat_mul(T, mat_inverse(T, t), mat_mul(T, m, t));
    if (in_unitriangular(T, x)) acc = cyclo_add(acc, mu_eval(psi, x));
  }
  return acc;
}

std::vector<std::vector<CycloInt>> induced_rep_matrix(const FieldTower& T, const AdditiveChar& psi,
                                                      const std::vector<MatF>& transversal,
                                                      const MatF& m) {
  size_t dim = transversal.size();
  std::map<std::vector<int32_t>, size_t> index;
  for (size_t i = 0; i < dim; ++i) index[mat_key(coset_canonical_rep(T, transversal[i]))] = i;
  std::vector<std::vector<CycloInt>> rho(dim, std::vector<CycloInt>(dim, cyclo_zero(T.p())));
  for (size_t i = 0; i < dim; ++i) {
    MatF x = mat_mul(T, m, transversal[i]);
    auto it = index.find(mat_key(coset_canonical_rep(T, x)));
    if (it == index.end()) throw std::invalid_argument("element leaves the span of the transversal");
    size_t j = it->second;
    MatF u = mat_mul(T, mat_inverse(T, transversal[j]), x);
    if (!in_unitriangular(T, u)) throw std::logic_error("coset factorisation failed");
    rho[j][i] = mu_eval(psi, u);
  }
  return rho;
}

CycloInt induced_char_model(const FieldTower& T, const AdditiveChar& psi,
                            const std::vector<MatF>& transversal, const MatF& m) {
  auto rho = induced_rep_matrix(T, psi, transversal, m);
  CycloInt acc = cyclo_zero(T.p());
  for (size_t i = 0; i < rho.size(); ++i) acc = cyclo_add(acc, rho[i][i]);
  return acc;
}

int classify_type_m1(const FieldTower& T, const MatF& m) {
  if (m.rows != 3 || !in_M1(T, m)) throw std::invalid_argument("type classification needs 3x3 members of the first subgroup");
  if (!is_unipotent(T, m)) return 0;
  const FieldElement one = T.one(1);
  FieldElement a11 = m.at(0, 0), a12 = m.at(0, 1), a13 = m.at(0, 2);
  FieldElement a21 = m.at(1, 0), a23 = m.at(1, 2);
  if (T.is_zero(a21)) {
    bool z12 = T.is_zero(a12), z23 = T.is_zero(a23), z13 = T.is_zero(a13);
    if (!z12 && z23) return 1;
    if (!z12) return 2;
    if (!z23 && z13) return 3;
    if (z23 && z13) return 4;
    if (z23) return 5;
    return 6;
  }
  if (a11 == one) return T.is_zero(a13) ? 7 : 8;
  FieldElement delta = T.mul(T.mul(T.inv(a21), a23), T.sub(a11, one));
  return (a13 == delta) ? 9 : 10;
}

int classify_type_m2(const FieldTower& T, const MatF& m) {
  if (m.rows != 3 || !in_M2(T, m)) throw std::invalid_argument("type classification needs 3x3 members of the second subgroup");
  if (!is_unipotent(T, m)) return 0;
  const FieldElement one = T.one(1);
  FieldElement y12 = m.at(0, 1), y13 = m.at(0, 2);
  FieldElement y22 = m.at(1, 1), y23 = m.at(1, 2);
  FieldElement y32 = m.at(2, 1);
  if (T.is_zero(y32)) {
    bool z12 = T.is_zero(y12), z23 = T.is_zero(y23), z13 = T.is_zero(y13);
    if (z12 && !z23) return 1;
    if (!z23) return 2;
    if (!z12 && z13) return 3;
    if (z12 && z13) return 4;
    if (z12) return 5;
    return 6;
  }
  if (y22 == one) return T.is_zero(y13) ? 7 : 8;
  FieldElement gamma = T.mul(T.mul(y32, y13), T.inv(T.sub(y22, one)));
  return (y12 == T.neg(gamma)) ? 9 : 10;
}

BigInt type_value(int64_t q, int type) {
  BigInt Q = q;
  switch (type) {
    case 0:
      return 0;
    case 1:
    case 3:
    case 5:
    case 6:
    case 7:
    case 9:
      return 1 - Q;
    case 2:
    case 8:
    case 10:
      return 1;
    case 4:
      return (1 - Q) * (1 - Q * Q);
    default:
      throw std::invalid_argument("type must lie in [0, 10]");
  }
}

std::vector<MatF> transversal_closed_m1(const FieldTower& T) {
  int64_t q = T.q();
  std::vector<MatF> out;
  for (int64_t a = 1; a < q; ++a)
    for (int64_t b = 1; b < q; ++b) {
      MatF m = mat_identity(T, 1, 3);
      m.at(0, 0) = T.enum_elem(1, a);
      m.at(1, 1) = T.enum_elem(1, b);
      out.push_back(std::move(m));
    }
  for (int64_t p = 0; p < q; ++p)
    for (int64_t s = 1; s < q; ++s)
      for (int64_t r = 1; r < q; ++r) {
        MatF m = mat_zero(T, 1, 3, 3);
        m.at(0, 0) = T.enum_elem(1, p);
        m.at(0, 1) = T.enum_elem(1, s);
        m.at(1, 0) = T.enum_elem(1, r);
        m.at(2, 2) = T.one(1);
        out.push_back(std::move(m));
      }
  return out;
}

std::vector<MatF> transversal_closed_m2(const FieldTower& T) {
  int64_t q = T.q();
  std::vector<MatF> out;
  for (int64_t a = 1; a < q; ++a)
    for (int64_t b = 1; b < q; ++b) {
      MatF m = mat_identity(T, 1, 3);
      m.at(1, 1) = T.enum_elem(1, a);
      m.at(2, 2) = T.enum_elem(1, b);
      out.push_back(std::move(m));
    }
  for (int64_t p = 0; p < q; ++p)
    for (int64_t s = 1; s < q; ++s)
      for (int64_t r = 1; r < q; ++r) {
        MatF m = mat_zero(T, 1, 3, 3);
        m.at(0, 0) = T.one(1);
        m.at(1, 1) = T.enum_elem(1, p);
        m.at(1, 2) = T.enum_elem(1, s);
        m.at(2, 1) = T.enum_elem(1, r);
        out.push_back(std::move(m));
      }
  return out;
}

}  // namespace glchar
