#include "glchar/matfq.hpp"

#include <sstream>
#include <stdexcept>

namespace glchar {

MatF mat_zero(const FieldTower& T, int level, int rows, int cols) {
  MatF x;
  x.level = level;
  x.rows = rows;
  x.cols = cols;
  x.a.assign(static_cast<size_t>(rows) * cols, T.zero(level));
  return x;
}

MatF mat_identity(const FieldTower& T, int level, int n) {
  MatF x = mat_zero(T, level, n, n);
  for (int i = 0; i < n; ++i) x.at(i, i) = T.one(level);
  return x;
}

MatF mat_scalar(const FieldTower& T, int n, const FieldElement& z) {
  MatF x = mat_zero(T, z.level, n, n);
  for (int i = 0; i < n; ++i) x.at(i, i) = z;
  return x;
}

MatF mat_add(const FieldTower& T, const MatF& x, const MatF& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.level != y.level)
    throw std::invalid_argument("mat_add: shape mismatch");
  MatF z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = T.add(z.a[i], y.a[i]);
  return z;
}

MatF mat_sub(const FieldTower& T, const MatF& x, const MatF& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.level != y.level)
    throw std::invalid_argument("mat_sub: shape mismatch");
  MatF z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = T.sub(z.a[i], y.a[i]);
  return z;
}

MatF mat_mul(const FieldTower& T, const MatF& x, const MatF& y) {
  if (x.cols != y.rows || x.level != y.level) throw std::invalid_argument("mat_mul: shape mismatch");
  MatF z = mat_zero(T, x.level, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const FieldElement& v = x.at(i, k);
      if (T.is_zero(v)) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = T.add(z.at(i, j), T.mul(v, y.at(k, j)));
    }
  return z;
}

MatF mat_scale(const FieldTower& T, const FieldElement& s, const MatF& x) {
  MatF z = x;
  for (auto& v : z.a) v = T.mul(s, v);
  return z;
}

MatF mat_transpose(const MatF& x) {
  MatF z = x;
  z.rows = x.cols;
  z.cols = x.rows;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.a[static_cast<size_t>(j) * z.cols + i] = x.at(i, j);
  return z;
}

MatF mat_embed(const FieldTower& T, const MatF& x, int to_level) {
  MatF z = x;
  z.level = to_level;
  for (auto& v : z.a) v = T.embed(v, to_level);
  return z;
}

FieldElement mat_trace(const FieldTower& T, const MatF& x) {
  FieldElement s = T.zero(x.level);
  for (int i = 0; i < x.rows; ++i) s = T.add(s, x.at(i, i));
  return s;
}

MatF mat_block2x2(const FieldTower& T, const MatF& a, const MatF& b, const MatF& c, const MatF& d) {
  if (a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols)
    throw std::invalid_argument("mat_block2x2: shape mismatch");
  MatF z = mat_zero(T, a.level, a.rows + c.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) z.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) z.at(i, a.cols + j) = b.at(i, j);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) z.at(a.rows + i, j) = c.at(i, j);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) z.at(a.rows + i, a.cols + j) = d.at(i, j);
  return z;
}

int mat_rank(const FieldTower& T, MatF x) {
  int r = 0;
  for (int col = 0; col < x.cols && r < x.rows; ++col) {
    int piv = -1;
    for (int i = r; i < x.rows; ++i)
      if (!T.is_zero(x.at(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < x.cols; ++j) std::swap(x.at(piv, j), x.at(r, j));
    FieldElement inv = T.inv(x.at(r, col));
    for (int i = r + 1; i < x.rows; ++i) {
      FieldElement f = T.mul(x.at(i, col), inv);
      if (T.is_zero(f)) continue;
      for (int j = col; j < x.cols; ++j)
        x.at(i, j) = T.sub(x.at(i, j), T.mul(f, x.at(r, j)));
    }
    ++r;
  }
  return r;
}

int ker_dim(const FieldTower& T, const MatF& x) {
  if (x.rows != x.cols) throw std::invalid_argument("ker_dim: matrix must be square");
  return x.cols - mat_rank(T, x);
}

bool mat_invertible(const FieldTower& T, const MatF& x) {
  return x.rows == x.cols && mat_rank(T, x) == x.rows;
}

MatF mat_inverse(const FieldTower& T, const MatF& x) {
  if (x.rows != x.cols) throw std::invalid_argument("mat_inverse: matrix must be square");
  int n = x.rows;
  MatF w = x;
  MatF inv = mat_identity(T, x.level, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!T.is_zero(w.at(i, col))) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("mat_inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    FieldElement pival = T.inv(w.at(col, col));
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = T.mul(pival, w.at(col, j));
      inv.at(col, j) = T.mul(pival, inv.at(col, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      FieldElement f = w.at(i, col);
      if (T.is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        w.at(i, j) = T.sub(w.at(i, j), T.mul(f, w.at(col, j)));
        inv.at(i, j) = T.sub(inv.at(i, j), T.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

PolyF poly_zero(int level) { return PolyF{level, {}}; }

PolyF poly_one(const FieldTower& T, int level) { return PolyF{level, {T.one(level)}}; }

PolyF poly_x(const FieldTower& T, int level) { return PolyF{level, {T.zero(level), T.one(level)}}; }

PolyF poly_trim(PolyF f, const FieldTower& T) {
  while (!f.c.empty() && T.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

PolyF poly_add(const FieldTower& T, const PolyF& f, const PolyF& g) {
  if (f.level != g.level) throw std::invalid_argument("poly_add: level mismatch");
  PolyF z = f;
  if (z.c.size() < g.c.size()) z.c.resize(g.c.size(), T.zero(f.level));
  for (size_t i = 0; i < g.c.size(); ++i) z.c[i] = T.add(z.c[i], g.c[i]);
  return poly_trim(std::move(z), T);
}

PolyF poly_sub(const FieldTower& T, const PolyF& f, const PolyF& g) {
  if (f.level != g.level) throw std::invalid_argument("poly_sub: level mismatch");
  PolyF z = f;
  if (z.c.size() < g.c.size()) z.c.resize(g.c.size(), T.zero(f.level));
  for (size_t i = 0; i < g.c.size(); ++i) z.c[i] = T.sub(z.c[i], g.c[i]);
  return poly_trim(std::move(z), T);
}

PolyF poly_mul(const FieldTower& T, const PolyF& f, const PolyF& g) {
  if (f.level != g.level) throw std::invalid_argument("poly_mul: level mismatch");
  if (f.c.empty() || g.c.empty()) return poly_zero(f.level);
  PolyF z;
  z.level = f.level;
  z.c.assign(f.c.size() + g.c.size() - 1, T.zero(f.level));
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (T.is_zero(f.c[i])) continue;
    for (size_t j = 0; j < g.c.size(); ++j)
      z.c[i + j] = T.add(z.c[i + j], T.mul(f.c[i], g.c[j]));
  }
  return poly_trim(std::move(z), T);
}

std::pair<PolyF, PolyF> poly_divmod(const FieldTower& T, const PolyF& f, const PolyF& g) {
  if (f.level != g.level) throw std::invalid_argument("poly_divmod: level mismatch");
  if (g.c.empty()) throw std::invalid_argument("poly_divmod: division by zero");
  PolyF rem = f;
  int dg = g.degree();
  FieldElement leadinv = T.inv(g.c.back());
  PolyF quo;
  quo.level = f.level;
  if (rem.degree() >= dg) quo.c.assign(rem.degree() - dg + 1, T.zero(f.level));
  while (rem.degree() >= dg) {
    int shift = rem.degree() - dg;
    FieldElement c = T.mul(rem.c.back(), leadinv);
    quo.c[shift] = c;
    for (int i = 0; i <= dg; ++i)
      rem.c[shift + i] = T.sub(rem.c[shift + i], T.mul(c, g.c[i]));
    rem = poly_trim(std::move(rem), T);
  }
  return {poly_trim(std::move(quo), T), rem};
}

PolyF poly_gcd(const FieldTower& T, PolyF f, PolyF g) {
  f = poly_trim(std::move(f), T);
  g = poly_trim(std::move(g), T);
  while (!g.c.empty()) {
    PolyF r = poly_divmod(T, f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.c.empty()) {
    FieldElement inv = T.inv(f.c.back());
    for (auto& c : f.c) c = T.mul(inv, c);
  }
  return f;
}

PolyF poly_powmod(const FieldTower& T, PolyF base, int64_t e, const PolyF& mod) {
  PolyF r = poly_one(T, base.level);
  base = poly_divmod(T, base, mod).second;
  while (e > 0) {
    if (e & 1) r = poly_divmod(T, poly_mul(T, r, base), mod).second;
    base = poly_divmod(T, poly_mul(T, base, base), mod).second;
    e >>= 1;
  }
  return r;
}

FieldElement poly_eval(const FieldTower& T, const PolyF& f, const FieldElement& x) {
  FieldElement acc = T.zero(x.level);
  for (size_t i = f.c.size(); i-- > 0;)
    acc = T.add(T.mul(acc, x), T.embed(f.c[i], x.level));
  return acc;
}

bool poly_is_monic(const FieldTower& T, const PolyF& f) {
  return !f.c.empty() && f.c.back() == T.one(f.level);
}

// Hessenberg reduction by similarity transformations, then the standard
// recurrence for characteristic polynomials of the leading submatrices.
PolyF charpoly(const FieldTower& T, const MatF& g) {
  if (g.rows != g.cols) throw std::invalid_argument("charpoly: matrix must be square");
  int n = g.rows;
  int lv = g.level;
  MatF h = g;
  for (int k = 0; k + 2 < n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (!T.is_zero(h.at(i, k))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, k + 1));
    }
    FieldElement inv = T.inv(h.at(k + 1, k));
    for (int i = k + 2; i < n; ++i) {
      FieldElement f = T.mul(h.at(i, k), inv);
      if (T.is_zero(f)) continue;
      for (int j = 0; j < n; ++j) h.at(i, j) = T.sub(h.at(i, j), T.mul(f, h.at(k + 1, j)));
      for (int r = 0; r < n; ++r) h.at(r, k + 1) = T.add(h.at(r, k + 1), T.mul(f, h.at(r, i)));
    }
  }
  // p_0 = 1, p_t = (x - h[t-1][t-1]) p_{t-1} - sum_i h[i-1][t-1] (prod subdiag) p_{i-1}
  std::vector<PolyF> ps(n + 1);
  ps[0] = poly_one(T, lv);
  for (int t = 1; t <= n; ++t) {
    PolyF xm{lv, {T.neg(h.at(t - 1, t - 1)), T.one(lv)}};
    PolyF acc = poly_mul(T, xm, ps[t - 1]);
    FieldElement prod = T.one(lv);
    for (int i = t - 1; i >= 1; --i) {
      prod = T.mul(prod, h.at(i, i - 1));
      FieldElement coef = T.mul(h.at(i - 1, t - 1), prod);
      if (T.is_zero(coef)) continue;
      PolyF term = ps[i - 1];
      for (auto& c : term.c) c = T.mul(coef, c);
      acc = poly_sub(T, acc, term);
    }
    ps[t] = std::move(acc);
  }
  return ps[n];
}

// determinant of (xI - g) by Laplace expansion over column subsets
PolyF charpoly_reference(const FieldTower& T, const MatF& g) {
  if (g.rows != g.cols) throw std::invalid_argument("charpoly_reference: matrix must be square");
  int n = g.rows;
  int lv = g.level;
  if (n > 16) throw std::invalid_argument("charpoly_reference: too large");
  auto entry = [&](int i, int j) {
    PolyF e{lv, {T.neg(g.at(i, j))}};
    if (i == j) e.c.push_back(T.one(lv));
    return poly_trim(std::move(e), T);
  };
  std::vector<PolyF> dp(static_cast<size_t>(1) << n);
  dp[0] = poly_one(T, lv);
  for (uint32_t S = 1; S < dp.size(); ++S) {
    int r = __builtin_popcount(S) - 1;  // expanding along row r
    PolyF acc = poly_zero(lv);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(S >> j & 1)) continue;
      PolyF term = poly_mul(T, entry(r, j), dp[S & ~(1u << j)]);
      if ((r + pos) % 2 == 1)
        for (auto& c : term.c) c = T.neg(c);
      acc = poly_add(T, acc, term);
      ++pos;
    }
    dp[S] = std::move(acc);
  }
  return dp.back();
}

std::optional<IrreduciblePower> power_of_irreducible(const FieldTower& T, const PolyF& f) {
  if (f.c.empty()) return std::nullopt;
  if (!poly_is_monic(T, f)) throw std::invalid_argument("power_of_irreducible: polynomial must be monic");
  int n = f.degree();
  if (n == 0) return std::nullopt;
  int64_t Q = T.level_size(f.level);
  PolyF x = poly_x(T, f.level);
  PolyF xq = x;
  for (int i = 1; i <= n; ++i) {
    xq = poly_powmod(T, xq, Q, f);  // x^(Q^i) mod f
    PolyF gcd = poly_gcd(T, f, poly_sub(T, xq, x));
    if (gcd.degree() >= 1) {
      if (gcd.degree() != i) return std::nullopt;  // several irreducible factors of degree i
      if (n % i != 0) return std::nullopt;
      PolyF rest = f;
      int e = n / i;
      for (int k = 0; k < e; ++k) {
        auto [quo, rem] = poly_divmod(T, rest, gcd);
        if (!rem.c.empty()) return std::nullopt;
        rest = std::move(quo);
      }
      if (rest.degree() != 0) return std::nullopt;
      return IrreduciblePower{gcd, e};
    }
  }
  return std::nullopt;
}

FieldElement root_in_extension(const FieldTower& T, const PolyF& h) {
  int d = h.degree();
  if (d < 1) throw std::invalid_argument("root_in_extension: degree must be positive");
  if (h.level != 1) throw std::invalid_argument("root_in_extension: polynomial must be over level 1");
  if (T.m() % d != 0) throw std::invalid_argument("root_in_extension: degree does not divide tower degree");
  for (int64_t idx = 0; idx < T.enum_size(d); ++idx) {
    FieldElement cand = T.enum_elem(d, idx);
    if (T.is_zero(poly_eval(T, h, cand))) return cand;
  }
  throw std::logic_error("root_in_extension: no root found for irreducible input");
}

int ker_dim_over_extension(const FieldTower& T, const MatF& g, const FieldElement& z) {
  MatF ge = mat_embed(T, g, z.level);
  return ker_dim(T, mat_sub(T, ge, mat_scalar(T, g.rows, z)));
}

MatF parse_mat(const FieldTower& T, int level, int rows, int cols, const std::string& literal) {
  std::vector<std::vector<std::string>> cells;
  std::stringstream ss(literal);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<std::string> r;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      size_t b = cell.find_first_not_of(" \t");
      size_t e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("matrix literal: empty entry");
      r.push_back(cell.substr(b, e - b + 1));
    }
    cells.push_back(std::move(r));
  }
  if (static_cast<int>(cells.size()) != rows) throw std::invalid_argument("matrix literal: wrong row count");
  MatF x = mat_zero(T, level, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(cells[i].size()) != cols)
      throw std::invalid_argument("matrix literal: wrong column count");
    for (int j = 0; j < cols; ++j) {
      const std::string& s = cells[i][j];
      size_t used = 0;
      long long k;
      try {
        k = std::stoll(s, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("matrix literal: bad entry '" + s + "'");
      }
      if (used != s.size() || k < 0)
        throw std::invalid_argument("matrix literal: bad entry '" + s + "'");
      x.at(i, j) = k == 0 ? T.zero(level) : T.from_dlog(level, k);
    }
  }
  return x;
}

std::string format_mat(const FieldTower& T, const MatF& x) {
  int64_t units = T.unit_order(x.level);
  std::string s;
  for (int i = 0; i < x.rows; ++i) {
    if (i) s += ";";
    for (int j = 0; j < x.cols; ++j) {
      if (j) s += ",";
      const FieldElement& v = x.at(i, j);
      if (T.is_zero(v))
        s += "0";
      else
        s += std::to_string(v.value == 0 ? units : v.value);
    }
  }
  return s;
}

}  // namespace glchar
