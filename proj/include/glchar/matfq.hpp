#pragma once
// Dense matrices and polynomials over the tower fields: rank and kernel
// computations, characteristic polynomials, factor detection for powers of a
// single irreducible, and root lookup in the extension levels.

#include "glchar/gf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace glchar {

struct MatF {
  int level = 1;
  int rows = 0, cols = 0;
  std::vector<FieldElement> a;  // row-major
  FieldElement& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const FieldElement& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const MatF&) const = default;
};

// polynomial with coefficients in a tower level, ascending, no trailing zeros
struct PolyF {
  int level = 1;
  std::vector<FieldElement> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const PolyF&) const = default;
};

MatF mat_zero(const FieldTower& T, int level, int rows, int cols);
MatF mat_identity(const FieldTower& T, int level, int n);
MatF mat_scalar(const FieldTower& T, int n, const FieldElement& z);  // z * I at z.level
MatF mat_add(const FieldTower& T, const MatF& x, const MatF& y);
MatF mat_sub(const FieldTower& T, const MatF& x, const MatF& y);
MatF mat_mul(const FieldTower& T, const MatF& x, const MatF& y);
MatF mat_scale(const FieldTower& T, const FieldElement& s, const MatF& x);
MatF mat_transpose(const MatF& x);
MatF mat_embed(const FieldTower& T, const MatF& x, int to_level);
FieldElement mat_trace(const FieldTower& T, const MatF& x);
// 2x2 block assembly [[a, b], [c, d]]
MatF mat_block2x2(const FieldTower& T, const MatF& a, const MatF& b, const MatF& c, const MatF& d);

int mat_rank(const FieldTower& T, MatF x);
int ker_dim(const FieldTower& T, const MatF& x);  // square: cols - rank
bool mat_invertible(const FieldTower& T, const MatF& x);
MatF mat_inverse(const FieldTower& T, const MatF& x);

PolyF poly_zero(int level);
PolyF poly_one(const FieldTower& T, int level);
PolyF poly_x(const FieldTower& T, int level);
PolyF poly_trim(PolyF f, const FieldTower& T);
PolyF poly_add(const FieldTower& T, const PolyF& f, const PolyF& g);
PolyF poly_sub(const FieldTower& T, const PolyF& f, const PolyF& g);
PolyF poly_mul(const FieldTower& T, const PolyF& f, const PolyF& g);
// quotient/remainder by a nonzero divisor
std::pair<PolyF, PolyF> poly_divmod(const FieldTower& T, const PolyF& f, const PolyF& g);
PolyF poly_gcd(const FieldTower& T, PolyF f, PolyF g);  // monic
PolyF poly_powmod(const FieldTower& T, PolyF base, int64_t e, const PolyF& mod);
FieldElement poly_eval(const FieldTower& T, const PolyF& f, const FieldElement& x);  // x.level multiple of f.level
bool poly_is_monic(const FieldTower& T, const PolyF& f);

// characteristic polynomial det(xI - g), monic; Hessenberg reduction route
PolyF charpoly(const FieldTower& T, const MatF& g);
// independent oracle: Laplace expansion with polynomial entries
PolyF charpoly_reference(const FieldTower& T, const MatF& g);

struct IrreduciblePower {
  PolyF h;  // monic irreducible
  int e = 0;
};
// decides whether f = h^e for a single monic irreducible h
std::optional<IrreduciblePower> power_of_irreducible(const FieldTower& T, const PolyF& f);

// first root of an irreducible h (over level 1) in the level deg(h) field,
// scanning zero first and then g^0, g^1, ...; error when deg(h) does not divide m
FieldElement root_in_extension(const FieldTower& T, const PolyF& h);

// dimension over F_{q^d} of Ker(g - z) for g over level 1 and z at level d
int ker_dim_over_extension(const FieldTower& T, const MatF& g, const FieldElement& z);

// literal format: rows separated by ';', entries by ','; an entry is either 0
// (the zero element) or a positive discrete-log index k meaning g^k
MatF parse_mat(const FieldTower& T, int level, int rows, int cols, const std::string& literal);
std::string format_mat(const FieldTower& T, const MatF& x);

}  // namespace glchar
