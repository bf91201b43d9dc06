#include "glchar/strata.hpp"

#include <stdexcept>

namespace glchar {

BigInt strata_count_brute(const FieldTower& T, const MatF& A, int r, const FieldElement& alpha) {
  if (A.rows != A.cols || A.level != 1) throw std::invalid_argument("A must be square over the base field");
  if (alpha.level != 1) throw std::invalid_argument("alpha must be a base-field element");
  int n = A.rows;
  int64_t q = T.q();
  int64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= q;
    if (total > (int64_t{1} << 27)) throw std::invalid_argument("enumeration too large");
  }
  MatF X = mat_zero(T, 1, n, n);
  std::vector<int64_t> digit(static_cast<size_t>(n) * n, 0);
  BigInt count = 0;
  for (int64_t idx = 0; idx < total; ++idx) {
    // trace of A X without forming the product
    FieldElement tr = T.zero(1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tr = T.add(tr, T.mul(A.at(i, j), X.at(j, i)));
    if (tr == alpha && mat_rank(T, X) == r) ++count;
    // odometer step
    for (int pos = 0; pos < n * n; ++pos) {
      digit[pos] = (digit[pos] + 1) % q;
      X.a[pos] = T.enum_elem(1, digit[pos]);
      if (digit[pos] != 0) break;
    }
  }
  return count;
}

BigInt strata_count_closed_n3(int64_t q, int r, bool alpha_zero) {
  BigInt Q = q;
  auto P = [&](int e) {  // q^e
    BigInt v = 1;
    for (int i = 0; i < e; ++i) v *= Q;
    return v;
  };
  switch (r) {
    case 0:
      return alpha_zero ? BigInt(1) : BigInt(0);
    case 1:
      if (alpha_zero) return (P(2) - 1) * P(2) + (P(3) - 1) * Q + (P(3) - 1);
      return P(4);
    case 2: {
      BigInt a = P(2) - 1;      // q^2 - 1
      BigInt b = P(2) - Q;      // q^2 - q
      BigInt c = Q - 1;         // q - 1
      BigInt d = P(3) - Q;      // q^3 - q
      BigInt e = P(3) - P(2);   // q^3 - q^2
      if (alpha_zero) {
        return a * a + a * b * P(2) + 2 * a * b * b + a * b * b * c + 2 * a * b + 2 * a * a * c +
               2 * a * b + 2 * d * c * c + a * c * b + 2 * Q * a * c * c + a * c * c * (P(2) - 2 * Q) +
               a * a * c * c;
      }
      return a * a + 2 * a * b * b + a * e * c * c + 2 * a * P(2) + 2 * a * b + 2 * a * a * c +
             2 * Q * a * c * c + a * P(2) * c + 2 * Q * a * c * c + a * c * c * (P(2) - 2 * Q) +
             a * a * c * c;
    }
    case 3:
      if (alpha_zero) return (P(2) - 1) * (P(3) - Q) * (P(3) - P(2));
      return P(2) * (P(3) - Q) * (P(3) - P(2));
    default:
      throw std::invalid_argument("rank must lie in [0, 3]");
  }
}

BigInt gaussian_binomial(int n, int r, int64_t q) {
  if (r < 0 || r > n) return 0;
  // [n r]_q = prod_{i=0}^{r-1} (q^(n-i) - 1) / (q^(i+1) - 1), computed exactly
  BigInt num = 1, den = 1, Q = q;
  auto P = [&](int e) {
    BigInt v = 1;
    for (int i = 0; i < e; ++i) v *= Q;
    return v;
  };
  for (int i = 0; i < r; ++i) {
    num *= P(n - i) - 1;
    den *= P(i + 1) - 1;
  }
  BigInt quot = num / den;
  if (quot * den != num) throw std::logic_error("gaussian binomial not integral");
  return quot;
}

BigInt rank_count(int rows, int cols, int r, int64_t q) {
  if (r < 0 || r > rows || r > cols) return 0;
  BigInt Q = q;
  auto P = [&](int e) {
    BigInt v = 1;
    for (int i = 0; i < e; ++i) v *= Q;
    return v;
  };
  BigInt v = gaussian_binomial(rows, r, q);
  for (int i = 0; i < r; ++i) v *= P(cols) - P(i);
  return v;
}

}  // namespace glchar
