#pragma once
// Arithmetic in a tower of finite fields F_{q^d} for the divisors d of a fixed
// degree m, where q = p^f. Nonzero elements are stored by discrete logarithm
// with respect to a fixed generator of each level; addition uses Zech logarithm
// tables. Generators at different levels are chosen compatibly, so that the
// power map g_d -> g_e^((q^e-1)/(q^d-1)) is a field embedding whenever d | e.

#include <cstdint>
#include <vector>

namespace glchar {

struct FieldElement {
  int level = 1;       // degree over F_q; must divide the tower degree m
  int32_t value = -1;  // -1 encodes zero, otherwise a dlog index in [0, q^level - 2]
  bool operator==(const FieldElement&) const = default;
};

class FieldTower {
public:
  // q = p^f; requires p prime, f >= 1, m >= 1 and q^m <= 2^24.
  static FieldTower build(int p, int f, int m);

  int p() const { return p_; }
  int f() const { return f_; }
  int m() const { return m_; }
  int64_t q() const { return q_; }
  const std::vector<int>& levels() const { return divisors_; }  // sorted divisors of m
  int64_t level_size(int d) const;  // q^d
  int64_t unit_order(int d) const;  // q^d - 1

  FieldElement zero(int level) const;
  FieldElement one(int level) const;
  FieldElement gen(int level) const;                    // the fixed generator g_d
  FieldElement from_dlog(int level, int64_t k) const;   // g_d^k, k taken mod q^d - 1
  FieldElement from_int(int level, int64_t c) const;    // image of the integer c (prime subfield)
  bool is_zero(const FieldElement& x) const { return x.value < 0; }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;        // error on zero
  FieldElement pow(const FieldElement& a, int64_t e) const;
  FieldElement frobenius(const FieldElement& x, int times = 1) const;  // x -> x^(q^times)
  FieldElement embed(const FieldElement& x, int to_level) const;       // requires x.level | to_level
  int trace_abs(const FieldElement& x) const;           // absolute trace into F_p, in [0, p)

  // Canonical enumeration of a level: index 0 is zero, index 1 + k is g_d^k.
  int64_t enum_size(int d) const { return level_size(d); }
  FieldElement enum_elem(int d, int64_t index) const;

  // Polynomial representation packed as an integer with base-p digits
  // (constant coefficient is the least significant digit). For tests.
  uint32_t packed(const FieldElement& x) const;
  // Monic irreducible defining polynomial over F_p, degree f*d, constant term first.
  const std::vector<int>& defining_poly(int d) const;

private:
  struct Level {
    int d = 0;
    int64_t size = 0;   // q^d
    int64_t units = 0;  // q^d - 1
    std::vector<int> defpoly;
    std::vector<uint32_t> pow_packed;  // dlog -> packed representation
    std::vector<int32_t> dlog;         // packed representation -> dlog (-1 for zero)
    std::vector<int32_t> zech;         // k -> dlog(1 + g^k), -1 when 1 + g^k = 0
    int32_t dlog_minus_one = 0;
    std::vector<int32_t> trace;        // k -> absolute trace of g^k, in [0, p)
  };

  const Level& at(int level) const;
  Level& at(int level);

  int p_ = 0, f_ = 0, m_ = 0;
  int64_t q_ = 0;
  std::vector<int> divisors_;
  std::vector<Level> levels_;  // indexed parallel to divisors_
};

}  // namespace glchar
