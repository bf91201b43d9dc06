#pragma once
// Verification drivers: sweep the stabiliser pairs (exhaustively, by type
// representatives, or by seeded sampling), compare the twisted character
// against theta times the product of the two induced characters, and collect
// a machine-readable report. Also CSV renderings of the closed-form tables.

#include "glchar/jacquet.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace glchar {

struct CheckRecord {
  std::string label;
  std::string lhs, rhs;
  bool equal = false;
};

struct VerifyReport {
  std::string title;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckRecord> records;  // capped, but mismatches are always kept
  int64_t checked = 0;
  int64_t mismatches = 0;
  bool pass = false;
  double seconds = 0.0;
};

enum class SweepMode { exhaustive, typed, sampled };

struct TheoremOptions {
  int p = 2, f = 1;         // base field of q = p^f elements
  int64_t theta_k = -1;     // exponent of theta; -1 picks the smallest regular one
  int64_t psi_c = -1;       // dlog of the additive scale c; -1 means c = 1
  std::string A_literal;    // empty means the elementary matrix E_{1,n}
  SweepMode mode = SweepMode::exhaustive;
  uint64_t seed = 0xC0FFEE;
  int64_t samples = 10000;
  bool use_kernel_formula = false;
  int64_t record_cap = 100000;
  int64_t max_work = 4000000000;  // budget in matrix-variable evaluations
};

// 3 x 3 blocks (GL(6)); throws std::invalid_argument on bad inputs or budget
VerifyReport verify_theorem(const TheoremOptions& opt);

struct ConjectureOptions {
  int n = 2;  // block size 1, 2, or 3
  int p = 2, f = 1;
  int64_t theta_k = -1;
  int64_t psi_c = -1;
  SweepMode mode = SweepMode::exhaustive;
  uint64_t seed = 0xC0FFEE;
  int64_t samples = 10000;
  bool use_kernel_formula = false;
  int64_t record_cap = 100000;
  int64_t max_work = 4000000000;
};

// n x n blocks (GL(2n)); n = 3 defers to the typed/exhaustive 3 x 3 sweep
VerifyReport verify_conjecture(const ConjectureOptions& opt);

std::string report_text(const VerifyReport& r);
std::string report_json(const VerifyReport& r);
std::string report_csv(const VerifyReport& r);

// CSV tables: "rho1" and "rho2" (per-element induced character values),
// "rho" (type-pair value grid), "strata" (rank/trace counts, closed and brute)
std::string table_csv(const std::string& which, int p, int f);

}  // namespace glchar
