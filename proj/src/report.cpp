#include "glchar/report.hpp"

#include "glchar/blockdim.hpp"
#include "glchar/strata.hpp"

#include "json.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace glchar {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_elem(const FieldTower& T, const FieldElement& x) {
  if (T.is_zero(x)) return "0";
  int64_t k = x.value == 0 ? T.unit_order(x.level) : x.value;
  return std::to_string(k);
}

MatF elementary_A(const FieldTower& T, int n) {
  MatF A = mat_zero(T, 1, n, n);
  A.at(0, n - 1) = T.one(1);
  return A;
}

// invertible matrix whose first column is the given nonzero vector, completed
// greedily with standard basis vectors
MatF with_first_column(const FieldTower& T, const std::vector<FieldElement>& u) {
  int n = static_cast<int>(u.size());
  MatF m = mat_zero(T, 1, n, n);
  for (int i = 0; i < n; ++i) m.at(i, 0) = u[static_cast<size_t>(i)];
  int placed = 1;
  for (int k = 0; k < n && placed < n; ++k) {
    for (int i = 0; i < n; ++i) m.at(i, placed) = T.zero(1);
    m.at(k, placed) = T.one(1);
    if (mat_rank(T, m) == placed + 1) ++placed;
  }
  for (int i = 0; i < n; ++i)
    if (placed < n) m.at(i, placed) = T.zero(1);
  return m;
}

// Change of basis carrying an arbitrary rank-one weight matrix to the standard
// corner one: factoring A = u v^T gives invertible P, Q with Q A = E P, and then
// the twisted character for A at (P^-1 m1 P, Q^-1 m2 Q) matches the one for E
// at (m1, m2).  Identity (inactive) when A already is the corner matrix.
struct Transport {
  bool active = false;
  MatF P, Pinv, Q, Qinv;
};

Transport make_transport(const FieldTower& T, const MatF& A, int n) {
  Transport tr;
  if (A == elementary_A(T, n)) return tr;
  tr.active = true;
  int i0 = -1, j0 = -1;
  for (int i = 0; i < n && i0 < 0; ++i)
    for (int j = 0; j < n; ++j)
      if (!T.is_zero(A.at(i, j))) {
        i0 = i;
        j0 = j;
        break;
      }
  FieldElement pivot_inv = T.inv(A.at(i0, j0));
  std::vector<FieldElement> u(static_cast<size_t>(n)), v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] = T.mul(A.at(i, j0), pivot_inv);
  for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = A.at(i0, j);
  tr.Qinv = with_first_column(T, u);
  tr.Q = mat_inverse(T, tr.Qinv);
  MatF W = mat_transpose(with_first_column(T, v));  // first row is v^T
  tr.P = mat_zero(T, 1, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr.P.at((i + n - 1) % n, j) = W.at(i, j);
  tr.Pinv = mat_inverse(T, tr.P);
  if (mat_mul(T, tr.Q, A) != mat_mul(T, elementary_A(T, n), tr.P))
    throw std::logic_error("rank-one factorization failed to align the weight matrix");
  return tr;
}

std::vector<int32_t> mkey(const MatF& m) {
  std::vector<int32_t> k;
  k.reserve(m.a.size());
  for (const auto& e : m.a) k.push_back(e.value);
  return k;
}

int64_t ipow64(int64_t b, int e) {
  int64_t v = 1;
  while (e-- > 0) v *= b;
  return v;
}

struct Sweeper {
  const FieldTower& T;
  const MultChar& theta;
  const AdditiveChar& psi;
  const TwistedJacquet& J;
  const std::vector<MatF>& trans1;
  const std::vector<MatF>& trans2;
  VerifyReport& rep;
  int64_t record_cap;
  const Transport& tr;
  bool classify = false;
  std::map<std::vector<int32_t>, CycloInt> chi_cache[2];
  bool pair_seen[11][11] = {};
  int64_t typeless_checks = 0;

  const CycloInt& chi(int side, const MatF& m) {
    auto& cache = chi_cache[side - 1];
    auto key = mkey(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CycloInt v = induced_char_cosets(T, psi, side == 1 ? trans1 : trans2, m);
    return cache.emplace(std::move(key), std::move(v)).first->second;
  }

  void check(const FieldElement& a, const MatF& m1, const MatF& m2, const std::string& tag) {
    MatF b1 = tr.active ? mat_mul(T, mat_mul(T, tr.Pinv, m1), tr.P) : m1;
    MatF b2 = tr.active ? mat_mul(T, mat_mul(T, tr.Qinv, m2), tr.Q) : m2;
    MatF g1 = mat_scale(T, a, b1);
    MatF g2 = mat_scale(T, a, b2);
    CycloInt lhs = twisted_char(J, g1, g2);
    CycloInt rhs = cyclo_mul(theta_eval(theta, a), cyclo_mul(chi(1, m1), chi(2, m2)));
    bool eq = cyclo_eq(lhs, rhs);
    ++rep.checked;
    if (!eq) ++rep.mismatches;
    std::string label =
        tag + " a=" + fmt_elem(T, a) + " m1=[" + format_mat(T, m1) + "] m2=[" + format_mat(T, m2) + "]";
    if (classify) {
      int t1 = classify_type_m1(T, m1);
      int t2 = classify_type_m2(T, m2);
      pair_seen[t1][t2] = true;
      if (t1 == 0 || t2 == 0) ++typeless_checks;
      label += " types=(" + std::to_string(t1) + "," + std::to_string(t2) + ")";
    }
    if (!eq || static_cast<int64_t>(rep.records.size()) < record_cap)
      rep.records.push_back({label, cyclo_to_string(lhs), cyclo_to_string(rhs), eq});
  }
};

VerifyReport run_sweep(int n, const TheoremOptions& opt, const std::string& title) {
  auto t0 = Clock::now();
  VerifyReport rep;
  rep.title = title;
  FieldTower T = FieldTower::build(opt.p, opt.f, 2 * n);
  int64_t q = T.q();
  int64_t k = opt.theta_k < 0 ? smallest_regular_k(T, 2 * n) : opt.theta_k;
  MultChar theta = make_theta(T, 2 * n, k);
  if (!is_regular(theta)) throw std::invalid_argument("theta exponent is not regular");
  AdditiveChar psi = opt.psi_c < 0 ? make_psi0_default(T) : make_psi0(T, T.from_dlog(1, opt.psi_c));
  MatF A = opt.A_literal.empty() ? elementary_A(T, n) : parse_mat(T, 1, n, n, opt.A_literal);
  CuspidalCharacter cusp(T, theta);
  TwistedJacquet J = make_twisted(T, cusp, A, psi, opt.use_kernel_formula);
  Transport tr = make_transport(T, A, n);
  std::vector<MatF> M1 = enumerate_M1(T, n);
  std::vector<MatF> M2 = enumerate_M2(T, n);
  std::vector<MatF> trans1 = coset_transversal(T, M1);
  std::vector<MatF> trans2 = coset_transversal(T, M2);

  const char* mode_name = opt.mode == SweepMode::exhaustive ? "exhaustive"
                          : opt.mode == SweepMode::typed    ? "typed"
                                                            : "sampled";
  rep.params = {
      {"q", std::to_string(q)},
      {"block size", std::to_string(n)},
      {"theta exponent", std::to_string(theta.k)},
      {"additive scale dlog", opt.psi_c < 0 ? std::string("one") : std::to_string(opt.psi_c)},
      {"A", format_mat(T, A)},
      {"mode", mode_name},
      {"kernel formula", J.use_kernel_formula ? "on" : "off"},
      {"pairs in the subgroup", std::to_string((q - 1) * int64_t(M1.size()) * int64_t(M2.size()))},
  };

  Sweeper sw{T, theta, psi, J, trans1, trans2, rep, opt.record_cap, tr};
  sw.classify = (n == 3);

  int64_t per_check = ipow64(q, n * n);
  auto budget = [&](int64_t checks) {
    if (checks > opt.max_work / per_check)
      throw std::invalid_argument("sweep needs " + std::to_string(checks) + " checks of " +
                                  std::to_string(per_check) +
                                  " terms each, over the work cap; use a lighter mode or raise the cap");
  };

  if (opt.mode == SweepMode::exhaustive) {
    budget((q - 1) * int64_t(M1.size()) * int64_t(M2.size()));
    for (int64_t dk = 0; dk < q - 1; ++dk) {
      FieldElement a = T.from_dlog(1, dk);
      for (const MatF& m1 : M1)
        for (const MatF& m2 : M2) sw.check(a, m1, m2, "exhaustive");
    }
  } else if (opt.mode == SweepMode::typed) {
    if (n != 3) throw std::invalid_argument("typed mode needs the 3 x 3 type classification");
    std::vector<std::vector<const MatF*>> b1(11), b2(11);
    for (const MatF& m : M1) b1[static_cast<size_t>(classify_type_m1(T, m))].push_back(&m);
    for (const MatF& m : M2) b2[static_cast<size_t>(classify_type_m2(T, m))].push_back(&m);
    auto reps = [](const std::vector<const MatF*>& b) {
      std::vector<const MatF*> r;
      if (!b.empty()) r.push_back(b.front());
      if (b.size() > 1) r.push_back(b.back());
      return r;
    };
    std::vector<std::vector<const MatF*>> r1(11), r2(11);
    for (int i = 0; i <= 10; ++i) {
      r1[static_cast<size_t>(i)] = reps(b1[static_cast<size_t>(i)]);
      r2[static_cast<size_t>(i)] = reps(b2[static_cast<size_t>(i)]);
    }
    int64_t checks = 0;
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j)
        checks += int64_t(r1[static_cast<size_t>(i)].size()) * int64_t(r2[static_cast<size_t>(j)].size()) * (q - 1);
    checks += int64_t(r1[0].size()) + int64_t(r2[0].size()) + int64_t(r1[0].size()) * int64_t(r2[0].size());
    budget(checks);
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j)
        for (const MatF* p1 : r1[static_cast<size_t>(i)])
          for (const MatF* p2 : r2[static_cast<size_t>(j)])
            for (int64_t dk = 0; dk < q - 1; ++dk) sw.check(T.from_dlog(1, dk), *p1, *p2, "typed");
    if (b1[4].empty() || b2[4].empty()) throw std::logic_error("identity bucket is empty");
    const MatF& u1 = *b1[4].front();
    const MatF& u2 = *b2[4].front();
    for (const MatF* p1 : r1[0]) sw.check(T.one(1), *p1, u2, "typeless");
    for (const MatF* p2 : r2[0]) sw.check(T.one(1), u1, *p2, "typeless");
    for (const MatF* p1 : r1[0])
      for (const MatF* p2 : r2[0]) sw.check(T.one(1), *p1, *p2, "typeless");
  } else {
    budget(opt.samples);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int64_t> adist(0, q - 2);
    for (int64_t s = 0; s < opt.samples; ++s) {
      MatF m1 = random_m1(T, n, rng);
      MatF m2 = random_m2(T, n, rng);
      sw.check(T.from_dlog(1, adist(rng)), m1, m2, "sampled");
    }
  }

  if (sw.classify) {
    int covered = 0;
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j) covered += sw.pair_seen[i][j] ? 1 : 0;
    rep.params.emplace_back("unipotent type pairs covered", std::to_string(covered) + "/100");
    rep.params.emplace_back("checks with a typeless side", std::to_string(sw.typeless_checks));
  }
  rep.pass = rep.checked > 0 && rep.mismatches == 0;
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace

VerifyReport verify_theorem(const TheoremOptions& opt) {
  return run_sweep(3, opt, "twisted character vs induced product character, 3 x 3 blocks");
}

VerifyReport verify_conjecture(const ConjectureOptions& opt) {
  if (opt.n < 1 || opt.n > 3) throw std::invalid_argument("block size must be 1, 2, or 3");
  TheoremOptions topt;
  topt.p = opt.p;
  topt.f = opt.f;
  topt.theta_k = opt.theta_k;
  topt.psi_c = opt.psi_c;
  topt.mode = opt.mode;
  topt.seed = opt.seed;
  topt.samples = opt.samples;
  topt.use_kernel_formula = opt.use_kernel_formula;
  topt.record_cap = opt.record_cap;
  topt.max_work = opt.max_work;
  return run_sweep(opt.n, topt,
                   "twisted character vs induced product character, " + std::to_string(opt.n) + " x " +
                       std::to_string(opt.n) + " blocks");
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << r.title << "\n";
  for (const auto& [k, v] : r.params) os << "  " << k << ": " << v << "\n";
  os << (r.pass ? "PASS" : "FAIL") << "  checked=" << r.checked << " mismatches=" << r.mismatches
     << " seconds=" << r.seconds << "\n";
  int shown = 0;
  for (const auto& rec : r.records) {
    if (rec.equal) continue;
    if (++shown > 50) {
      os << "  ... more mismatches omitted\n";
      break;
    }
    os << "  MISMATCH " << rec.label << " lhs=" << rec.lhs << " rhs=" << rec.rhs << "\n";
  }
  return os.str();
}

std::string report_json(const VerifyReport& r) {
  nlohmann::json j;
  j["title"] = r.title;
  nlohmann::json params = nlohmann::json::array();
  for (const auto& [k, v] : r.params) params.push_back({{"name", k}, {"value", v}});
  j["params"] = params;
  j["checked"] = r.checked;
  j["mismatches"] = r.mismatches;
  j["pass"] = r.pass;
  j["seconds"] = r.seconds;
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& rec : r.records)
    recs.push_back({{"label", rec.label}, {"lhs", rec.lhs}, {"rhs", rec.rhs}, {"equal", rec.equal}});
  j["records"] = recs;
  return j.dump(2);
}

namespace {

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string report_csv(const VerifyReport& r) {
  std::ostringstream os;
  os << "label,lhs,rhs,equal\n";
  for (const auto& rec : r.records)
    os << csv_escape(rec.label) << "," << csv_escape(rec.lhs) << "," << csv_escape(rec.rhs) << ","
       << (rec.equal ? 1 : 0) << "\n";
  return os.str();
}

std::string table_csv(const std::string& which, int p, int f) {
  std::ostringstream os;
  int64_t q = ipow64(p, f);
  if (which == "rho") {
    os << "type1,type2,value\n";
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j)
        os << i << "," << j << "," << (type_value(q, i) * type_value(q, j)).str() << "\n";
    return os.str();
  }
  if (which == "rho1" || which == "rho2") {
    FieldTower T = FieldTower::build(p, f, 1);
    AdditiveChar psi = make_psi0_default(T);
    bool first = (which == "rho1");
    std::vector<MatF> M = first ? enumerate_M1(T, 3) : enumerate_M2(T, 3);
    std::vector<MatF> trans = coset_transversal(T, M);
    os << "element,type,closed,cosets,model\n";
    for (const MatF& m : M) {
      int t = first ? classify_type_m1(T, m) : classify_type_m2(T, m);
      CycloInt c1 = induced_char_cosets(T, psi, trans, m);
      CycloInt c2 = induced_char_model(T, psi, trans, m);
      os << csv_escape(format_mat(T, m)) << "," << t << "," << type_value(q, t).str() << ","
         << cyclo_to_string(c1) << "," << cyclo_to_string(c2) << "\n";
    }
    return os.str();
  }
  if (which == "strata") {
    FieldTower T = FieldTower::build(p, f, 1);
    MatF A = mat_zero(T, 1, 3, 3);
    A.at(0, 0) = T.one(1);
    os << "rank,alpha,closed,brute\n";
    for (int r = 0; r <= 3; ++r) {
      os << r << ",0," << strata_count_closed_n3(q, r, true).str() << ","
         << strata_count_brute(T, A, r, T.zero(1)).str() << "\n";
      os << r << ",nonzero," << strata_count_closed_n3(q, r, false).str() << ","
         << strata_count_brute(T, A, r, T.one(1)).str() << "\n";
    }
    return os.str();
  }
  throw std::invalid_argument("unknown table; use rho1, rho2, rho, or strata");
}

}  // namespace glchar
