// Command line front end: verification sweeps over the stabiliser pairs,
// dimensions, single character values, and CSV tables.

#include "CLI11.hpp"
#include "json.hpp"

#include "glchar/report.hpp"

#include <cstdint>
#include <iostream>
#include <string>

namespace {

struct QOpt {
  int p = 2;
  int f = 1;
};

QOpt parse_q(int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  int64_t v = q;
  int64_t p = 0;
  for (int64_t c = 2; c * c <= v; ++c)
    if (v % c == 0) {
      p = c;
      break;
    }
  if (p == 0) p = v;
  int f = 0;
  while (v % p == 0) {
    v /= p;
    ++f;
  }
  if (v != 1) throw std::invalid_argument("q must be a prime power");
  return {static_cast<int>(p), f};
}

glchar::SweepMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return glchar::SweepMode::exhaustive;
  if (s == "typed") return glchar::SweepMode::typed;
  if (s == "sampled") return glchar::SweepMode::sampled;
  throw std::invalid_argument("mode must be exhaustive, typed, or sampled");
}

void print_value(const glchar::CycloInt& v, bool as_json) {
  if (as_json) {
    nlohmann::json j;
    j["value"] = glchar::cyclo_to_string(v);
    j["conductor"] = v.conductor;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : v.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << glchar::cyclo_to_string(v) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character computations on the finite general linear groups"};
  app.require_subcommand(1);

  int64_t q = 2;
  int n = 3;
  int msize = 6;
  int64_t theta_k = -1;
  int64_t psi_c = -1;
  std::string A_lit, g_lit, m1_lit, m2_lit, which;
  std::string mode_s = "exhaustive", form_s = "shifted";
  uint64_t seed = 0xC0FFEE;
  int64_t samples = 10000;
  bool kernel_formula = false, as_json = false, as_csv = false;
  int64_t record_cap = 100000;
  int64_t max_work = 4000000000;

  auto add_field = [&](CLI::App* sc) {
    sc->add_option("--q", q, "field size, a prime power")->capture_default_str();
    sc->add_option("--theta", theta_k, "multiplicative character exponent; -1 picks the smallest regular one")
        ->capture_default_str();
  };
  auto add_twist = [&](CLI::App* sc) {
    sc->add_option("--psi0", psi_c, "dlog of the additive scale c; -1 means c = 1")->capture_default_str();
    sc->add_option("--A", A_lit, "rank-one matrix literal (rows ';', entries ','; 0 or a dlog index)");
    sc->add_flag("--kernel-formula", kernel_formula, "use the block rank identity in the inner loop");
  };
  auto add_sweep = [&](CLI::App* sc) {
    sc->add_option("--mode", mode_s, "exhaustive | typed | sampled")->capture_default_str();
    sc->add_option("--seed", seed, "sampling seed")->capture_default_str();
    sc->add_option("--samples", samples, "sample count for sampled mode")->capture_default_str();
    sc->add_option("--record-cap", record_cap, "maximum stored per-check records")->capture_default_str();
    sc->add_option("--max-work", max_work, "budget in matrix-variable evaluations")->capture_default_str();
    sc->add_flag("--csv", as_csv, "CSV record output");
  };

  CLI::App* vt = app.add_subcommand("verify-theorem", "sweep the 3 x 3 block identity over the stabiliser pairs");
  add_field(vt);
  add_twist(vt);
  add_sweep(vt);
  vt->add_flag("--json", as_json, "JSON report");

  CLI::App* vc = app.add_subcommand("verify-conjecture", "sweep the n x n block identity");
  vc->add_option("--n", n, "block size: 1, 2, or 3")->capture_default_str();
  add_field(vc);
  add_twist(vc);
  add_sweep(vc);
  vc->add_flag("--json", as_json, "JSON report");

  CLI::App* dm = app.add_subcommand("dim", "twisted module dimension: the value at the identity pair");
  dm->add_option("--n", n, "block size")->capture_default_str();
  add_field(dm);
  add_twist(dm);
  dm->add_flag("--json", as_json, "JSON output");

  CLI::App* cc = app.add_subcommand("cuspidal-char", "cuspidal character value at one matrix");
  cc->add_option("--m", msize, "matrix size")->capture_default_str();
  add_field(cc);
  cc->add_option("--g", g_lit, "matrix literal")->required();
  cc->add_flag("--json", as_json, "JSON output");

  CLI::App* tc = app.add_subcommand("twisted-char", "twisted character value at one pair of blocks");
  tc->add_option("--n", n, "block size")->capture_default_str();
  add_field(tc);
  add_twist(tc);
  tc->add_option("--m1", m1_lit, "first block literal")->required();
  tc->add_option("--m2", m2_lit, "second block literal")->required();
  tc->add_option("--form", form_s, "shifted | plain")->capture_default_str();
  tc->add_flag("--json", as_json, "JSON output");

  CLI::App* tb = app.add_subcommand("tables", "CSV tables of the closed-form data");
  tb->add_option("--which", which, "rho1 | rho2 | rho | strata")->required();
  tb->add_option("--q", q, "field size, a prime power")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (vt->parsed() || vc->parsed()) {
      QOpt Q = parse_q(q);
      glchar::VerifyReport rep;
      if (vt->parsed()) {
        glchar::TheoremOptions opt;
        opt.p = Q.p;
        opt.f = Q.f;
        opt.theta_k = theta_k;
        opt.psi_c = psi_c;
        opt.A_literal = A_lit;
        opt.mode = parse_mode(mode_s);
        opt.seed = seed;
        opt.samples = samples;
        opt.use_kernel_formula = kernel_formula;
        opt.record_cap = record_cap;
        opt.max_work = max_work;
        rep = glchar::verify_theorem(opt);
      } else {
        glchar::ConjectureOptions opt;
        opt.n = n;
        opt.p = Q.p;
        opt.f = Q.f;
        opt.theta_k = theta_k;
        opt.psi_c = psi_c;
        opt.mode = parse_mode(mode_s);
        opt.seed = seed;
        opt.samples = samples;
        opt.use_kernel_formula = kernel_formula;
        opt.record_cap = record_cap;
        opt.max_work = max_work;
        rep = glchar::verify_conjecture(opt);
      }
      if (as_json) std::cout << glchar::report_json(rep);
      else if (as_csv) std::cout << glchar::report_csv(rep);
      else std::cout << glchar::report_text(rep);
      std::cout.flush();
      return rep.pass ? 0 : 1;
    }

    if (dm->parsed() || tc->parsed()) {
      QOpt Q = parse_q(q);
      glchar::FieldTower T = glchar::FieldTower::build(Q.p, Q.f, 2 * n);
      int64_t k = theta_k < 0 ? glchar::smallest_regular_k(T, 2 * n) : theta_k;
      glchar::MultChar theta = glchar::make_theta(T, 2 * n, k);
      if (!glchar::is_regular(theta)) throw std::invalid_argument("theta exponent is not regular");
      glchar::AdditiveChar psi =
          psi_c < 0 ? glchar::make_psi0_default(T) : glchar::make_psi0(T, T.from_dlog(1, psi_c));
      glchar::MatF A;
      if (A_lit.empty()) {
        A = glchar::mat_zero(T, 1, n, n);
        A.at(0, n - 1) = T.one(1);
      } else {
        A = glchar::parse_mat(T, 1, n, n, A_lit);
      }
      glchar::CuspidalCharacter cusp(T, theta);
      glchar::TwistedJacquet J = glchar::make_twisted(T, cusp, A, psi, kernel_formula);
      if (dm->parsed()) {
        glchar::BigInt d = glchar::twisted_dim(J);
        if (as_json) {
          nlohmann::json j;
          j["dim"] = d.str();
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << d.str() << "\n";
        }
        return 0;
      }
      glchar::MatF m1 = glchar::parse_mat(T, 1, n, n, m1_lit);
      glchar::MatF m2 = glchar::parse_mat(T, 1, n, n, m2_lit);
      glchar::SumForm form;
      if (form_s == "shifted") form = glchar::SumForm::shifted;
      else if (form_s == "plain") form = glchar::SumForm::plain;
      else throw std::invalid_argument("form must be shifted or plain");
      print_value(glchar::twisted_char(J, m1, m2, form), as_json);
      return 0;
    }

    if (cc->parsed()) {
      QOpt Q = parse_q(q);
      glchar::FieldTower T = glchar::FieldTower::build(Q.p, Q.f, msize);
      int64_t k = theta_k < 0 ? glchar::smallest_regular_k(T, msize) : theta_k;
      glchar::MultChar theta = glchar::make_theta(T, msize, k);
      if (!glchar::is_regular(theta)) throw std::invalid_argument("theta exponent is not regular");
      glchar::CuspidalCharacter cusp(T, theta);
      glchar::MatF g = glchar::parse_mat(T, 1, msize, msize, g_lit);
      print_value(cusp.value(g), as_json);
      return 0;
    }

    if (tb->parsed()) {
      QOpt Q = parse_q(q);
      std::cout << glchar::table_csv(which, Q.p, Q.f);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
