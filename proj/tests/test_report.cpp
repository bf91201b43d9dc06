// Verification-driver tests: the sweeps pass on the small fields, options are
// honored (modes, seeds, characters, custom weight matrix), bad input and
// budget overruns are rejected, and the rendered outputs are well formed.

#include "doctest.h"

#include "glchar/report.hpp"

#include "json.hpp"

#include <set>
#include <sstream>

using namespace glchar;

TEST_CASE("exhaustive sweep of the main comparison passes at q = 2") {
  TheoremOptions opt;
  VerifyReport r = verify_theorem(opt);
  CHECK(r.pass);
  CHECK(r.checked == 576);
  CHECK(r.mismatches == 0);
  // every record must be marked equal
  for (const auto& rec : r.records) CHECK(rec.equal);
  // param list mentions full type coverage
  bool covered = false;
  for (const auto& [k, v] : r.params)
    if (k.find("type pairs") != std::string::npos && v == "100/100") covered = true;
  CHECK(covered);
}

TEST_CASE("a second regular character and the plain-sum weight also pass") {
  TheoremOptions opt;
  opt.theta_k = 3;  // another regular exponent mod 63, Galois-inequivalent to 1
  VerifyReport r = verify_theorem(opt);
  CHECK(r.pass);
  CHECK(r.checked == 576);
}

TEST_CASE("typed sweep covers all hundred pairs at q = 3") {
  TheoremOptions opt;
  opt.p = 3;
  opt.mode = SweepMode::typed;
  VerifyReport r = verify_theorem(opt);
  CHECK(r.pass);
  CHECK(r.checked >= 100);
  bool covered = false;
  for (const auto& [k, v] : r.params)
    if (k.find("type pairs") != std::string::npos && v == "100/100") covered = true;
  CHECK(covered);
}

TEST_CASE("sampled sweep is deterministic for a fixed seed") {
  TheoremOptions a, b;
  a.p = b.p = 2;
  a.mode = b.mode = SweepMode::sampled;
  a.samples = b.samples = 200;
  a.seed = b.seed = 12345;
  VerifyReport ra = verify_theorem(a);
  VerifyReport rb = verify_theorem(b);
  CHECK(ra.pass);
  CHECK(ra.checked == 200);
  REQUIRE(ra.records.size() == rb.records.size());
  for (size_t i = 0; i < ra.records.size(); ++i)
    CHECK(ra.records[i].label == rb.records[i].label);
  TheoremOptions c = a;
  c.seed = 54321;
  VerifyReport rc = verify_theorem(c);
  bool all_same = ra.records.size() == rc.records.size();
  if (all_same)
    for (size_t i = 0; i < ra.records.size(); ++i)
      if (ra.records[i].label != rc.records[i].label) all_same = false;
  CHECK(!all_same);  // a different seed draws different pairs
}

TEST_CASE("pair sweeps for the smaller block sizes pass exhaustively") {
  for (int n : {1, 2}) {
    for (int p : {2, 3}) {
      ConjectureOptions opt;
      opt.n = n;
      opt.p = p;
      VerifyReport r = verify_conjecture(opt);
      CHECK(r.pass);
      int64_t q = p;
      // |Z x (M1 x M2 part)|: (q-1) * (|GL(n-1)| q^(n-1))^2
      int64_t gl = 1, qp = 1;
      for (int i = 0; i < n - 1; ++i) {
        int64_t qi = 1, qn = 1;
        for (int j = 0; j < n - 1; ++j) qn *= q;
        for (int j = 0; j < i; ++j) qi *= q;
        gl *= qn - qi;
        qp *= q;
      }
      CHECK(r.checked == (q - 1) * (gl * qp) * (gl * qp));
    }
  }
  // n = 3 delegates to the 3 x 3 sweep
  ConjectureOptions opt3;
  opt3.n = 3;
  VerifyReport r3 = verify_conjecture(opt3);
  CHECK(r3.pass);
  CHECK(r3.checked == 576);
  ConjectureOptions bad;
  bad.n = 4;
  CHECK_THROWS_AS(verify_conjecture(bad), std::invalid_argument);
}

TEST_CASE("a custom rank-one weight matrix passes and a rank-two one is rejected") {
  TheoremOptions opt;
  opt.A_literal = "0,0,0;0,0,0;1,0,0";  // a different rank-one choice
  VerifyReport r = verify_theorem(opt);
  CHECK(r.pass);
  TheoremOptions bad;
  bad.A_literal = "1,0,0;0,1,0;0,0,0";  // rank two
  CHECK_THROWS_AS(verify_theorem(bad), std::invalid_argument);
}

TEST_CASE("nondefault additive characters work where they exist") {
  // at q = 3 the scale c = g (dlog 0) differs from the default c = 1
  TheoremOptions opt;
  opt.p = 3;
  opt.psi_c = 0;
  opt.mode = SweepMode::sampled;
  opt.samples = 60;
  VerifyReport r = verify_theorem(opt);
  CHECK(r.pass);
  CHECK(r.checked == 60);
}

TEST_CASE("the work budget guard rejects oversized sweeps") {
  TheoremOptions opt;
  opt.p = 3;
  opt.mode = SweepMode::exhaustive;  // 373248 pairs * 3^9 evaluations
  opt.max_work = 1000000;
  CHECK_THROWS_AS(verify_theorem(opt), std::invalid_argument);
}

TEST_CASE("renderings are well formed") {
  TheoremOptions opt;
  opt.mode = SweepMode::sampled;
  opt.samples = 25;
  VerifyReport r = verify_theorem(opt);
  std::string text = report_text(r);
  CHECK(text.find("PASS") != std::string::npos);
  std::string csv = report_csv(r);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines >= 26);  // header plus one line per record
  auto parsed = nlohmann::json::parse(report_json(r));
  CHECK(parsed["pass"].get<bool>());
  CHECK(parsed["checked"].get<int64_t>() == 25);
  CHECK(parsed["records"].is_array());
  CHECK(parsed["records"].size() == 25);
}

TEST_CASE("csv tables are emitted with consistent shapes and contents") {
  // the type-pair grid: header + 100 rows, all entries products of type values
  std::string rho = table_csv("rho", 2, 1);
  std::istringstream in(rho);
  std::string line;
  std::getline(in, line);
  CHECK(line == "type1,type2,value");
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 100);

  // the per-element tables list every subgroup member
  for (const char* which : {"rho1", "rho2"}) {
    std::string t = table_csv(which, 2, 1);
    int count = -1;  // header line does not count
    std::istringstream ein(t);
    while (std::getline(ein, line))
      if (!line.empty()) ++count;
    CHECK(count == 24);  // |GL(2, F_2)| * 2^2
  }

  // strata: closed and brute columns agree line by line
  std::string st = table_csv("strata", 2, 1);
  std::istringstream sin(st);
  std::getline(sin, line);  // header
  int checked = 0;
  while (std::getline(sin, line)) {
    if (line.empty()) continue;
    // last two comma-separated fields are the two counts
    auto pos2 = line.rfind(',');
    auto pos1 = line.rfind(',', pos2 - 1);
    CHECK(line.substr(pos1 + 1, pos2 - pos1 - 1) == line.substr(pos2 + 1));
    ++checked;
  }
  CHECK(checked == 8);  // four ranks, zero/nonzero trace
  CHECK_THROWS(table_csv("nope", 2, 1));
}
