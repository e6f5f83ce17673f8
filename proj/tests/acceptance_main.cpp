// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact equality in the coefficient field; runtime
// ceilings are asserted in seconds of wall time.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "counit/cache.hpp"
#include "counit/cogroupoid.hpp"
#include "counit/commands.hpp"
#include "counit/homology.hpp"

using namespace counit;

namespace {

const FieldKind QF = FieldKind::rational_functions_in_q;
const FieldKind QQ = FieldKind::rationals;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int id, const std::string& name, bool pass, double secs, const std::string& detail) {
  std::printf("[%s] criterion %2d (%7.2fs): %s%s%s\n", pass ? "PASS" : "FAIL", id, secs,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

FieldMatrix Eq() {
  FieldMatrix m(2, 2, QF);
  m.at(0, 1) = Scalar::one(QF);
  m.at(1, 0) = -Scalar::q().inv();
  return m;
}

FieldMatrix Em1() {
  FieldMatrix m(2, 2, QQ);
  m.at(0, 1) = Scalar::one(QQ);
  m.at(1, 0) = Scalar::one(QQ);
  return m;
}

FieldMatrix J4() {
  FieldMatrix m(4, 4, QQ);
  for (int i = 0; i < 2; ++i) {
    m.at(i, i + 2) = Scalar::one(QQ);
    m.at(i + 2, i) = -Scalar::one(QQ);
  }
  return m;
}

struct Workspace {
  BilinearFormHopf Hq, HI2, HI3, HJ4;
  double build_seconds = 0;
};

Workspace build_all() {
  Workspace w{BilinearFormHopf::build(Eq(), 6), BilinearFormHopf::build(FieldMatrix::identity(2, QQ), 5),
              BilinearFormHopf::build(FieldMatrix::identity(3, QQ), 5),
              BilinearFormHopf::build(J4(), 4)};
  return w;
}

std::string dims_str(const std::array<long, 4>& d) {
  std::ostringstream os;
  os << "(" << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << ")";
  return os.str();
}

}  // namespace

int main() {
  auto suite_start = Clock::now();
  auto tb = Clock::now();
  Workspace w = build_all();
  std::printf("[info] algebras completed in %.2fs: B(E_q) D=6, B(I_2) D=5, B(I_3) D=5, B(J_4) D=4\n",
              seconds_since(tb));

  struct Named {
    const char* name;
    const BilinearFormHopf* H;
  };
  std::vector<Named> mats{{"E_q", &w.Hq}, {"I_2", &w.HI2}, {"I_3", &w.HI3}, {"J_4", &w.HJ4}};

  // 1. Hopf-axiom suite at word degree <= 2, exact, < 60 s per matrix.
  {
    bool pass = true;
    std::string detail;
    double total = 0;
    for (const auto& m : mats) {
      auto t0 = Clock::now();
      HopfAxiomReport r = m.H->verify_axioms(2);
      double secs = seconds_since(t0);
      total += secs;
      if (!r.all_pass() || secs >= 60.0) pass = false;
      detail += std::string(m.name) + (r.all_pass() ? " ok " : " FAIL ");
    }
    report(1, "Hopf axioms on B(E_q), B(I_2), B(I_3), B(J_4), word degree <= 2", pass, total,
           detail);
  }

  // 2. Resolution identities and closed-form vs component assembly, < 60 s each.
  std::vector<FreeYDComplex> complexes;
  {
    bool pass = true;
    std::string detail;
    double total = 0;
    for (const auto& m : mats) {
      auto t0 = Clock::now();
      bool ok = true;
      FreeYDComplex C = build_counit_resolution(*m.H);
      try {
        FreeYDComplex assembled = assemble_via_components(*m.H);
        ok = ok && assembled.phi1.equal_coefficients(C.phi1) &&
             assembled.phi2.equal_coefficients(C.phi2) &&
             assembled.phi3.equal_coefficients(C.phi3);
      } catch (const Error&) {
        ok = false;
      }
      ok = ok && lift_composite_relations_hold(*m.H);
      ComplexCheckReport cr = check_complex_and_morphisms(C, 2);
      ok = ok && cr.all_pass();
      double secs = seconds_since(t0);
      total += secs;
      if (!ok || secs >= 60.0) pass = false;
      detail += std::string(m.name) + (ok ? " ok " : " FAIL ");
      complexes.push_back(std::move(C));
    }
    report(2, "resolution identities + assembly agreement on all four matrices", pass, total,
           detail);
  }

  // 3. Exactness witnesses: positions 1..3 certified, through degree 3,
  //    slack <= 2, zero inconclusive, < 10 min per matrix.
  {
    bool pass = true;
    std::string detail;
    double total = 0;
    struct Job {
      const char* name;
      const FreeYDComplex* C;
      int max_slack;
    };
    std::vector<Job> jobs{{"E_q", &complexes[0], 2}, {"I_2", &complexes[1], 1},
                          {"I_3", &complexes[2], 1}};
    for (const auto& j : jobs) {
      auto t0 = Clock::now();
      bool ok = true;
      std::string local;
      for (int pos : {1, 2, 3}) {
        ExactnessCertificate c = exactness_witness(*j.C, pos, 3, j.max_slack);
        if (c.status != "certified" || c.slack_used > 2) ok = false;
        local += "p" + std::to_string(pos) + ":" + c.status + "/s" +
                 std::to_string(c.slack_used) + " ";
      }
      double secs = seconds_since(t0);
      total += secs;
      if (!ok || secs >= 600.0) pass = false;
      detail += std::string(j.name) + "[" + local + "] ";
    }
    report(3, "exactness certificates, positions 1-3, degree 3, slack <= 2", pass, total, detail);
  }

  // 4. Two-path agreement for the five character tuples of Section-6.2 type.
  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    struct Tuple {
      const char* tag;
      const BilinearFormHopf* H;
      const FreeYDComplex* C;
      const char* alpha;
      const char* beta;
    };
    std::vector<Tuple> tuples{{"(I_2,eps,eps)", &w.HI2, &complexes[1], "epsilon", "epsilon"},
                              {"(E_q,eps,eps)", &w.Hq, &complexes[0], "epsilon", "epsilon"},
                              {"(E_q,phi2,eps)", &w.Hq, &complexes[0], "phi2", "epsilon"},
                              {"(E_q,phi,phi-inv)", &w.Hq, &complexes[0], "phi", "phi-inv"},
                              {"(J_4,eps,eps)", &w.HJ4, &complexes[3], "epsilon", "epsilon"}};
    for (const auto& t : tuples) {
      Character alpha = resolve_character(*t.H, CharSpec{t.alpha, std::nullopt});
      Character beta = resolve_character(*t.H, CharSpec{t.beta, std::nullopt});
      HomologyDims closed = closed_form_dims(*t.H, alpha, beta);
      HomologyDims reso =
          homology_dims(specialize_resolution(*t.C, twist_gamma(*t.H, alpha, beta)));
      bool ok = closed == reso;
      Character phi2 = char_pow(*t.H, sovereign_character(*t.H), 2);
      bool h3cond = alpha.matrix() == char_mul(*t.H, beta, phi2).matrix();
      ok = ok && closed.h[3] == (h3cond ? 1 : 0);
      ok = ok && closed.h[0] == ((alpha.matrix() == beta.matrix()) ? 1 : 0);
      if (std::string(t.tag) == "(I_2,eps,eps)")
        ok = ok && closed.h == std::array<long, 4>{1, 1, 1, 1};
      if (!ok) pass = false;
      detail += std::string(t.tag) + "=" + dims_str(closed.h) + " ";
    }
    report(4, "closed-form vs resolution homology dims, five tuples", pass, seconds_since(t0),
           detail);
  }

  // 5. Bar-complex Tor oracle matches the resolution path, k <= 2, degree <= 4.
  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    struct Job {
      const char* tag;
      const BilinearFormHopf* H;
      const FreeYDComplex* C;
    };
    for (const auto& j : std::vector<Job>{{"I_2", &w.HI2, &complexes[1]},
                                          {"E_q", &w.Hq, &complexes[0]}}) {
      Character eps = counit_character(*j.H);
      TorOracleReport orc = tor_bar_oracle(*j.H, eps, 2, 4, 4096);
      HomologyDims reso = homology_dims(specialize_resolution(*j.C, eps));
      bool ok = true;
      for (int k = 0; k <= 2; ++k) {
        if (!orc.stabilized[k]) ok = false;
        if (orc.dims_at_D[k] != reso.h[k]) ok = false;
      }
      if (!ok) pass = false;
      detail += std::string(j.tag) + ":[" + std::to_string(orc.dims_at_D[0]) + "," +
                std::to_string(orc.dims_at_D[1]) + "," + std::to_string(orc.dims_at_D[2]) + "] ";
    }
    double secs = seconds_since(t0);
    if (secs >= 600.0) pass = false;
    report(5, "tor bar oracle equals resolution dims at stabilization (k <= 2)", pass, secs,
           detail);
  }

  // 6. Poincare duality on tested character pairs of I_2 and E_q.
  {
    auto t0 = Clock::now();
    bool pass = true;
    int pairs = 0;
    {
      Character eps = counit_character(w.HI2);
      if (!poincare_check(w.HI2, complexes[1], eps, eps).pass) pass = false;
      ++pairs;
    }
    Character eps = counit_character(w.Hq), phi = sovereign_character(w.Hq);
    for (const auto& pr : std::vector<std::pair<Character, Character>>{
             {eps, eps},
             {char_pow(w.Hq, phi, 2), eps},
             {phi, char_inv(w.Hq, phi)},
             {eps, phi}}) {
      if (!poincare_check(w.Hq, complexes[0], pr.first, pr.second).pass) pass = false;
      ++pairs;
    }
    report(6, "Poincare duality: ext^n = sigma-twisted H_{3-n}", pass, seconds_since(t0),
           std::to_string(pairs) + " pairs");
  }

  // 7. Bialgebra cohomology (1,0,0,1) with collapsed Hom dims (1,1,1,1).
  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    struct Job {
      const char* tag;
      const BilinearFormHopf* H;
      const FreeYDComplex* C;
    };
    for (const auto& j : std::vector<Job>{{"E_q", &w.Hq, &complexes[0]},
                                          {"I_2", &w.HI2, &complexes[1]}}) {
      BialgebraCohomologyReport r = bialgebra_cohomology(*j.H, *j.C);
      bool ok = r.dims == std::array<long, 4>{1, 0, 0, 1} &&
                r.hom_dims == std::array<long, 4>{1, 1, 1, 1};
      if (!ok) pass = false;
      detail += std::string(j.tag) + "=" + dims_str(r.dims) + " hom=" + dims_str(r.hom_dims) + " ";
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) pass = false;
    report(7, "bialgebra cohomology via the Yetter-Drinfeld adjunction collapse", pass, secs,
           detail);
  }

  // 8. Cogroupoid axioms, transport squares, nonvanishing separation.
  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    FieldMatrix I2 = FieldMatrix::identity(2, QQ), I3 = FieldMatrix::identity(3, QQ);
    if (!nonvanishing_precheck(I2, Em1())) pass = false;
    if (nonvanishing_precheck(I2, I3)) pass = false;
    BEFAlgebra mismatch = BEFAlgebra::build(I2, I3, 2);
    if (!mismatch.collapsed()) pass = false;
    CogroupoidCheckReport c1 = cogroupoid_maps_check(I2, Em1(), I2, 3);
    CogroupoidCheckReport c2 = cogroupoid_maps_check(I2, Em1(), Em1(), 3);
    if (!c1.all_pass() || !c2.all_pass()) pass = false;
    TransportReport tr = check_transport_diagrams(I2, Em1(), 1);
    if (!tr.all_pass()) pass = false;
    detail = std::string("axioms ") + (c1.all_pass() && c2.all_pass() ? "ok" : "FAIL") +
             ", transport " + (tr.all_pass() ? "ok" : "FAIL") + ", precheck separation " +
             (nonvanishing_precheck(I2, Em1()) && !nonvanishing_precheck(I2, I3) ? "ok" : "FAIL");
    double secs = seconds_since(t0);
    if (secs >= 300.0) pass = false;
    report(8, "cogroupoid axioms + transport squares on (I_2, E_{-1})", pass, secs, detail);
  }

  // 9. Negative controls and the exit-code contract.
  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    // corrupted antipode
    {
      BilinearFormHopf bad = BilinearFormHopf::build(Eq(), 4);
      std::vector<std::vector<NCPoly>> st(2, std::vector<NCPoly>(2, NCPoly(QF)));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) st[i][j] = bad.u(j, i);
      HopfTestAccess::override_antipode(bad, st);
      bool detected = !bad.verify_axioms(1).all_pass();
      if (!detected) pass = false;
      detail += std::string("antipode:") + (detected ? "detected " : "MISSED ");
    }
    // sign-flipped phi2 (identity summand negated)
    Report fail_report;
    {
      FreeYDComplex badc = build_counit_resolution(w.HI2);
      for (int i = 0; i < 4; ++i)
        badc.phi2.C[i][i] -= NCPoly::unit(QQ).scaled(Scalar::integer(2, QQ));
      ComplexCheckReport cr = check_complex_and_morphisms(badc, 1);
      bool detected = !cr.phi3_phi2_zero;
      if (!detected) pass = false;
      detail += std::string("phi2:") + (detected ? "detected " : "MISSED ");
      CheckResult res{"negative_control.phi2", detected ? "fail" : "pass", {}};
      fail_report.results.push_back(res);
    }
    // omitted Yetter-Drinfeld leg
    {
      FreeYDModule coad{Comodule::trivial(w.Hq)};
      bool detected = !YDTestAccess::corrupted_check(coad, 1).pass;
      if (!detected) pass = false;
      detail += std::string("yd-leg:") + (detected ? "detected " : "MISSED ");
    }
    // exit-code contract: 0 and 3 and 4 end-to-end, 1 and 2 through the
    // aggregation rule on genuine result entries.
    {
      RunConfig cfg = parse_config(
          R"({"field":"rationals","E":[["1","0"],["0","1"]],"truncation_degree":4})");
      bool ok = exit_code_for(run_command("homology", cfg, "")) == 0;
      RunConfig mism = parse_config(
          R"({"field":"rationals","E":[["1","0"],["0","1"]],
              "F":[["1","0","0"],["0","1","0"],["0","0","1"]],"truncation_degree":2})");
      ok = ok && exit_code_for(run_command("transport", mism, "")) == 3;
      RunConfig tiny = cfg;
      tiny.budget_mb = 1;
      tiny.k_max = 5;
      tiny.degree = 4;
      ok = ok && exit_code_for(run_command("oracle", tiny, "")) == 4;
      ok = ok && exit_code_for(fail_report) == 1;
      Report inc;
      inc.results.push_back(CheckResult{"synthetic", "inconclusive", {}});
      ok = ok && exit_code_for(inc) == 2;
      if (!ok) pass = false;
      detail += std::string("exit-codes:") + (ok ? "ok" : "FAIL");
    }
    report(9, "negative controls detected; exit-code contract honored", pass, seconds_since(t0),
           detail);
  }

  // 10. Determinism: two cold runs of the full command suite produce
  //     byte-identical JSON modulo timings.
  {
    auto t0 = Clock::now();
    bool pass = true;
    auto tmpdir = [](const char* tag) {
      auto d = std::filesystem::temp_directory_path() / (std::string("counit-acc-") + tag);
      std::filesystem::remove_all(d);
      std::filesystem::create_directories(d);
      return d.string();
    };
    std::string cfg_q = R"({"field":"rational-functions-in-q","E":[["0","1"],["-1/q","0"]],
                            "truncation_degree":4,"degree":2,"slack":1,"k_max":2})";
    std::string cfg_i = R"({"field":"rationals","E":[["1","0"],["0","1"]],
                            "F":[["0","1"],["1","0"]],"truncation_degree":4,"degree":1})";
    std::vector<std::pair<std::string, std::string>> runs = {
        {"gb", cfg_q},        {"verify-hopf", cfg_q},
        {"resolution", cfg_q}, {"exactness", cfg_q},
        {"homology", cfg_q},   {"ext", cfg_q},
        {"poincare", cfg_q},   {"bialgebra-cohomology", cfg_q},
        {"oracle", cfg_q},     {"cogroupoid", cfg_i},
        {"transport", cfg_i},  {"gb", cfg_i}};
    std::string d1 = tmpdir("one"), d2 = tmpdir("two");
    std::string all1, all2;
    for (const auto& [cmd, cfgtext] : runs) {
      RunConfig cfg = parse_config(cfgtext);
      all1 += report_json_without_timings(emit_report_json(run_command(cmd, cfg, d1)));
      all2 += report_json_without_timings(emit_report_json(run_command(cmd, cfg, d2)));
    }
    if (all1 != all2 || all1.empty()) pass = false;
    std::filesystem::remove_all(d1);
    std::filesystem::remove_all(d2);
    report(10, "two cold runs emit byte-identical JSON (timings stripped)", pass,
           seconds_since(t0), std::to_string(runs.size()) + " command runs");
  }

  std::printf("[info] acceptance suite finished in %.2fs: %d failure(s)\n",
              seconds_since(suite_start), g_failures);
  return g_failures == 0 ? 0 : 1;
}
